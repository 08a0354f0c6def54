"""Exception hierarchy shared across the tutor modules."""


class StoryTutorError(Exception):
    """Base class for all storytutor errors."""


class EmptyText(StoryTutorError):
    """Input text is empty or whitespace-only."""


class DegenerateStats(StoryTutorError):
    """Text statistics violate a formula precondition (zero divisor)."""


class EmptyCorpus(StoryTutorError):
    """Vocabulary construction received no documents."""


class EmptyDataset(StoryTutorError):
    """Training received no examples."""


class NonFiniteLoss(StoryTutorError):
    """Training loss diverged to inf/nan."""


class BadFoldCount(StoryTutorError):
    """Cross-validation fold count outside [2, len(dataset)]."""


class InvalidModel(StoryTutorError):
    """Model failed validation (non-finite values, shape mismatch)."""


class VersionMismatch(StoryTutorError):
    """Model file format_version is not supported."""


class CorruptModel(StoryTutorError):
    """Model file failed to parse or its checksum does not match."""


class MalformedIssue(StoryTutorError):
    """Issue payload is missing mandatory fields."""


class AuthFailed(StoryTutorError):
    """Issue API rejected the configured credentials."""


class ProjectNotFound(StoryTutorError):
    """Issue API has no project with the requested id."""


class RateLimited(StoryTutorError):
    """Issue API kept rate-limiting after all retries."""
