"""storytutor: readability scoring, story-point estimation, and
improvement recommendations for agile user stories."""

__version__ = "0.1.0"

from .textmetrics import ReadabilityReport, TextStats, readability_report

__all__ = ["ReadabilityReport", "TextStats", "readability_report", "__version__"]
