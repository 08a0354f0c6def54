"""TF-IDF vectorizer over the story word tokenizer.

idf(t) = ln((1 + N) / (1 + df(t))) + 1, so every idf stays positive;
vectors are raw counts times idf, L2-normalized.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from ..errors import EmptyCorpus
from ..textmetrics import tokenize_words


@dataclass(frozen=True)
class VocabularyConfig:
    min_document_frequency: int = 1
    max_vocabulary_size: int | None = None


@dataclass(frozen=True)
class Vocabulary:
    term_to_index: dict[str, int]
    idf: list[float]
    config: VocabularyConfig = field(default_factory=VocabularyConfig)

    def __len__(self) -> int:
        return len(self.term_to_index)


@dataclass(frozen=True)
class SparseVector:
    """Ordered (index, value) pairs with strictly increasing indexes."""

    indexes: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.indexes) != len(self.values):
            raise ValueError("indexes and values must have equal length")
        if any(b <= a for a, b in zip(self.indexes, self.indexes[1:])):
            raise ValueError("indexes must be strictly increasing")


def build_vocabulary(corpus: list[str], config: VocabularyConfig | None = None) -> Vocabulary:
    """Build the term index and idf weights from a document corpus.

    Terms below the minimum document frequency are dropped; when a size
    cap is set, the most document-frequent terms win (ties by term, so
    builds are deterministic).
    """
    if not corpus:
        raise EmptyCorpus("corpus must contain at least one document")
    config = config or VocabularyConfig()
    df: Counter[str] = Counter()
    for doc in corpus:
        df.update(set(tokenize_words(doc)))
    terms = [t for t, c in df.items() if c >= config.min_document_frequency]
    if config.max_vocabulary_size is not None and len(terms) > config.max_vocabulary_size:
        terms.sort(key=lambda t: (-df[t], t))
        terms = terms[: config.max_vocabulary_size]
    terms.sort()
    n_docs = len(corpus)
    idf = [math.log((1 + n_docs) / (1 + df[t])) + 1.0 for t in terms]
    return Vocabulary(
        term_to_index={t: i for i, t in enumerate(terms)},
        idf=idf,
        config=config,
    )


def tfidf_transform(text: str, vocabulary: Vocabulary) -> SparseVector:
    """Raw counts times idf, L2-normalized.

    Out-of-vocabulary tokens are ignored; an all-OOV text maps to the
    zero vector.
    """
    counts: Counter[int] = Counter()
    for token in tokenize_words(text):
        idx = vocabulary.term_to_index.get(token)
        if idx is not None:
            counts[idx] += 1
    if not counts:
        return SparseVector(indexes=(), values=())
    indexes = tuple(sorted(counts))
    weighted = [counts[i] * vocabulary.idf[i] for i in indexes]
    norm = math.sqrt(sum(v * v for v in weighted))
    return SparseVector(indexes=indexes, values=tuple(v / norm for v in weighted))
