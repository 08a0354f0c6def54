"""Readability scoring for user stories.

Four classic indexes (Gunning Fog, Flesch Reading Ease, Coleman-Liau,
Automated Readability) computed from one shared set of surface counts,
plus their arithmetic mean as a single combined score.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DegenerateStats, EmptyText

VOWELS = frozenset("aeiouy")

_WORD_RE = re.compile(r"[a-z0-9]+(?:['\-][a-z0-9]+)*", re.IGNORECASE)


@dataclass(frozen=True)
class TextStats:
    """Surface counts extracted from a story text.

    character_count covers letters and digits only; complex words are
    words of three or more syllables.
    """

    sentence_count: int
    word_count: int
    character_count: int
    syllable_count: int
    complex_word_count: int


@dataclass(frozen=True)
class ReadabilityReport:
    gunning_fog: float
    flesch_reading_ease: float
    coleman_liau: float
    automated_readability: float
    final_result: float
    stats: TextStats


def tokenize_sentences(text: str) -> list[str]:
    """Split text on '.', '!', '?' terminator runs.

    A trailing fragment with no terminator still counts as one sentence,
    so a bare user story ("As a user, I want login") is never empty.
    """
    if not text or not text.strip():
        raise EmptyText("text is empty or whitespace-only")
    sentences = []
    current: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        current.append(ch)
        if ch in ".!?":
            # consume the whole terminator run ("...", "?!")
            while i + 1 < n and text[i + 1] in ".!?":
                i += 1
                current.append(text[i])
            sentence = "".join(current).strip()
            if sentence:
                sentences.append(sentence)
            current = []
        i += 1
    tail = "".join(current).strip()
    if tail:
        sentences.append(tail)
    return sentences


def tokenize_words(text: str) -> list[str]:
    """Lowercased maximal runs of letters/digits, keeping internal
    apostrophes and hyphens; all other punctuation discarded."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def count_syllables(word: str) -> int:
    """Vowel-group heuristic.

    Counts maximal vowel groups (a, e, i, o, u, y), then drops one for a
    terminal silent 'e'. A trailing consonant+"le" keeps its 'e' (the
    "-ble"/"-tle" endings are syllabic). Never returns less than 1.
    """
    if not word:
        raise ValueError("word must be non-empty")
    w = word.lower()
    groups = 0
    prev_vowel = False
    for ch in w:
        is_vowel = ch in VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    silent_e = (
        len(w) >= 2
        and w.endswith("e")
        and w[-2] not in VOWELS
        and not (len(w) >= 3 and w.endswith("le") and w[-3] not in VOWELS)
    )
    if silent_e and groups > 1:
        groups -= 1
    return max(groups, 1)


def compute_stats(text: str) -> TextStats:
    """Extract all five counts with the tokenizers above."""
    sentences = tokenize_sentences(text)
    words = tokenize_words(text)
    syllables = 0
    complex_words = 0
    characters = 0
    for word in words:
        characters += sum(1 for ch in word if ch.isalnum())
        s = count_syllables(word)
        syllables += s
        if s >= 3:
            complex_words += 1
    return TextStats(
        sentence_count=len(sentences),
        word_count=len(words),
        character_count=characters,
        syllable_count=syllables,
        complex_word_count=complex_words,
    )


def _require(stats: TextStats, need_sentences: bool = True) -> None:
    if stats.word_count <= 0:
        raise DegenerateStats("word_count must be positive")
    if need_sentences and stats.sentence_count <= 0:
        raise DegenerateStats("sentence_count must be positive")


def gunning_fog(stats: TextStats) -> float:
    _require(stats)
    return 0.4 * (
        stats.word_count / stats.sentence_count
        + 100.0 * stats.complex_word_count / stats.word_count
    )


def flesch_reading_ease(stats: TextStats) -> float:
    _require(stats)
    return (
        206.835
        - 1.015 * stats.word_count / stats.sentence_count
        - 84.6 * stats.syllable_count / stats.word_count
    )


def coleman_liau(stats: TextStats) -> float:
    _require(stats, need_sentences=False)
    if stats.sentence_count <= 0:
        raise DegenerateStats("sentence_count must be positive")
    letters_per_100 = 100.0 * stats.character_count / stats.word_count
    sentences_per_100 = 100.0 * stats.sentence_count / stats.word_count
    return 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8


def automated_readability(stats: TextStats) -> float:
    _require(stats)
    return (
        4.71 * stats.character_count / stats.word_count
        + 0.5 * stats.word_count / stats.sentence_count
        - 21.43
    )


def readability_report(text: str) -> ReadabilityReport:
    """Score a story: the four indexes plus their arithmetic mean."""
    stats = compute_stats(text)
    fog = gunning_fog(stats)
    flesch = flesch_reading_ease(stats)
    cli = coleman_liau(stats)
    ari = automated_readability(stats)
    return ReadabilityReport(
        gunning_fog=fog,
        flesch_reading_ease=flesch,
        coleman_liau=cli,
        automated_readability=ari,
        final_result=(fog + flesch + cli + ari) / 4.0,
        stats=stats,
    )
