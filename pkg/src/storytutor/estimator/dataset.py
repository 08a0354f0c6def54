"""Training dataset loading: CSV with title,description,weight columns
and the equivalent JSON array form."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import EmptyDataset


@dataclass(frozen=True)
class TrainingDataset:
    """(story text, story points) pairs; every target within [0, 100]."""

    texts: tuple[str, ...]
    targets: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.texts:
            raise EmptyDataset("dataset must be non-empty")
        if len(self.texts) != len(self.targets):
            raise ValueError("texts and targets must have equal length")
        for y in self.targets:
            if not 0.0 <= y <= 100.0:
                raise ValueError(f"story points {y} outside [0, 100]")

    def __len__(self) -> int:
        return len(self.texts)


def _story_text(title: str, description: str, include_title: bool) -> str:
    if include_title and title:
        return f"{title} {description}".strip()
    return description


def load_dataset_csv(path: str | Path, include_title: bool = False) -> TrainingDataset:
    """Load `title,description,weight` rows; weight is the story points."""
    texts, targets = [], []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            texts.append(_story_text(row.get("title", ""), row.get("description", ""), include_title))
            targets.append(float(row["weight"]))
    return TrainingDataset(texts=tuple(texts), targets=tuple(targets))


def load_dataset_json(path: str | Path, include_title: bool = False) -> TrainingDataset:
    """Load a JSON array of {title, description, weight} records."""
    with open(path, encoding="utf-8") as fh:
        records = json.load(fh)
    texts, targets = [], []
    for rec in records:
        texts.append(_story_text(rec.get("title", ""), rec.get("description", ""), include_title))
        targets.append(float(rec["weight"]))
    return TrainingDataset(texts=tuple(texts), targets=tuple(targets))


def load_dataset(path: str | Path, include_title: bool = False) -> TrainingDataset:
    """Dispatch on file extension (.json vs CSV)."""
    if str(path).lower().endswith(".json"):
        return load_dataset_json(path, include_title)
    return load_dataset_csv(path, include_title)
