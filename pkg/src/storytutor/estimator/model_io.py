"""Single-file model persistence: versioned JSON with an integrity checksum."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from ..errors import CorruptModel, VersionMismatch
from .model import MODEL_FORMAT_VERSION, Hyperparams, StoryPointModel, validate_model
from .tfidf import Vocabulary, VocabularyConfig


def _payload(model: StoryPointModel) -> dict:
    terms = sorted(model.vocabulary.term_to_index, key=model.vocabulary.term_to_index.get)
    hp = model.hyperparams
    return {
        "format_version": model.format_version,
        "hyperparams": {
            "regularization": hp.regularization,
            "epsilon": hp.epsilon,
            "learning_rate": hp.learning_rate,
            "learning_rate_decay": hp.learning_rate_decay,
            "epochs": hp.epochs,
            "seed": hp.seed,
            "include_title": hp.include_title,
            "min_document_frequency": hp.vocabulary.min_document_frequency,
            "max_vocabulary_size": hp.vocabulary.max_vocabulary_size,
        },
        "terms": terms,
        "idf": list(model.vocabulary.idf),
        "weights": model.weights.tolist(),
        "bias": model.bias,
    }


def _checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def save_model(model: StoryPointModel, path: str | Path) -> None:
    validate_model(model)
    payload = _payload(model)
    document = {"checksum": _checksum(payload), **payload}
    Path(path).write_text(json.dumps(document), encoding="utf-8")


def load_model(path: str | Path) -> StoryPointModel:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read model file {path}: {exc}") from exc
    try:
        document = json.loads(raw)
        checksum = document.pop("checksum")
        version = document["format_version"]
    except (json.JSONDecodeError, KeyError, AttributeError) as exc:
        raise CorruptModel(f"model file {path} failed to parse") from exc
    if version != MODEL_FORMAT_VERSION:
        raise VersionMismatch(f"unsupported model format_version {version}")
    if checksum != _checksum(document):
        raise CorruptModel(f"model file {path} failed its integrity check")

    hp_raw = document["hyperparams"]
    hp = Hyperparams(
        regularization=hp_raw["regularization"],
        epsilon=hp_raw["epsilon"],
        learning_rate=hp_raw["learning_rate"],
        learning_rate_decay=hp_raw["learning_rate_decay"],
        epochs=hp_raw["epochs"],
        seed=hp_raw["seed"],
        include_title=hp_raw["include_title"],
        vocabulary=VocabularyConfig(
            min_document_frequency=hp_raw["min_document_frequency"],
            max_vocabulary_size=hp_raw["max_vocabulary_size"],
        ),
    )
    vocab = Vocabulary(
        term_to_index={t: i for i, t in enumerate(document["terms"])},
        idf=list(document["idf"]),
        config=hp.vocabulary,
    )
    model = StoryPointModel(
        vocabulary=vocab,
        weights=np.asarray(document["weights"], dtype=float),
        bias=float(document["bias"]),
        hyperparams=hp,
        format_version=version,
    )
    validate_model(model)
    return model
