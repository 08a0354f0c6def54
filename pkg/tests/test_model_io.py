import json

import numpy as np
import pytest

from storytutor.errors import CorruptModel, VersionMismatch
from storytutor.estimator import TrainingDataset, load_model, predict, save_model, train


@pytest.fixture(scope="module")
def model():
    texts = ("fix the login page", "refactor billing service", "export report data")
    return train(TrainingDataset(texts=texts * 5, targets=(1.0, 8.0, 3.0) * 5))


def test_round_trip_identical(model, tmp_path):
    path = tmp_path / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    assert np.array_equal(loaded.weights, model.weights)
    assert loaded.bias == model.bias
    assert loaded.vocabulary.term_to_index == model.vocabulary.term_to_index
    for text in ("fix the login page", "unknown words here", "refactor service"):
        assert predict(loaded, text) == predict(model, text)


def test_truncated_file_is_corrupt(model, tmp_path):
    path = tmp_path / "model.json"
    save_model(model, path)
    path.write_text(path.read_text()[: path.stat().st_size // 2])
    with pytest.raises(CorruptModel):
        load_model(path)


def test_tampered_payload_fails_checksum(model, tmp_path):
    path = tmp_path / "model.json"
    save_model(model, path)
    doc = json.loads(path.read_text())
    doc["bias"] = doc["bias"] + 1.0
    path.write_text(json.dumps(doc))
    with pytest.raises(CorruptModel):
        load_model(path)


def test_unknown_version_rejected(model, tmp_path):
    path = tmp_path / "model.json"
    save_model(model, path)
    doc = json.loads(path.read_text())
    doc["format_version"] = 99
    path.write_text(json.dumps(doc))
    with pytest.raises(VersionMismatch):
        load_model(path)


def test_missing_file_is_io_error(tmp_path):
    with pytest.raises(OSError):
        load_model(tmp_path / "nope.json")
