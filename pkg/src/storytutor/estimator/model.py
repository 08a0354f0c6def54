"""Linear support-vector regression trained by batch subgradient descent.

Objective: (1/2)||w||^2 + C * sum_i max(0, |y_i - (w.x_i + b)| - eps).
Updates use the mean-loss scaling of the same objective so the step size
is independent of dataset size; weights start at zero, so training is
fully deterministic for a given dataset, hyperparameters, and seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyDataset, InvalidModel, NonFiniteLoss
from .dataset import TrainingDataset
from .tfidf import SparseVector, Vocabulary, VocabularyConfig, build_vocabulary, tfidf_transform

MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Hyperparams:
    regularization: float = 1.0     # C
    epsilon: float = 0.5            # insensitive-tube half width
    learning_rate: float = 0.5
    learning_rate_decay: float = 0.01   # eta_t = lr / (1 + decay * t)
    epochs: int = 200
    seed: int = 42
    include_title: bool = False
    vocabulary: VocabularyConfig = field(default_factory=VocabularyConfig)


@dataclass(frozen=True)
class StoryPointModel:
    vocabulary: Vocabulary
    weights: np.ndarray
    bias: float
    hyperparams: Hyperparams
    format_version: int = MODEL_FORMAT_VERSION


def _densify(vec: SparseVector, size: int) -> np.ndarray:
    dense = np.zeros(size)
    if vec.indexes:
        dense[list(vec.indexes)] = vec.values
    return dense


def _objective(w: np.ndarray, b: float, x: np.ndarray, y: np.ndarray, hp: Hyperparams) -> float:
    residual = y - (x @ w + b)
    slack = np.maximum(0.0, np.abs(residual) - hp.epsilon)
    return 0.5 * float(w @ w) + hp.regularization * float(slack.sum())


def train(dataset: TrainingDataset, hyperparams: Hyperparams | None = None) -> StoryPointModel:
    """Fit the TF-IDF vocabulary and the linear SVR on the full dataset."""
    if dataset is None or len(dataset) == 0:
        raise EmptyDataset("cannot train on an empty dataset")
    hp = hyperparams or Hyperparams()
    vocab = build_vocabulary(list(dataset.texts), hp.vocabulary)
    n, v = len(dataset), len(vocab)
    x = np.zeros((n, v))
    for i, text in enumerate(dataset.texts):
        x[i] = _densify(tfidf_transform(text, vocab), v)
    y = np.asarray(dataset.targets)

    # mean-loss scaling: lambda = 1 / (C * n) keeps the same minimizer
    lam = 1.0 / (hp.regularization * n)
    w = np.zeros(v)
    b = 0.0
    for epoch in range(hp.epochs):
        eta = hp.learning_rate / (1.0 + hp.learning_rate_decay * epoch)
        residual = y - (x @ w + b)
        outside = np.abs(residual) > hp.epsilon
        sign = np.sign(residual) * outside
        grad_w = lam * w - (x.T @ sign) / n
        grad_b = -float(sign.sum()) / n
        w -= eta * grad_w
        b -= eta * grad_b
        loss = _objective(w, b, x, y, hp)
        if not math.isfinite(loss):
            raise NonFiniteLoss(f"training diverged at epoch {epoch}")
    return StoryPointModel(vocabulary=vocab, weights=w, bias=b, hyperparams=hp)


def validate_model(model: StoryPointModel) -> None:
    if model.weights.shape != (len(model.vocabulary),):
        raise InvalidModel("weight vector length does not match vocabulary size")
    if not np.all(np.isfinite(model.weights)) or not math.isfinite(model.bias):
        raise InvalidModel("model contains non-finite values")


def predict(model: StoryPointModel, text: str) -> float:
    """Story points for a text, clamped to [0, 100]."""
    validate_model(model)
    vec = tfidf_transform(text, model.vocabulary)
    raw = model.bias
    for idx, val in zip(vec.indexes, vec.values):
        raw += model.weights[idx] * val
    return min(max(float(raw), 0.0), 100.0)
