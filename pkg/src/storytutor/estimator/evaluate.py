"""Cross-validated MAE evaluation with a predict-the-mean baseline."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BadFoldCount
from .dataset import TrainingDataset
from .model import Hyperparams, predict, train


@dataclass(frozen=True)
class EvalReport:
    fold_mae: tuple[float, ...]
    mean_mae: float
    baseline_mae: float
    fold_count: int
    seed: int


def cross_validate(
    dataset: TrainingDataset,
    k: int,
    hyperparams: Hyperparams | None = None,
    seed: int = 42,
) -> EvalReport:
    """Seeded-shuffle k-fold MAE.

    Each fold rebuilds the vocabulary from its training split only, so
    held-out terms never leak into the features. The baseline predicts
    the training-split mean for every held-out story.
    """
    if not 2 <= k <= len(dataset):
        raise BadFoldCount(f"fold count {k} outside [2, {len(dataset)}]")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(dataset))
    folds = np.array_split(order, k)

    fold_mae = []
    baseline_errors: list[float] = []
    for fold in folds:
        held = set(int(i) for i in fold)
        train_idx = [i for i in order if int(i) not in held]
        train_split = TrainingDataset(
            texts=tuple(dataset.texts[i] for i in train_idx),
            targets=tuple(dataset.targets[i] for i in train_idx),
        )
        model = train(train_split, hyperparams)
        train_mean = float(np.mean(train_split.targets))
        errors = []
        for i in fold:
            y = dataset.targets[int(i)]
            errors.append(abs(y - predict(model, dataset.texts[int(i)])))
            baseline_errors.append(abs(y - train_mean))
        fold_mae.append(float(np.mean(errors)))

    return EvalReport(
        fold_mae=tuple(fold_mae),
        mean_mae=float(np.mean(fold_mae)),
        baseline_mae=float(np.mean(baseline_errors)),
        fold_count=k,
        seed=seed,
    )
