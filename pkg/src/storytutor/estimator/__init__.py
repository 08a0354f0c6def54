"""Story-point estimation: TF-IDF features plus a linear SVR."""

from .dataset import TrainingDataset, load_dataset_csv, load_dataset_json
from .evaluate import EvalReport, cross_validate
from .model import Hyperparams, StoryPointModel, predict, train
from .model_io import load_model, save_model
from .tfidf import SparseVector, Vocabulary, VocabularyConfig, build_vocabulary, tfidf_transform

__all__ = [
    "TrainingDataset",
    "load_dataset_csv",
    "load_dataset_json",
    "EvalReport",
    "cross_validate",
    "Hyperparams",
    "StoryPointModel",
    "predict",
    "train",
    "load_model",
    "save_model",
    "SparseVector",
    "Vocabulary",
    "VocabularyConfig",
    "build_vocabulary",
    "tfidf_transform",
]
