"""Command-line interface: analyze, train, mine, serve."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .errors import (
    BadFoldCount,
    CorruptModel,
    EmptyDataset,
    EmptyText,
    InvalidModel,
    NonFiniteLoss,
    StoryTutorError,
    VersionMismatch,
)
from .estimator import Hyperparams, cross_validate, load_model, save_model, train
from .estimator.dataset import load_dataset
from .estimator.tfidf import VocabularyConfig
from .miner import MiningConfig, format_summary, mine_projects
from .recommender import EndpointConfig
from .server import ServerConfig, analyze_story, create_app, result_to_dict

EXIT_INPUT_NOT_FOUND = 3
EXIT_BAD_MODEL = 4
EXIT_EMPTY_TEXT = 5
EXIT_MINING_FAILED = 6
EXIT_TRAINING_FAILED = 7

DEFAULT_MODEL_PATH = "storypoint_model.json"


def _endpoint_options(func):
    func = click.option(
        "--llm-base-url",
        envvar="STORYTUTOR_LLM_BASE_URL",
        default="",
        help="Chat-completion endpoint base URL (empty = offline recommender).",
    )(func)
    func = click.option(
        "--llm-model",
        envvar="STORYTUTOR_LLM_MODEL",
        default="gpt-3.5-turbo",
        show_default=True,
    )(func)
    func = click.option(
        "--llm-api-key", envvar="STORYTUTOR_LLM_API_KEY", default="", help="Bearer token."
    )(func)
    func = click.option(
        "--llm-timeout", envvar="STORYTUTOR_LLM_TIMEOUT", default=30.0, show_default=True
    )(func)
    return func


def _endpoint(llm_base_url, llm_model, llm_api_key, llm_timeout) -> EndpointConfig:
    return EndpointConfig(
        base_url=llm_base_url,
        model=llm_model,
        api_key=llm_api_key,
        timeout_seconds=llm_timeout,
    )


@click.group()
@click.version_option(__version__)
def main():
    """User story tutor: readability, story-point estimates, recommendations."""


@main.command()
@click.argument("text_or_file")
@click.option("--model", "model_path", default=DEFAULT_MODEL_PATH, show_default=True)
@click.option("--as-json", is_flag=True, help="Machine-readable JSON output.")
@click.option("--report-dir", default=None, help="Write CSV + figure report files here.")
@_endpoint_options
def analyze(text_or_file, model_path, as_json, report_dir, **endpoint_opts):
    """Analyze a story given inline or as a path to a text file."""
    path = Path(text_or_file)
    text = path.read_text(encoding="utf-8") if path.is_file() else text_or_file
    if not text.strip():
        raise click.exceptions.Exit(EXIT_EMPTY_TEXT)
    try:
        model = load_model(model_path)
    except (OSError, CorruptModel, VersionMismatch, InvalidModel) as exc:
        click.echo(f"error: cannot load model {model_path}: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_BAD_MODEL)
    try:
        result = analyze_story(text, model, _endpoint(**endpoint_opts))
    except EmptyText:
        click.echo("error: story text is empty", err=True)
        raise click.exceptions.Exit(EXIT_EMPTY_TEXT)

    if as_json:
        click.echo(json.dumps(result_to_dict(result), indent=2))
    else:
        report = result.readability
        click.echo("Readability")
        click.echo(f"  Gunning Fog:            {report.gunning_fog:8.2f}")
        click.echo(f"  Flesch Reading Ease:    {report.flesch_reading_ease:8.2f}")
        click.echo(f"  Coleman-Liau:           {report.coleman_liau:8.2f}")
        click.echo(f"  Automated Readability:  {report.automated_readability:8.2f}")
        click.echo(f"  Final Result:           {report.final_result:8.2f}")
        click.echo(f"Story points: {result.story_points:.2f}")
        click.echo(f"Recommendation ({result.recommendation.source.value}):")
        click.echo(f"  {result.recommendation.text}")
    if report_dir:
        from .report import write_analysis_report

        for written in write_analysis_report(result, report_dir):
            click.echo(f"wrote {written}", err=True)


@main.command("train")
@click.argument("dataset_path")
@click.option("--output", "-o", default=DEFAULT_MODEL_PATH, show_default=True)
@click.option("--k-folds", default=5, show_default=True)
@click.option("--regularization", "-c", default=1.0, show_default=True)
@click.option("--epsilon", default=0.5, show_default=True)
@click.option("--epochs", default=200, show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--min-df", default=1, show_default=True)
@click.option("--max-vocab", default=None, type=int)
@click.option("--include-title", is_flag=True, help="Feed title + description to the model.")
@click.option("--report-dir", default=None, help="Write CSV + figure report files here.")
def train_command(
    dataset_path,
    output,
    k_folds,
    regularization,
    epsilon,
    epochs,
    seed,
    min_df,
    max_vocab,
    include_title,
    report_dir,
):
    """Cross-validate on DATASET_PATH, then train on all data and save."""
    if not Path(dataset_path).is_file():
        click.echo(f"error: dataset not found: {dataset_path}", err=True)
        raise click.exceptions.Exit(EXIT_INPUT_NOT_FOUND)
    hp = Hyperparams(
        regularization=regularization,
        epsilon=epsilon,
        epochs=epochs,
        seed=seed,
        include_title=include_title,
        vocabulary=VocabularyConfig(min_document_frequency=min_df, max_vocabulary_size=max_vocab),
    )
    try:
        dataset = load_dataset(dataset_path, include_title=include_title)
        eval_report = cross_validate(dataset, k_folds, hp, seed=seed)
        model = train(dataset, hp)
    except (EmptyDataset, BadFoldCount, NonFiniteLoss, ValueError) as exc:
        click.echo(f"error: training failed: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_TRAINING_FAILED)
    save_model(model, output)

    click.echo(f"{eval_report.fold_count}-fold cross-validation (seed {eval_report.seed})")
    for i, mae in enumerate(eval_report.fold_mae, start=1):
        click.echo(f"  fold {i}: MAE {mae:.3f}")
    click.echo(f"  mean MAE:     {eval_report.mean_mae:.3f}")
    click.echo(f"  baseline MAE: {eval_report.baseline_mae:.3f} (predict the mean)")
    click.echo(f"model written to {output}")
    if report_dir:
        from .report import write_eval_report

        for written in write_eval_report(eval_report, report_dir):
            click.echo(f"wrote {written}", err=True)


@main.command()
@click.argument("config_path")
def mine(config_path):
    """Mine issues per a JSON config file and export CSV/JSON datasets."""
    if not Path(config_path).is_file():
        click.echo(f"error: config not found: {config_path}", err=True)
        raise click.exceptions.Exit(EXIT_INPUT_NOT_FOUND)
    raw = json.loads(Path(config_path).read_text(encoding="utf-8"))
    try:
        config = MiningConfig(
            base_url=raw["base_url"],
            project_ids=tuple(raw["project_ids"]),
            token=raw.get("token", ""),
            page_size=raw.get("page_size", 100),
            rate_limit_per_second=raw.get("rate_limit_per_second", 5.0),
            csv_path=raw.get("csv_path", "dataset.csv"),
            json_path=raw.get("json_path", "dataset.json"),
            manifest_path=raw.get("manifest_path", "mining_manifest.json"),
        )
        summary = mine_projects(config)
    except (KeyError, ValueError, StoryTutorError, OSError) as exc:
        click.echo(f"error: mining failed: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_MINING_FAILED)
    click.echo(format_summary(summary))


@main.command()
@click.option("--model", "model_path", default=DEFAULT_MODEL_PATH, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@_endpoint_options
def serve(model_path, host, port, **endpoint_opts):
    """Start the HTTP API (POST /analyze, GET /health)."""
    if not Path(model_path).is_file():
        click.echo(f"error: model file not found: {model_path}", err=True)
        raise click.exceptions.Exit(EXIT_BAD_MODEL)
    config = ServerConfig(model_path=model_path, endpoint=_endpoint(**endpoint_opts))
    try:
        app = create_app(config)
    except (CorruptModel, VersionMismatch, InvalidModel) as exc:
        click.echo(f"error: cannot load model {model_path}: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_BAD_MODEL)
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
