"""Issue mining: crawl a code-hosting REST API, keep closed issues with
a filled weight, and export CSV/JSON training datasets.

The crawl is resumable: a manifest records finished projects so a rerun
skips them and never duplicates rows.
"""

from __future__ import annotations

import csv
import json
import logging
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterator

import requests

from .errors import AuthFailed, MalformedIssue, ProjectNotFound, RateLimited

log = logging.getLogger(__name__)

MAX_RETRIES = 3
CSV_COLUMNS = [
    "project_id",
    "issue_id",
    "title",
    "description",
    "weight",
    "state",
    "created_at",
    "closed_at",
    "labels",
]


@dataclass(frozen=True)
class IssueRecord:
    project_id: int
    issue_id: int
    title: str
    description: str
    state: str
    weight: float
    created_at: str
    closed_at: str
    labels: tuple[str, ...]
    raw: dict[str, Any] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class MiningConfig:
    base_url: str
    project_ids: tuple[int, ...]
    token: str = ""
    page_size: int = 100
    rate_limit_per_second: float = 5.0
    csv_path: str = "dataset.csv"
    json_path: str = "dataset.json"
    manifest_path: str = "mining_manifest.json"

    def __post_init__(self) -> None:
        if not 1 <= self.page_size <= 100:
            raise ValueError("page size must be in [1, 100]")
        if self.rate_limit_per_second <= 0:
            raise ValueError("rate limit must be positive")


@dataclass(frozen=True)
class DatasetSummary:
    project_count: int
    issue_count: int
    total_story_points: float
    per_project_counts: dict[int, int]


class RateLimiter:
    """Minimum-interval limiter, safe under concurrent acquisition."""

    def __init__(self, per_second: float):
        self._interval = 1.0 / per_second
        self._lock = threading.Lock()
        self._next_at = 0.0

    def acquire(self) -> None:
        with self._lock:
            now = time.monotonic()
            wait = self._next_at - now
            self._next_at = max(now, self._next_at) + self._interval
        if wait > 0:
            time.sleep(wait)


def filter_issue(raw: dict[str, Any]) -> IssueRecord | None:
    """Keep an issue only when it is closed and its weight is filled in."""
    if "iid" not in raw and "id" not in raw:
        raise MalformedIssue("issue payload has no id")
    if "state" not in raw:
        raise MalformedIssue("issue payload has no state")
    if raw["state"] != "closed":
        return None
    weight = raw.get("weight")
    if weight is None:
        return None
    return IssueRecord(
        project_id=int(raw.get("project_id", 0)),
        issue_id=int(raw.get("iid", raw.get("id"))),
        title=str(raw.get("title", "")),
        description=str(raw.get("description") or ""),
        state=raw["state"],
        weight=float(weight),
        created_at=str(raw.get("created_at", "")),
        closed_at=str(raw.get("closed_at", "")),
        labels=tuple(raw.get("labels", ())),
        raw=raw,
    )


def _default_get_page(config: MiningConfig) -> Callable[[int, int], requests.Response]:
    session = requests.Session()
    if config.token:
        session.headers["PRIVATE-TOKEN"] = config.token

    def get_page(project_id: int, page: int) -> requests.Response:
        url = f"{config.base_url.rstrip('/')}/projects/{project_id}/issues"
        return session.get(
            url,
            params={"page": page, "per_page": config.page_size},
            timeout=30,
        )

    return get_page


def fetch_project_issues(
    config: MiningConfig,
    project_id: int,
    get_page: Callable[[int, int], requests.Response] | None = None,
    limiter: RateLimiter | None = None,
) -> Iterator[dict[str, Any]]:
    """Yield every raw issue record of a project exactly once.

    Paginates until an empty page; transient failures (429, 5xx,
    transport errors) are retried up to MAX_RETRIES with exponential
    backoff before giving up.
    """
    get_page = get_page or _default_get_page(config)
    limiter = limiter or RateLimiter(config.rate_limit_per_second)
    page = 1
    while True:
        records = _fetch_page(get_page, limiter, project_id, page)
        if not records:
            return
        yield from records
        page += 1


def _fetch_page(get_page, limiter: RateLimiter, project_id: int, page: int) -> list[dict[str, Any]]:
    backoff = 0.5
    for attempt in range(MAX_RETRIES + 1):
        limiter.acquire()
        try:
            response = get_page(project_id, page)
        except requests.RequestException as exc:
            if attempt == MAX_RETRIES:
                raise RateLimited(f"project {project_id}: transport kept failing: {exc}") from exc
            time.sleep(backoff)
            backoff *= 2
            continue
        status = response.status_code
        if status == 401:
            raise AuthFailed(f"project {project_id}: credentials rejected")
        if status == 404:
            raise ProjectNotFound(f"project {project_id} does not exist")
        if status == 429 or status >= 500:
            if attempt == MAX_RETRIES:
                raise RateLimited(f"project {project_id}: still throttled after {MAX_RETRIES} retries")
            time.sleep(backoff)
            backoff *= 2
            continue
        response.raise_for_status()
        return response.json()
    raise RateLimited(f"project {project_id}: retries exhausted")  # unreachable


def _load_manifest(path: Path) -> dict[str, Any]:
    if path.exists():
        return json.loads(path.read_text(encoding="utf-8"))
    return {"completed_projects": [], "records": []}


def mine_projects(
    config: MiningConfig,
    get_page: Callable[[int, int], requests.Response] | None = None,
) -> DatasetSummary:
    """Mine every configured project and write the CSV/JSON exports.

    Already-completed projects (per the manifest) are skipped; a failing
    project is logged and the crawl moves on. Exports are rewritten in a
    stable order (project_id, then issue_id), so identical inputs yield
    byte-identical outputs.
    """
    manifest_path = Path(config.manifest_path)
    manifest = _load_manifest(manifest_path)
    completed = set(manifest["completed_projects"])
    records = {
        (r["project_id"], r["issue_id"]): r for r in manifest["records"]
    }
    limiter = RateLimiter(config.rate_limit_per_second)

    per_project: dict[int, int] = {pid: 0 for pid in config.project_ids}
    for project_id in config.project_ids:
        if project_id in completed:
            continue
        try:
            for raw in fetch_project_issues(config, project_id, get_page, limiter):
                raw = dict(raw)
                raw.setdefault("project_id", project_id)
                record = filter_issue(raw)
                if record is not None:
                    records[(record.project_id, record.issue_id)] = _record_dict(record)
        except (AuthFailed, ProjectNotFound, RateLimited) as exc:
            log.error("project %s failed: %s", project_id, exc)
            continue
        completed.add(project_id)

    ordered = [records[key] for key in sorted(records)]
    for rec in ordered:
        pid = rec["project_id"]
        per_project[pid] = per_project.get(pid, 0) + 1

    _write_csv(Path(config.csv_path), ordered)
    _write_json(Path(config.json_path), ordered)
    manifest_path.write_text(
        json.dumps(
            {"completed_projects": sorted(completed), "records": ordered},
            sort_keys=True,
        ),
        encoding="utf-8",
    )
    return DatasetSummary(
        project_count=len(config.project_ids),
        issue_count=len(ordered),
        total_story_points=sum(r["weight"] for r in ordered),
        per_project_counts=per_project,
    )


def _record_dict(record: IssueRecord) -> dict[str, Any]:
    return {
        "project_id": record.project_id,
        "issue_id": record.issue_id,
        "title": record.title,
        "description": record.description,
        "weight": record.weight,
        "state": record.state,
        "created_at": record.created_at,
        "closed_at": record.closed_at,
        "labels": list(record.labels),
        "raw": record.raw,
    }


def _write_csv(path: Path, ordered: list[dict[str, Any]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, quoting=csv.QUOTE_ALL)
        writer.writerow(CSV_COLUMNS)
        for rec in ordered:
            writer.writerow(
                [
                    rec["project_id"],
                    rec["issue_id"],
                    rec["title"],
                    rec["description"],
                    rec["weight"],
                    rec["state"],
                    rec["created_at"],
                    rec["closed_at"],
                    ";".join(rec["labels"]),
                ]
            )


def _write_json(path: Path, ordered: list[dict[str, Any]]) -> None:
    path.write_text(json.dumps(ordered, indent=2, sort_keys=True), encoding="utf-8")


def format_summary(summary: DatasetSummary) -> str:
    lines = [
        f"projects mined: {summary.project_count}",
        f"issues exported: {summary.issue_count}",
        f"total story points: {summary.total_story_points:g}",
    ]
    for pid in sorted(summary.per_project_counts):
        lines.append(f"  project {pid}: {summary.per_project_counts[pid]} issues")
    return "\n".join(lines)
