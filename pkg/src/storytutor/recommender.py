"""Improvement recommendations for user stories.

Primary path queries any chat-completion-compatible endpoint; on any
transport or server failure the module falls back to a deterministic
rule-based recommender so the tutor always answers.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from enum import Enum

import requests

from .errors import EmptyText
from .textmetrics import ReadabilityReport, readability_report

log = logging.getLogger(__name__)

SYSTEM_PROMPT = (
    "You are a scrum master, skilled in creating better User Stories "
    "for agile software projects"
)
USER_PROMPT_PREFIX = "How can I improve this user story: "

LONG_STORY_WORDS = 60
HARD_TO_READ_FOG = 12.0


class RecommendationSource(str, Enum):
    REMOTE_LLM = "remote-llm"
    OFFLINE_HEURISTIC = "offline-heuristic"


@dataclass(frozen=True)
class ChatRequest:
    model: str
    messages: tuple[dict[str, str], ...]

    def body(self) -> dict:
        return {"model": self.model, "messages": list(self.messages)}


@dataclass(frozen=True)
class Recommendation:
    text: str
    source: RecommendationSource
    latency_ms: float


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str = ""
    model: str = "gpt-3.5-turbo"
    api_key: str = ""
    timeout_seconds: float = 30.0


def build_prompt(story_text: str, model: str = "gpt-3.5-turbo") -> ChatRequest:
    """Two-message chat request: fixed system role plus the user's story."""
    if not story_text:
        raise EmptyText("story text must be non-empty")
    return ChatRequest(
        model=model,
        messages=(
            {"role": "system", "content": SYSTEM_PROMPT},
            {"role": "user", "content": USER_PROMPT_PREFIX + story_text},
        ),
    )


def fallback_recommend(story_text: str, report: ReadabilityReport) -> Recommendation:
    """Deterministic offline recommender.

    Checks the role/goal/benefit template clauses, overall length, and
    the Gunning Fog score; always produces at least one sentence.
    """
    lowered = story_text.lower()
    suggestions = []
    if "as a" not in lowered:
        suggestions.append('Start with a role clause ("As a <role>, ...") so readers know who benefits.')
    if "i want" not in lowered:
        suggestions.append('State the goal explicitly ("... I want <goal> ...").')
    if "so that" not in lowered:
        suggestions.append('Add a benefit clause ("... so that <benefit>") to explain why the story matters.')
    if report.stats.word_count > LONG_STORY_WORDS:
        suggestions.append(
            f"The story is {report.stats.word_count} words; consider splitting it or "
            "trimming detail that belongs in acceptance criteria."
        )
    if report.gunning_fog > HARD_TO_READ_FOG:
        suggestions.append(
            "The text reads as complex (Gunning Fog "
            f"{report.gunning_fog:.1f}); prefer shorter sentences and simpler words."
        )
    if not suggestions:
        suggestions.append("Story follows the template; structure and length look good.")
    return Recommendation(
        text=" ".join(suggestions),
        source=RecommendationSource.OFFLINE_HEURISTIC,
        latency_ms=0.0,
    )


def request_recommendation(
    config: EndpointConfig,
    story_text: str,
    timeout_seconds: float | None = None,
    report: ReadabilityReport | None = None,
) -> Recommendation:
    """Query the chat endpoint; degrade to the offline heuristic on failure."""
    request = build_prompt(story_text, config.model)
    timeout = timeout_seconds if timeout_seconds is not None else config.timeout_seconds
    started = time.monotonic()
    if config.base_url:
        try:
            headers = {"Content-Type": "application/json"}
            if config.api_key:
                headers["Authorization"] = f"Bearer {config.api_key}"
            response = requests.post(
                config.base_url.rstrip("/") + "/chat/completions",
                json=request.body(),
                headers=headers,
                timeout=timeout,
            )
            response.raise_for_status()
            text = response.json()["choices"][0]["message"]["content"]
            if not text:
                raise ValueError("empty completion content")
            return Recommendation(
                text=text,
                source=RecommendationSource.REMOTE_LLM,
                latency_ms=(time.monotonic() - started) * 1000.0,
            )
        except (requests.RequestException, ValueError, KeyError, IndexError) as exc:
            log.warning("chat endpoint failed (%s); using offline recommender", exc)
    else:
        log.debug("no chat endpoint configured; using offline recommender")
    if report is None:
        report = readability_report(story_text)
    fallback = fallback_recommend(story_text, report)
    return Recommendation(
        text=fallback.text,
        source=fallback.source,
        latency_ms=(time.monotonic() - started) * 1000.0,
    )
