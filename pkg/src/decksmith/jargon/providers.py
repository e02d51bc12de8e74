"""Jargon providers: the deterministic lexicon-backed mock and the live
chat-completion client.

Both implement the same two-method interface, so the pipeline, service, and
CLI never care which one is wired in.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Protocol, runtime_checkable

import httpx

from ..errors import ConfigError, DuplicateLexiconTerm, MalformedDocument, ProviderError
from ..model import AudienceProfile
from .pipeline import (
    ALTERNATIVE_COUNT,
    ExpandedAudienceContext,
    JargonTerm,
    context_from_provider_json,
)
from .prompts import render_audience_expansion_prompt, render_jargon_detection_prompt


@runtime_checkable
class JargonProvider(Protocol):
    def expand(
        self, audience: AudienceProfile, presentation_context: str | None = None
    ) -> ExpandedAudienceContext: ...

    def detect(
        self, slide_title: str | None, slide_text: str, context: ExpandedAudienceContext
    ) -> list[JargonTerm]: ...


# ---------------------------------------------------------------------------
# Lexicon-backed mock provider
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LexiconEntry:
    """One mock-lexicon term: flagged for audiences below its difficulty."""

    term: str
    difficulty: int
    definition: str
    alternatives: tuple[str, str]


def _parse_lexicon(raw) -> tuple[LexiconEntry, ...]:
    if not isinstance(raw, list):
        raise MalformedDocument("lexicon must be a JSON list")
    entries = []
    seen = set()
    for i, item in enumerate(raw):
        if not isinstance(item, dict):
            raise MalformedDocument(f"lexicon[{i}] must be an object")
        term = item.get("term")
        if not isinstance(term, str) or not term.strip():
            raise MalformedDocument(f"lexicon[{i}].term must be a non-empty string")
        difficulty = item.get("difficulty")
        if isinstance(difficulty, bool) or not isinstance(difficulty, int) or not 1 <= difficulty <= 5:
            raise MalformedDocument(f"lexicon[{i}].difficulty must be an integer in [1, 5]")
        definition = item.get("definition")
        if not isinstance(definition, str) or not definition:
            raise MalformedDocument(f"lexicon[{i}].definition must be a non-empty string")
        alts = item.get("alternatives")
        if (
            not isinstance(alts, list)
            or len(alts) != ALTERNATIVE_COUNT
            or not all(isinstance(a, str) and a for a in alts)
        ):
            raise MalformedDocument(f"lexicon[{i}].alternatives must be exactly 2 strings")
        key = term.strip().lower()
        if key in seen:
            raise DuplicateLexiconTerm(f"lexicon term {term!r} appears more than once")
        seen.add(key)
        entries.append(
            LexiconEntry(
                term=term.strip(),
                difficulty=difficulty,
                definition=definition,
                alternatives=(alts[0], alts[1]),
            )
        )
    return tuple(entries)


def load_lexicon(path: str | Path | None = None) -> tuple[LexiconEntry, ...]:
    """Load a lexicon file, or the bundled default when no path is given."""
    if path is None:
        text = resources.files("decksmith").joinpath("data/lexicon.json").read_text("utf-8")
    else:
        try:
            text = Path(path).read_text("utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read lexicon {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"lexicon is not valid JSON: {exc}") from exc
    return _parse_lexicon(raw)


class MockJargonProvider:
    """Deterministic offline provider driven by a difficulty-graded lexicon.

    Expansion: the audience knows every lexicon term at or below its expertise
    level. Detection: flag each harder lexicon term at its first occurrence
    in the text (case-insensitive; the flagged term is the exact substring).

    The rendered prompts are kept on ``last_expansion_prompt`` and
    ``last_detection_prompt`` so callers can inspect exactly what a live
    provider would have been sent.
    """

    def __init__(self, lexicon: tuple[LexiconEntry, ...] | None = None):
        self.lexicon = load_lexicon() if lexicon is None else _parse_lexicon(
            [
                {
                    "term": e.term,
                    "difficulty": e.difficulty,
                    "definition": e.definition,
                    "alternatives": list(e.alternatives),
                }
                for e in lexicon
            ]
        )
        self.last_expansion_prompt: str | None = None
        self.last_detection_prompt: str | None = None

    def expand(
        self, audience: AudienceProfile, presentation_context: str | None = None
    ) -> ExpandedAudienceContext:
        self.last_expansion_prompt = render_audience_expansion_prompt(
            audience.description, audience.expertise_level
        )
        level = audience.expertise_level
        known = tuple(e.term for e in self.lexicon if e.difficulty <= level)
        likely = tuple(e.term for e in self.lexicon if e.difficulty > level)
        expanded = (
            f"Audience described as: {audience.description}. "
            f"At expertise level {level}/5 they are assumed to know terms of "
            f"difficulty {level} and below, and to find harder terms unfamiliar."
        )
        return ExpandedAudienceContext(
            original_description=audience.description,
            expanded_description=expanded,
            inferred_expertise_level=level,
            known_concepts=known,
            likely_jargon=likely,
            domain_background=f"Domain inferred from description: {audience.description}",
        )

    def detect(
        self, slide_title: str | None, slide_text: str, context: ExpandedAudienceContext
    ) -> list[JargonTerm]:
        self.last_detection_prompt = render_jargon_detection_prompt(
            context, slide_title, slide_text
        )
        level = context.inferred_expertise_level
        lowered = slide_text.lower()
        found = []
        for entry in self.lexicon:
            if entry.difficulty <= level:
                continue
            at = lowered.find(entry.term.lower())
            if at < 0:
                continue
            actual = slide_text[at : at + len(entry.term)]
            found.append(
                JargonTerm(
                    term=actual,
                    definition=entry.definition,
                    alternatives=entry.alternatives,
                    start_index=at,
                    end_index=at + len(entry.term),
                )
            )
        found.sort(key=lambda t: (t.start_index, t.term))
        return found


# ---------------------------------------------------------------------------
# Live chat-completion provider
# ---------------------------------------------------------------------------

ENV_API_URL = "JARGON_API_URL"
ENV_API_KEY = "JARGON_API_KEY"
ENV_MODEL = "JARGON_MODEL"

DEFAULT_TIMEOUT_S = 30.0

_CODE_FENCE_RE = re.compile(r"\A\s*```[\w-]*\n(.*)\n```\s*\Z", re.DOTALL)


def _unfence(text: str) -> str:
    """Strip one surrounding Markdown code fence, if present."""
    match = _CODE_FENCE_RE.match(text)
    return match.group(1) if match else text


class LiveJargonProvider:
    """Client for an external chat-completion API.

    Each pipeline stage sends its rendered prompt as a single user message
    and parses the JSON the model returns. Transport failures are retried
    once; fenced JSON is unwrapped once; anything still unusable is a
    ProviderError.
    """

    def __init__(
        self,
        api_url: str,
        model: str,
        api_key: str | None = None,
        *,
        timeout_s: float = DEFAULT_TIMEOUT_S,
        client: httpx.Client | None = None,
    ):
        if not api_url:
            raise ConfigError("live jargon provider requires an API URL")
        if not model:
            raise ConfigError("live jargon provider requires a model name")
        self.api_url = api_url
        self.model = model
        self.api_key = api_key
        self.timeout_s = timeout_s
        self._client = client or httpx.Client(timeout=timeout_s)

    @classmethod
    def from_env(cls, environ=None) -> "LiveJargonProvider":
        env = os.environ if environ is None else environ
        api_url = env.get(ENV_API_URL, "")
        model = env.get(ENV_MODEL, "")
        if not api_url or not model:
            raise ConfigError(
                f"live jargon provider needs {ENV_API_URL} and {ENV_MODEL} set"
            )
        return cls(api_url=api_url, model=model, api_key=env.get(ENV_API_KEY))

    def _complete(self, prompt: str) -> str:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        body = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
        }
        last_error: Exception | None = None
        for _attempt in range(2):
            try:
                response = self._client.post(
                    self.api_url, json=body, headers=headers, timeout=self.timeout_s
                )
                response.raise_for_status()
                payload = response.json()
                content = payload["choices"][0]["message"]["content"]
                if not isinstance(content, str):
                    raise ProviderError("completion content is not text")
                return content
            except ProviderError as exc:
                last_error = exc
            except (httpx.HTTPError, KeyError, IndexError, TypeError, ValueError) as exc:
                last_error = exc
        raise ProviderError(f"jargon provider request failed: {last_error}") from last_error

    @staticmethod
    def _parse_json(text: str):
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            pass
        try:
            return json.loads(_unfence(text))
        except json.JSONDecodeError as exc:
            raise ProviderError(f"provider returned unparseable JSON: {exc}") from exc

    def expand(
        self, audience: AudienceProfile, presentation_context: str | None = None
    ) -> ExpandedAudienceContext:
        prompt = render_audience_expansion_prompt(
            audience.description, audience.expertise_level
        )
        payload = self._parse_json(self._complete(prompt))
        return context_from_provider_json(
            payload,
            original_description=audience.description,
            fallback_level=audience.expertise_level,
        )

    def detect(
        self, slide_title: str | None, slide_text: str, context: ExpandedAudienceContext
    ) -> list[JargonTerm]:
        prompt = render_jargon_detection_prompt(context, slide_title, slide_text)
        payload = self._parse_json(self._complete(prompt))
        if not isinstance(payload, dict) or not isinstance(payload.get("jargonTerms"), list):
            raise ProviderError("detection response must contain a jargonTerms list")
        terms = []
        for item in payload["jargonTerms"]:
            if not isinstance(item, dict):
                continue
            term = item.get("term")
            if not isinstance(term, str) or not term:
                continue
            alternatives = item.get("alternatives")
            if not isinstance(alternatives, list):
                continue
            alts = tuple(a for a in alternatives if isinstance(a, str) and a.strip())
            if len(alts) < ALTERNATIVE_COUNT:
                continue  # two real suggestions or the term is unusable
            definition = item.get("definition")
            terms.append(
                JargonTerm(
                    term=term,
                    definition=definition if isinstance(definition, str) else "",
                    alternatives=alts[:ALTERNATIVE_COUNT],
                    start_index=item.get("startIndex", -1)
                    if isinstance(item.get("startIndex"), int)
                    else -1,
                    end_index=item.get("endIndex", -1)
                    if isinstance(item.get("endIndex"), int)
                    else -1,
                )
            )
        return terms
