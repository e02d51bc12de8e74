"""Core jargon-pipeline types and operations.

The analyzed text for a slide is one canonical string: the title (empty when
absent) and every text element's content, joined by newlines. Term offsets
always index that string, and ``validate_and_repair_indices`` guarantees it:
every term that survives satisfies ``text[start_index:end_index] == term``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import EmptySlide, ProviderError
from ..model import AudienceProfile, Slide

MIN_EXPERTISE_LEVEL = 1
MAX_EXPERTISE_LEVEL = 5

ALTERNATIVE_COUNT = 2


@dataclass(frozen=True)
class ExpandedAudienceContext:
    """Detailed audience profile produced by the expansion stage."""

    original_description: str
    expanded_description: str
    inferred_expertise_level: int
    known_concepts: tuple[str, ...] = ()
    likely_jargon: tuple[str, ...] = ()
    domain_background: str = ""

    def __post_init__(self):
        if not self.expanded_description.strip():
            raise ProviderError("expanded_description must be non-empty")
        if not MIN_EXPERTISE_LEVEL <= self.inferred_expertise_level <= MAX_EXPERTISE_LEVEL:
            raise ProviderError(
                f"inferred_expertise_level {self.inferred_expertise_level} outside "
                f"[{MIN_EXPERTISE_LEVEL}, {MAX_EXPERTISE_LEVEL}]"
            )

    def to_json(self) -> dict:
        return {
            "original_description": self.original_description,
            "expanded_description": self.expanded_description,
            "inferred_expertise_level": self.inferred_expertise_level,
            "known_concepts": list(self.known_concepts),
            "likely_jargon": list(self.likely_jargon),
            "domain_background": self.domain_background,
        }


def _clamp_level(value: int) -> int:
    return max(MIN_EXPERTISE_LEVEL, min(MAX_EXPERTISE_LEVEL, value))


def context_from_provider_json(
    payload, *, original_description: str, fallback_level: int
) -> ExpandedAudienceContext:
    """Build a context from an expansion-stage JSON response.

    The inferred level is clamped into [1, 5]; a missing level falls back to
    the user-provided one. Structural violations raise ProviderError.
    """
    if not isinstance(payload, dict):
        raise ProviderError("expansion response must be a JSON object")

    expanded = payload.get("expandedDescription")
    if not isinstance(expanded, str) or not expanded.strip():
        raise ProviderError("expansion response missing expandedDescription")

    raw_level = payload.get("inferredExpertiseLevel", fallback_level)
    if isinstance(raw_level, bool) or not isinstance(raw_level, (int, float)):
        raise ProviderError(f"inferredExpertiseLevel must be a number, got {raw_level!r}")
    level = _clamp_level(int(round(raw_level)))

    def _text_list(key: str) -> tuple[str, ...]:
        raw = payload.get(key, [])
        if not isinstance(raw, list):
            raise ProviderError(f"{key} must be a list")
        return tuple(item.strip() for item in raw if isinstance(item, str) and item.strip())

    domain = payload.get("domainBackground", "")
    if not isinstance(domain, str):
        raise ProviderError("domainBackground must be a string")

    return ExpandedAudienceContext(
        original_description=original_description,
        expanded_description=expanded,
        inferred_expertise_level=level,
        known_concepts=_text_list("knownConcepts"),
        likely_jargon=_text_list("likelyJargon"),
        domain_background=domain,
    )


@dataclass(frozen=True)
class JargonTerm:
    """One flagged term with its definition, two alternatives, and offsets."""

    term: str
    definition: str
    alternatives: tuple[str, ...]
    start_index: int
    end_index: int
    hidden: bool = False

    def to_json(self) -> dict:
        return {
            "term": self.term,
            "definition": self.definition,
            "alternatives": list(self.alternatives),
            "start_index": self.start_index,
            "end_index": self.end_index,
            "hidden": self.hidden,
        }


def canonical_slide_text(slide: Slide) -> str:
    """The single string all jargon offsets index: title, then each text
    element's content, newline-joined."""
    parts = [slide.title or ""]
    parts.extend(el.content for el in slide.elements if el.kind == "text")
    return "\n".join(parts)


def validate_and_repair_indices(slide_text: str, terms) -> list[JargonTerm]:
    """Make every term's offsets point at its exact occurrence in the text.

    Correct offsets pass through untouched. Wrong offsets are rebound to the
    first case-sensitive occurrence, then the first case-insensitive one (the
    term is rewritten to the actual substring so equality stays exact). Terms
    found nowhere are dropped. Never raises.
    """
    repaired = []
    for term in terms:
        text = term.term
        if not isinstance(text, str) or not text:
            continue
        start, end = term.start_index, term.end_index
        if (
            isinstance(start, int)
            and isinstance(end, int)
            and not isinstance(start, bool)
            and not isinstance(end, bool)
            and 0 <= start < end <= len(slide_text)
            and slide_text[start:end] == text
        ):
            repaired.append(term)
            continue
        at = slide_text.find(text)
        if at >= 0:
            repaired.append(replace(term, start_index=at, end_index=at + len(text)))
            continue
        at = slide_text.lower().find(text.lower())
        if at >= 0:
            actual = slide_text[at : at + len(text)]
            repaired.append(
                replace(term, term=actual, start_index=at, end_index=at + len(text))
            )
            continue
        # Not in the text at all: unhighlightable, so dropped.
    return repaired


def _normalize_alternatives(terms: list[JargonTerm]) -> list[JargonTerm]:
    """Enforce exactly two alternatives: truncate extras, drop terms with
    fewer (a padded duplicate would be a fake suggestion)."""
    out = []
    for term in terms:
        alts = tuple(a for a in term.alternatives if isinstance(a, str) and a.strip())
        if len(alts) < ALTERNATIVE_COUNT:
            continue
        if len(alts) > ALTERNATIVE_COUNT:
            alts = alts[:ALTERNATIVE_COUNT]
        out.append(replace(term, alternatives=alts) if alts != term.alternatives else term)
    return out


# ---------------------------------------------------------------------------
# Hide state
# ---------------------------------------------------------------------------

SlideKey = tuple[str, str]  # (presentation_id, slide_id)


@dataclass(frozen=True)
class HideState:
    """Per-slide record of which flagged terms the presenter chose to hide.

    Immutable: hide operations return a new state. Terms are matched
    case-insensitively. ``all_hidden`` suppresses every flag for a slide
    until reset.
    """

    hidden: dict[SlideKey, frozenset[str]] = field(default_factory=dict)
    all_hidden: frozenset[SlideKey] = frozenset()

    def hidden_terms(self, presentation_id: str, slide_id: str) -> frozenset[str]:
        return self.hidden.get((presentation_id, slide_id), frozenset())

    def is_all_hidden(self, presentation_id: str, slide_id: str) -> bool:
        return (presentation_id, slide_id) in self.all_hidden

    def is_hidden(self, presentation_id: str, slide_id: str, term: str) -> bool:
        key = (presentation_id, slide_id)
        return key in self.all_hidden or term.lower() in self.hidden.get(key, frozenset())


def hide_term(state: HideState, presentation_id: str, slide_id: str, term: str) -> HideState:
    key = (presentation_id, slide_id)
    current = state.hidden.get(key, frozenset())
    updated = current | {term.lower()}
    if updated == current:
        return state
    hidden = dict(state.hidden)
    hidden[key] = updated
    return HideState(hidden=hidden, all_hidden=state.all_hidden)


def hide_all(state: HideState, presentation_id: str, slide_id: str) -> HideState:
    key = (presentation_id, slide_id)
    if key in state.all_hidden:
        return state
    return HideState(hidden=dict(state.hidden), all_hidden=state.all_hidden | {key})


def reset_hidden(state: HideState, presentation_id: str, slide_id: str) -> HideState:
    key = (presentation_id, slide_id)
    if key not in state.all_hidden and key not in state.hidden:
        return state
    hidden = {k: v for k, v in state.hidden.items() if k != key}
    return HideState(hidden=hidden, all_hidden=state.all_hidden - {key})


# ---------------------------------------------------------------------------
# Pipeline operations
# ---------------------------------------------------------------------------


def expand_audience_context(
    provider,
    audience: AudienceProfile,
    presentation_context: str | None = None,
) -> ExpandedAudienceContext:
    """Stage one: turn a terse audience description into a detailed profile."""
    context = provider.expand(audience, presentation_context)
    if not isinstance(context, ExpandedAudienceContext):
        raise ProviderError(
            f"provider returned {type(context).__name__}, expected ExpandedAudienceContext"
        )
    return context


def detect_jargon(
    provider,
    slide: Slide,
    context: ExpandedAudienceContext,
    *,
    hide_state: HideState | None = None,
    presentation_id: str | None = None,
) -> list[JargonTerm]:
    """Stage two: flag audience-confusing terms in one slide.

    Provider output is repaired to exact offsets, capped at two alternatives,
    filtered against the audience's known concepts (they are not jargon for
    this audience), and filtered against hidden terms.
    """
    text = canonical_slide_text(slide)
    if not text.strip():
        raise EmptySlide(f"slide {slide.id} has no text to analyze")

    raw = provider.detect(slide.title, text, context)
    terms = validate_and_repair_indices(text, list(raw))
    terms = _normalize_alternatives(terms)

    known = {c.lower() for c in context.known_concepts}
    terms = [t for t in terms if t.term.lower() not in known]

    if hide_state is not None and presentation_id is not None:
        if hide_state.is_all_hidden(presentation_id, slide.id):
            return []
        hidden = hide_state.hidden_terms(presentation_id, slide.id)
        terms = [t for t in terms if t.term.lower() not in hidden]

    return terms
