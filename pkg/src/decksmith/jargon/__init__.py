"""Audience-aware jargon detection pipeline.

Two stages: expand a terse audience description into a detailed profile, then
analyze slide text against that profile, returning flagged terms with
definitions, two simpler alternatives, and character offsets into the slide's
canonical text.
"""

from .pipeline import (
    ExpandedAudienceContext,
    HideState,
    JargonTerm,
    canonical_slide_text,
    context_from_provider_json,
    detect_jargon,
    expand_audience_context,
    hide_all,
    hide_term,
    reset_hidden,
    validate_and_repair_indices,
)
from .prompts import (
    AUDIENCE_EXPANSION_TEMPLATE,
    JARGON_DETECTION_TEMPLATE,
    render_audience_expansion_prompt,
    render_jargon_detection_prompt,
)
from .providers import (
    JargonProvider,
    LexiconEntry,
    LiveJargonProvider,
    MockJargonProvider,
    load_lexicon,
)

__all__ = [
    "AUDIENCE_EXPANSION_TEMPLATE",
    "ExpandedAudienceContext",
    "HideState",
    "JARGON_DETECTION_TEMPLATE",
    "JargonProvider",
    "JargonTerm",
    "LexiconEntry",
    "LiveJargonProvider",
    "MockJargonProvider",
    "canonical_slide_text",
    "context_from_provider_json",
    "detect_jargon",
    "expand_audience_context",
    "hide_all",
    "hide_term",
    "load_lexicon",
    "render_audience_expansion_prompt",
    "render_jargon_detection_prompt",
    "reset_hidden",
    "validate_and_repair_indices",
]
