"""decksmith: constraint-aware presentation authoring engine.

Immutable deck model with sections carrying time and emphasis, an
emphasis/time conflict engine, a versioned multi-granularity slide
repository with change detection and four-way sync, an audience-driven
jargon-detection pipeline, an HTTP JSON service, and the deckctl CLI.
"""

from .constraints import (
    ConflictLevel,
    ConflictReport,
    compute_conflicts,
    compute_overflow,
    compute_timeline,
)
from .deckjson import deserialize, serialize, validate_document
from .errors import DeckError
from .model import (
    AudienceProfile,
    Bounds,
    Element,
    Emphasis,
    LineageRef,
    Presentation,
    Section,
    Slide,
)
from .repository import Repository, SlideDiff, SyncDecision, detect_changes

__version__ = "0.1.0"

__all__ = [
    "AudienceProfile",
    "Bounds",
    "ConflictLevel",
    "ConflictReport",
    "DeckError",
    "Element",
    "Emphasis",
    "LineageRef",
    "Presentation",
    "Repository",
    "Section",
    "Slide",
    "SlideDiff",
    "SyncDecision",
    "compute_conflicts",
    "compute_overflow",
    "compute_timeline",
    "deserialize",
    "detect_changes",
    "serialize",
    "validate_document",
    "__version__",
]
