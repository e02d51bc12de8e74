"""Deck data model: presentation, section, slide, and element values.

All values are immutable snapshots; every editing operation returns a new
value and never mutates its input, so values can be shared freely across
threads.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import IntEnum
from typing import Iterable, Sequence

from .errors import (
    InvalidAudience,
    InvalidBounds,
    InvalidDuration,
    MalformedDocument,
    NotAPermutation,
    PositionOutOfRange,
    UnknownElement,
    UnknownSection,
    UnknownSlide,
)

DEFAULT_SECTION_DURATION_S = 120

_UNSET = object()


def new_id() -> str:
    return uuid.uuid4().hex


def utc_now_iso() -> str:
    """Current UTC time as an ISO-8601 string with a Z suffix."""
    now = datetime.now(timezone.utc)
    return now.isoformat(timespec="microseconds").replace("+00:00", "Z")


class Emphasis(IntEnum):
    """Section importance. Totally ordered: NONE < LOW < MEDIUM < HIGH.

    NONE marks sections deliberately excluded from emphasis/time conflict
    comparison (e.g. framing sections that are not central to the story).
    """

    NONE = 0
    LOW = 1
    MEDIUM = 2
    HIGH = 3

    def to_json(self) -> str:
        return self.name.lower()

    @classmethod
    def from_json(cls, value: str) -> "Emphasis":
        # Only the exact lowercase names are canonical.
        if isinstance(value, str) and value in _EMPHASIS_BY_NAME:
            return _EMPHASIS_BY_NAME[value]
        raise MalformedDocument(f"unknown emphasis {value!r}")


_EMPHASIS_BY_NAME = {e.name.lower(): e for e in Emphasis}


@dataclass(frozen=True)
class AudienceProfile:
    """Who the talk is for: a 1 (novice) to 5 (expert) rating plus free text."""

    expertise_level: int
    description: str

    def __post_init__(self):
        if not isinstance(self.expertise_level, int) or isinstance(self.expertise_level, bool):
            raise InvalidAudience("expertise_level must be an integer in [1, 5]")
        if not 1 <= self.expertise_level <= 5:
            raise InvalidAudience(
                f"expertise_level must be in [1, 5], got {self.expertise_level}"
            )
        if not isinstance(self.description, str) or not self.description.strip():
            raise InvalidAudience("audience description must be non-empty")


@dataclass(frozen=True)
class Bounds:
    """Element placement in normalized slide coordinates, inside the unit square."""

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        for name in ("x", "y", "w", "h"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidBounds(f"bounds.{name} must be a number")
            object.__setattr__(self, name, float(value))
        if not (0.0 <= self.x <= 1.0 and 0.0 <= self.y <= 1.0):
            raise InvalidBounds(f"bounds origin ({self.x}, {self.y}) outside the unit square")
        if self.w <= 0.0 or self.h <= 0.0:
            raise InvalidBounds("bounds width and height must be positive")
        if self.x + self.w > 1.0 or self.y + self.h > 1.0:
            raise InvalidBounds("bounds extend past the unit square")


ELEMENT_KINDS = ("text", "image")


@dataclass(frozen=True)
class Element:
    """A slide component: a text box or an image reference.

    For text elements ``content`` is the text (may be empty); for image
    elements it is the content hash of an asset in the asset store.
    """

    id: str
    kind: str
    content: str
    bounds: Bounds

    def __post_init__(self):
        if self.kind not in ELEMENT_KINDS:
            raise MalformedDocument(f"unknown element kind {self.kind!r}")
        if not isinstance(self.content, str):
            raise MalformedDocument("element content must be a string")


@dataclass(frozen=True)
class LineageRef:
    """Link from a reused slide back to the repository version it came from."""

    lineage_id: str
    version_index: int


@dataclass(frozen=True)
class Slide:
    id: str
    title: str | None
    elements: tuple[Element, ...]
    lineage_ref: LineageRef | None = None

    def __post_init__(self):
        ids = [e.id for e in self.elements]
        if len(set(ids)) != len(ids):
            raise MalformedDocument(f"duplicate element ids in slide {self.id}")

    def element(self, element_id: str) -> Element:
        for el in self.elements:
            if el.id == element_id:
                return el
        raise UnknownElement(f"no element {element_id} in slide {self.id}")


@dataclass(frozen=True)
class Section:
    """A run of consecutive slides carrying one idea, with its own time budget
    and emphasis level."""

    id: str
    title: str
    duration_s: int
    emphasis: Emphasis
    slides: tuple[Slide, ...]

    def __post_init__(self):
        if not isinstance(self.duration_s, int) or isinstance(self.duration_s, bool):
            raise InvalidDuration("section duration must be an integer number of seconds")
        if self.duration_s <= 0:
            raise InvalidDuration(f"section duration must be positive, got {self.duration_s}")
        ids = [s.id for s in self.slides]
        if len(set(ids)) != len(ids):
            raise MalformedDocument(f"duplicate slide ids in section {self.id}")


@dataclass(frozen=True)
class Presentation:
    id: str
    title: str
    total_duration_s: int
    audience: AudienceProfile
    sections: tuple[Section, ...]
    created_at: str
    topic: str | None = None

    def __post_init__(self):
        if not isinstance(self.total_duration_s, int) or isinstance(self.total_duration_s, bool):
            raise InvalidDuration("total duration must be an integer number of seconds")
        if self.total_duration_s <= 0:
            raise InvalidDuration(
                f"total duration must be positive, got {self.total_duration_s}"
            )
        section_ids = [s.id for s in self.sections]
        if len(set(section_ids)) != len(section_ids):
            raise MalformedDocument("duplicate section ids")
        slide_ids = [sl.id for sec in self.sections for sl in sec.slides]
        if len(set(slide_ids)) != len(slide_ids):
            raise MalformedDocument("a slide may belong to only one section")

    # -- lookups ------------------------------------------------------------

    def section(self, section_id: str) -> Section:
        for sec in self.sections:
            if sec.id == section_id:
                return sec
        raise UnknownSection(f"no section {section_id}")

    def find_slide(self, slide_id: str) -> tuple[Section, Slide]:
        for sec in self.sections:
            for sl in sec.slides:
                if sl.id == slide_id:
                    return sec, sl
        raise UnknownSlide(f"no slide {slide_id}")

    def slide_ids(self) -> list[str]:
        return [sl.id for sec in self.sections for sl in sec.slides]


# ---------------------------------------------------------------------------
# Editing operations
# ---------------------------------------------------------------------------


def create_presentation(
    title: str,
    total_duration_s: int,
    audience: AudienceProfile,
    *,
    topic: str | None = None,
) -> Presentation:
    """Create an empty presentation with its time and audience constraints."""
    return Presentation(
        id=new_id(),
        title=title,
        total_duration_s=total_duration_s,
        audience=audience,
        sections=(),
        created_at=utc_now_iso(),
        topic=topic,
    )


def _checked_position(position: int | None, count: int, default: int) -> int:
    if position is None:
        return default
    if not isinstance(position, int) or isinstance(position, bool):
        raise PositionOutOfRange(f"position must be an integer, got {position!r}")
    if not 0 <= position <= count:
        raise PositionOutOfRange(f"position {position} outside [0, {count}]")
    return position


def add_section(
    presentation: Presentation,
    title: str,
    duration_s: int | None = None,
    emphasis: Emphasis | None = None,
    position: int | None = None,
) -> tuple[Presentation, Section]:
    """Insert a new empty section; duration defaults to 2 minutes, emphasis to NONE."""
    section = Section(
        id=new_id(),
        title=title,
        duration_s=DEFAULT_SECTION_DURATION_S if duration_s is None else duration_s,
        emphasis=Emphasis.NONE if emphasis is None else emphasis,
        slides=(),
    )
    updated = insert_section(presentation, section, position)
    return updated, section


def insert_section(
    presentation: Presentation, section: Section, position: int | None = None
) -> Presentation:
    """Insert an existing section value (e.g. one imported from the repository)."""
    pos = _checked_position(position, len(presentation.sections), len(presentation.sections))
    sections = list(presentation.sections)
    sections.insert(pos, section)
    return replace(presentation, sections=tuple(sections))


def update_presentation(
    presentation: Presentation,
    *,
    title=_UNSET,
    total_duration_s=_UNSET,
    audience=_UNSET,
    topic=_UNSET,
) -> Presentation:
    changes = {}
    if title is not _UNSET:
        changes["title"] = title
    if total_duration_s is not _UNSET:
        changes["total_duration_s"] = total_duration_s
    if audience is not _UNSET:
        changes["audience"] = audience
    if topic is not _UNSET:
        changes["topic"] = topic
    return replace(presentation, **changes) if changes else presentation


def update_section(
    presentation: Presentation,
    section_id: str,
    *,
    title=_UNSET,
    duration_s=_UNSET,
    emphasis=_UNSET,
) -> Presentation:
    target = presentation.section(section_id)
    changes = {}
    if title is not _UNSET:
        changes["title"] = title
    if duration_s is not _UNSET:
        changes["duration_s"] = duration_s
    if emphasis is not _UNSET:
        changes["emphasis"] = emphasis
    if not changes:
        return presentation
    updated = replace(target, **changes)
    sections = tuple(updated if s.id == section_id else s for s in presentation.sections)
    return replace(presentation, sections=sections)


def reorder_sections(presentation: Presentation, new_order: Sequence[str]) -> Presentation:
    """Reorder sections; ``new_order`` must be a permutation of the current ids."""
    current = [s.id for s in presentation.sections]
    if sorted(new_order) != sorted(current) or len(new_order) != len(set(new_order)):
        raise NotAPermutation(
            "new order must be a permutation of the existing section ids",
            details={"expected": current, "got": list(new_order)},
        )
    by_id = {s.id: s for s in presentation.sections}
    return replace(presentation, sections=tuple(by_id[sid] for sid in new_order))


def add_slide(
    presentation: Presentation,
    section_id: str,
    *,
    title: str | None = None,
    elements: Iterable[Element] = (),
    position: int | None = None,
) -> tuple[Presentation, Slide]:
    slide = Slide(id=new_id(), title=title, elements=tuple(elements))
    updated = insert_slide(presentation, section_id, slide, position)
    return updated, slide


def insert_slide(
    presentation: Presentation,
    section_id: str,
    slide: Slide,
    position: int | None = None,
) -> Presentation:
    """Insert an existing slide value (e.g. a repository copy) into a section."""
    section = presentation.section(section_id)
    pos = _checked_position(position, len(section.slides), len(section.slides))
    slides = list(section.slides)
    slides.insert(pos, slide)
    updated = replace(section, slides=tuple(slides))
    sections = tuple(updated if s.id == section_id else s for s in presentation.sections)
    return replace(presentation, sections=sections)


def move_slide(
    presentation: Presentation,
    slide_id: str,
    target_section_id: str,
    position: int,
) -> Presentation:
    """Move a slide to ``position`` within the target section, content unchanged."""
    source_section, slide = presentation.find_slide(slide_id)
    presentation.section(target_section_id)  # raises UnknownSection

    sections = []
    for sec in presentation.sections:
        if sec.id == source_section.id:
            sec = replace(sec, slides=tuple(s for s in sec.slides if s.id != slide_id))
        sections.append(sec)

    target = next(s for s in sections if s.id == target_section_id)
    pos = _checked_position(position, len(target.slides), len(target.slides))
    slides = list(target.slides)
    slides.insert(pos, slide)
    target = replace(target, slides=tuple(slides))
    sections = tuple(target if s.id == target_section_id else s for s in sections)
    return replace(presentation, sections=sections)


def update_slide(
    presentation: Presentation,
    slide_id: str,
    *,
    title=_UNSET,
    elements=_UNSET,
) -> Presentation:
    _, slide = presentation.find_slide(slide_id)
    changes = {}
    if title is not _UNSET:
        changes["title"] = title
    if elements is not _UNSET:
        changes["elements"] = tuple(elements)
    if not changes:
        return presentation
    return replace_slide(presentation, replace(slide, **changes))


def replace_slide(presentation: Presentation, slide: Slide) -> Presentation:
    """Swap in a new value for an existing slide id."""
    section, _ = presentation.find_slide(slide.id)
    slides = tuple(slide if s.id == slide.id else s for s in section.slides)
    updated = replace(section, slides=slides)
    sections = tuple(updated if s.id == section.id else s for s in presentation.sections)
    return replace(presentation, sections=sections)


def edit_element(
    slide: Slide,
    element_id: str,
    *,
    content: str | None = None,
    bounds: Bounds | None = None,
) -> Slide:
    """Change one element's content and/or bounds; everything else is untouched."""
    if content is None and bounds is None:
        raise ValueError("edit_element requires content or bounds")
    target = slide.element(element_id)
    if content is not None:
        target = replace(target, content=content)
    if bounds is not None:
        target = replace(target, bounds=bounds)
    elements = tuple(target if e.id == element_id else e for e in slide.elements)
    return replace(slide, elements=elements)
