"""Timeline and emphasis/time conflict analysis.

A section is in conflict when it is marked more important than another
section yet gets the same or less time. The ratio r = duration(important) /
duration(less important) is classified against fixed bands:

    r <= 0.5          high conflict
    0.5 < r <= 0.75   medium conflict
    0.75 < r <= 1.0   low conflict
    r > 1.0           no conflict from that pair

Sections with emphasis NONE never participate. Independently of conflicts, a
section overflows when its cumulative end time exceeds the presentation's
total duration; ending exactly at the limit is still in budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from .deckjson import canonical_json_bytes
from .model import Emphasis, Presentation


class ConflictLevel(IntEnum):
    NONE = 0
    LOW = 1
    MEDIUM = 2
    HIGH = 3

    def to_json(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class TimelineEntry:
    section_id: str
    start: int
    end: int
    duration: int


@dataclass(frozen=True)
class ConflictPair:
    more_important_id: str
    less_important_id: str
    ratio: Fraction


@dataclass(frozen=True)
class SectionConflict:
    section_id: str
    conflict_level: ConflictLevel
    overflow: bool
    pairs: tuple[ConflictPair, ...]


@dataclass(frozen=True)
class ConflictReport:
    sections: tuple[SectionConflict, ...]
    total_duration_s: int
    sum_duration_s: int


def compute_timeline(presentation: Presentation) -> list[TimelineEntry]:
    """Cumulative start/end times per section, in section order."""
    entries = []
    cursor = 0
    for section in presentation.sections:
        entries.append(
            TimelineEntry(
                section_id=section.id,
                start=cursor,
                end=cursor + section.duration_s,
                duration=section.duration_s,
            )
        )
        cursor += section.duration_s
    return entries


def classify_ratio(ratio: Fraction) -> ConflictLevel:
    if ratio <= Fraction(1, 2):
        return ConflictLevel.HIGH
    if ratio <= Fraction(3, 4):
        return ConflictLevel.MEDIUM
    if ratio <= 1:
        return ConflictLevel.LOW
    return ConflictLevel.NONE


def compute_overflow(presentation: Presentation) -> set[str]:
    """Ids of sections whose cumulative end exceeds the total time limit."""
    limit = presentation.total_duration_s
    return {e.section_id for e in compute_timeline(presentation) if e.end > limit}


def compute_conflicts(presentation: Presentation) -> ConflictReport:
    """Classify every ordered emphasis-ranked section pair and roll up per section.

    Only the more important, under-allocated side of a pair carries the
    conflict; its level is the worst over all its conflicting pairs.
    """
    overflow = compute_overflow(presentation)
    ranked = [s for s in presentation.sections if s.emphasis != Emphasis.NONE]

    per_section = []
    for section in presentation.sections:
        level = ConflictLevel.NONE
        pairs: list[ConflictPair] = []
        if section.emphasis != Emphasis.NONE:
            for other in ranked:
                if section.emphasis <= other.emphasis:
                    continue
                ratio = Fraction(section.duration_s, other.duration_s)
                pair_level = classify_ratio(ratio)
                if pair_level != ConflictLevel.NONE:
                    pairs.append(ConflictPair(section.id, other.id, ratio))
                    level = max(level, pair_level)
        per_section.append(
            SectionConflict(
                section_id=section.id,
                conflict_level=level,
                overflow=section.id in overflow,
                pairs=tuple(pairs),
            )
        )
    return ConflictReport(
        sections=tuple(per_section),
        total_duration_s=presentation.total_duration_s,
        sum_duration_s=sum(s.duration_s for s in presentation.sections),
    )


def report_to_json(report: ConflictReport) -> dict:
    return {
        "sections": [
            {
                "id": sc.section_id,
                "conflict_level": sc.conflict_level.to_json(),
                "overflow": sc.overflow,
                "pairs": [
                    {"other_id": pair.less_important_id, "ratio": float(pair.ratio)}
                    for pair in sc.pairs
                ],
            }
            for sc in report.sections
        ],
        "total_duration_s": report.total_duration_s,
        "sum_duration_s": report.sum_duration_s,
    }


def conflict_report_bytes(presentation: Presentation) -> bytes:
    """Canonical JSON bytes of the conflict report; shared by CLI and service."""
    return canonical_json_bytes(report_to_json(compute_conflicts(presentation)))
