"""Shared fixtures and deck builders for the test suite."""

from __future__ import annotations

import random

import pytest

from decksmith import model
from decksmith.model import AudienceProfile, Bounds, Element, Emphasis, Presentation, Slide


def make_audience(level: int = 3, description: str = "general public") -> AudienceProfile:
    return AudienceProfile(expertise_level=level, description=description)


def make_element(content: str = "hello", kind: str = "text", **bounds) -> Element:
    b = {"x": 0.1, "y": 0.1, "w": 0.8, "h": 0.6}
    b.update(bounds)
    return Element(id=model.new_id(), kind=kind, content=content, bounds=Bounds(**b))


def make_slide(title="Untitled slide", texts=("some text",)) -> Slide:
    return Slide(
        id=model.new_id(),
        title=title,
        elements=tuple(make_element(t) for t in texts),
    )


def make_deck(
    sections,
    *,
    total_duration_s: int = 600,
    level: int = 3,
    title: str = "Test deck",
) -> Presentation:
    """Build a presentation from (title, duration_s, emphasis, [slides]) tuples."""
    deck = model.create_presentation(
        title=title,
        total_duration_s=total_duration_s,
        audience=make_audience(level),
    )
    for spec in sections:
        sec_title, duration, emphasis = spec[0], spec[1], spec[2]
        slides = spec[3] if len(spec) > 3 else []
        deck, section = model.add_section(
            deck, title=sec_title, duration_s=duration, emphasis=emphasis
        )
        for slide in slides:
            deck = model.insert_slide(deck, section.id, slide)
    return deck


# ---------------------------------------------------------------------------
# Randomized deck generation (seeded, reproducible)
# ---------------------------------------------------------------------------

WORDS = (
    "media multitasking attention focus memory slides results methods study "
    "productivity survey analysis brain task context deadline summary notes "
    "audience intro design finding question future"
).split()

UNICODE_EXTRAS = ("Überblick", "注意力", "ανάλυση", "résumé", "♞ gambit", "日本語テスト")


def random_text(rng: random.Random, max_words: int = 6) -> str:
    words = [rng.choice(WORDS) for _ in range(rng.randint(1, max_words))]
    if rng.random() < 0.15:
        words.append(rng.choice(UNICODE_EXTRAS))
    return " ".join(words)


def random_bounds(rng: random.Random) -> Bounds:
    x = rng.uniform(0.0, 0.7)
    y = rng.uniform(0.0, 0.7)
    return Bounds(
        x=x,
        y=y,
        w=rng.uniform(0.05, 1.0 - x),
        h=rng.uniform(0.05, 1.0 - y),
    )


def random_element(rng: random.Random) -> Element:
    kind = rng.choice(("text", "text", "image"))
    content = random_text(rng) if kind == "text" else f"asset:{rng.randrange(16**8):08x}"
    return Element(id=model.new_id(), kind=kind, content=content, bounds=random_bounds(rng))


def random_slide(rng: random.Random, max_elements: int = 5) -> Slide:
    return Slide(
        id=model.new_id(),
        title=random_text(rng) if rng.random() < 0.8 else None,
        elements=tuple(random_element(rng) for _ in range(rng.randint(0, max_elements))),
    )


def random_deck(
    rng: random.Random,
    *,
    max_sections: int = 6,
    max_slides: int = 4,
    min_sections: int = 0,
) -> Presentation:
    deck = model.create_presentation(
        title=random_text(rng),
        total_duration_s=rng.randint(60, 3600),
        audience=make_audience(rng.randint(1, 5), random_text(rng)),
        topic=random_text(rng) if rng.random() < 0.5 else None,
    )
    for _ in range(rng.randint(min_sections, max_sections)):
        deck, section = model.add_section(
            deck,
            title=random_text(rng),
            duration_s=rng.randint(30, 600),
            emphasis=rng.choice(list(Emphasis)),
        )
        for _ in range(rng.randint(0, max_slides)):
            deck = model.insert_slide(deck, section.id, random_slide(rng))
    return deck


# ---------------------------------------------------------------------------
# Scenario deck: 600 s talk, five sections, known jargon on one slide
# ---------------------------------------------------------------------------


def scenario_deck() -> Presentation:
    """A 10-minute deck for a level-3 audience whose middle sections carry
    emphasis, with one slide mentioning a flaggable research term."""
    deck = model.create_presentation(
        title="Impact of Media Multitasking on Attention",
        total_duration_s=600,
        audience=make_audience(3, "general public interested in productivity"),
        topic="media multitasking",
    )
    plan = [
        ("Introduction", 60, Emphasis.NONE),
        ("Defining multitasking", 120, Emphasis.LOW),
        ("The illusion of productivity", 210, Emphasis.HIGH),
        ("Implications for daily life", 150, Emphasis.MEDIUM),
        ("Conclusion", 60, Emphasis.NONE),
    ]
    section_ids = []
    for title, duration, emphasis in plan:
        deck, section = model.add_section(
            deck, title=title, duration_s=duration, emphasis=emphasis
        )
        section_ids.append(section.id)

    deck, _slide = model.add_slide(
        deck,
        section_ids[2],
        title="The Illusion of Productivity",
        elements=(
            make_element(
                "Heavy Media Multitaskers (HMMs) perform worse on attention tests."
            ),
        ),
        position=None,
    )
    return deck


@pytest.fixture
def audience():
    return make_audience()


@pytest.fixture
def deck():
    return scenario_deck()
