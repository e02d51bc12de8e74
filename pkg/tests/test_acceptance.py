"""Acceptance gate: one test per shipping criterion, each with its own
independent oracle and an explicit time budget where one applies.

Every test emits one PASS line (bypassing capture) so a full run reads as a
checklist. A failure shows up as the usual pytest failure for that criterion.
"""

import dataclasses
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from fastapi.testclient import TestClient

from decksmith import deckjson
from decksmith.constraints import ConflictLevel, compute_conflicts, compute_overflow
from decksmith.jargon import (
    HideState,
    JargonTerm,
    MockJargonProvider,
    canonical_slide_text,
    detect_jargon,
    expand_audience_context,
    hide_all,
    hide_term,
    render_audience_expansion_prompt,
    render_jargon_detection_prompt,
    reset_hidden,
)
from decksmith.model import Bounds, Element, Emphasis, Slide
from decksmith.repository import (
    IGNORE_CHANGES,
    KEEP_BOTH,
    REPLACE_CONTENT,
    SET_AS_ORIGIN,
    Repository,
    SyncDecision,
    detect_changes,
)
from decksmith.service import create_app

from conftest import make_deck, make_element, make_slide, random_deck, random_slide

GOLDEN = Path(__file__).parent / "golden"


def _report(number: int, label: str, elapsed: float | None = None) -> None:
    suffix = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    sys.__stdout__.write(f"ACCEPTANCE {number} {label}: PASS{suffix}\n")
    sys.__stdout__.flush()


# ---------------------------------------------------------------------------
# 1. Conflict thresholds are exact at every boundary
# ---------------------------------------------------------------------------


def test_criterion_1_conflict_thresholds_exact():
    started = time.perf_counter()

    fixtures = [
        (Fraction(40, 100), ConflictLevel.HIGH),
        (Fraction(50, 100), ConflictLevel.HIGH),
        (Fraction(60, 100), ConflictLevel.MEDIUM),
        (Fraction(75, 100), ConflictLevel.MEDIUM),
        (Fraction(80, 100), ConflictLevel.LOW),
        (Fraction(100, 100), ConflictLevel.LOW),
        (Fraction(120, 100), ConflictLevel.NONE),
    ]
    for ratio, expected in fixtures:
        deck = make_deck(
            [
                ("Important", ratio.numerator, Emphasis.HIGH, []),
                ("Filler", ratio.denominator, Emphasis.LOW, []),
            ],
            total_duration_s=10_000,
        )
        report = compute_conflicts(deck)
        high_section = report.sections[0]
        assert high_section.conflict_level is expected, (
            f"ratio {float(ratio)}: got {high_section.conflict_level!r}, "
            f"wanted {expected!r}"
        )
        assert report.sections[1].conflict_level is ConflictLevel.NONE

    worked_example = make_deck(
        [
            ("Key result", 120, Emphasis.HIGH, []),
            ("Background", 240, Emphasis.LOW, []),
        ],
        total_duration_s=600,
    )
    got = compute_conflicts(worked_example).sections[0]
    assert got.conflict_level is ConflictLevel.HIGH
    assert got.pairs[0].ratio == Fraction(1, 2)

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"threshold fixtures took {elapsed:.2f}s, budget 1s"
    _report(1, "conflict thresholds exact on ratio fixtures", elapsed)


# ---------------------------------------------------------------------------
# 2. Overflow equals the cumulative-sum oracle; end == limit never flagged
# ---------------------------------------------------------------------------


def test_criterion_2_overflow_matches_oracle_1000_cases():
    started = time.perf_counter()
    rng = random.Random(20260825)

    def oracle(durations, total):
        flagged, running = set(), 0
        for i, d in enumerate(durations):
            running += d
            if running > total:
                flagged.add(i)
        return flagged

    for case in range(1000):
        n = rng.randint(0, 12)
        durations = [rng.randint(30, 600) for _ in range(n)]
        if case % 10 == 0 and durations:
            total = sum(durations)  # boundary: final end == limit exactly
        else:
            total = rng.randint(60, 3600)
        deck = make_deck(
            [(f"S{i}", d, Emphasis.NONE, []) for i, d in enumerate(durations)],
            total_duration_s=total,
        )
        got = compute_overflow(deck)
        expected = {deck.sections[i].id for i in oracle(durations, total)}
        assert got == expected, f"case {case}: {durations} in {total}"
        if total == sum(durations):
            assert got == set(), "a section ending exactly at the limit was flagged"

    elapsed = time.perf_counter() - started
    assert elapsed < 2.0, f"1000 overflow cases took {elapsed:.2f}s, budget 2s"
    _report(2, "overflow suffix equals cumulative-sum oracle, 1000 cases", elapsed)


# ---------------------------------------------------------------------------
# 3. Sync decisions match a state-machine oracle, 500 sequences of 50
# ---------------------------------------------------------------------------


def _tiny_slide(rng: random.Random) -> Slide:
    return Slide(
        id=f"s{rng.randrange(10**9)}",
        title=f"title {rng.randrange(10**6)}",
        elements=(
            Element(
                id=f"e{rng.randrange(10**9)}",
                kind="text",
                content=f"body {rng.randrange(10**6)}",
                bounds=Bounds(0.1, 0.1, 0.8, 0.6),
            ),
        ),
    )


def _content_bytes(slide: Slide) -> bytes:
    doc = deckjson.slide_to_json(slide)
    doc["lineage_ref"] = None
    return deckjson.canonical_json_bytes(doc)


def test_criterion_3_sync_state_machine_500_sequences():
    started = time.perf_counter()
    rng = random.Random(3141)
    kinds = (IGNORE_CHANGES, SET_AS_ORIGIN, KEEP_BOTH, REPLACE_CONTENT)

    for sequence in range(500):
        repo = Repository()
        seed_slide = _tiny_slide(rng)
        entry = repo.save(seed_slide)
        lineage_id = entry.payload["lineage_ref"]["lineage_id"]
        # oracle model: lineage id -> ordered list of payload bytes
        model: dict[str, list[bytes]] = {lineage_id: [_content_bytes(seed_slide)]}

        current = lineage_id
        for _step in range(50):
            working = _tiny_slide(rng)
            kind = rng.choice(kinds)
            if kind == REPLACE_CONTENT:
                n = len(model[current])
                decision = SyncDecision(kind, (rng.randrange(n),))
            else:
                decision = SyncDecision(kind)
            outcome = repo.resolve_sync(current, working, decision)

            if kind == KEEP_BOTH:
                model[current].append(_content_bytes(working))
            elif kind == SET_AS_ORIGIN:
                model[outcome.lineage_id] = [_content_bytes(working)]
                current = outcome.lineage_id
            elif kind == REPLACE_CONTENT:
                model[current][decision.target_version_indices[0]] = (
                    _content_bytes(working)
                )

        for lid, expected_payloads in model.items():
            lineage = repo.lineage(lid)
            got = [deckjson.canonical_json_bytes(v.payload) for v in lineage.versions]
            assert got == expected_payloads, f"sequence {sequence}, lineage {lid}"
            assert [v.version_index for v in lineage.versions] == list(
                range(len(expected_payloads))
            )

    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"500 sync sequences took {elapsed:.2f}s, budget 5s"
    _report(3, "sync state machine matches oracle, 500x50 decisions", elapsed)


# ---------------------------------------------------------------------------
# 4. Diff equals brute-force field comparison, 1000 randomized pairs
# ---------------------------------------------------------------------------


def test_criterion_4_diff_oracle_1000_cases():
    started = time.perf_counter()
    rng = random.Random(2718)

    def mutate(slide: Slide) -> Slide:
        elements = list(slide.elements)
        roll = rng.random()
        if roll < 0.25 and elements:
            del elements[rng.randrange(len(elements))]
        elif roll < 0.5:
            elements.append(make_element(f"new {rng.random():.4f}"))
        elif roll < 0.75 and elements:
            i = rng.randrange(len(elements))
            el = elements[i]
            field = rng.choice(("content", "bounds", "kind"))
            if field == "content":
                elements[i] = dataclasses.replace(el, content=el.content + "?")
            elif field == "bounds":
                elements[i] = dataclasses.replace(el, bounds=Bounds(0, 0, 0.3, 0.3))
            else:
                elements[i] = dataclasses.replace(
                    el, kind="image" if el.kind == "text" else "text"
                )
        title = slide.title
        if rng.random() < 0.3:
            title = (title or "") + "*"
        return dataclasses.replace(slide, title=title, elements=tuple(elements))

    for case in range(1000):
        base = random_slide(rng, max_elements=10)
        working = base
        for _ in range(rng.randint(0, 5)):
            working = mutate(working)

        diff = detect_changes(working, base)

        w = {e.id: e for e in working.elements}
        b = {e.id: e for e in base.elements}
        expected_added = set(w) - set(b)
        expected_removed = set(b) - set(w)
        expected_modified = {}
        for eid in set(w) & set(b):
            fields = {
                name
                for name in ("content", "bounds", "kind")
                if getattr(w[eid], name) != getattr(b[eid], name)
            }
            if fields:
                expected_modified[eid] = fields

        assert set(diff.added) == expected_added, f"case {case}"
        assert set(diff.removed) == expected_removed, f"case {case}"
        assert {eid: set(f) for eid, f in diff.modified} == expected_modified
        assert diff.title_changed == (working.title != base.title)
        assert diff.is_empty == (
            not expected_added
            and not expected_removed
            and not expected_modified
            and working.title == base.title
        )

    elapsed = time.perf_counter() - started
    assert elapsed < 2.0, f"1000 diff cases took {elapsed:.2f}s, budget 2s"
    _report(4, "diff equals field-by-field oracle, 1000 pairs", elapsed)


# ---------------------------------------------------------------------------
# 5. Round-trip identity and byte stability on 1000 randomized decks
# ---------------------------------------------------------------------------


def test_criterion_5_round_trip_identity_1000_decks():
    rng = random.Random(5050)
    for case in range(1000):
        deck = random_deck(rng, max_sections=4, max_slides=3)
        first_bytes = deckjson.serialize(deck)
        decoded = deckjson.deserialize(first_bytes)
        assert decoded == deck, f"case {case}: round trip changed the deck"
        assert deckjson.serialize(decoded) == first_bytes, (
            f"case {case}: re-serialization is not byte-stable"
        )
    _report(5, "serialize/deserialize identity and byte stability, 1000 decks")


# ---------------------------------------------------------------------------
# 6. Jargon index integrity under adversarial providers
# ---------------------------------------------------------------------------


class FixedDetector:
    """Replays one frozen detection result, so repeated pipeline runs over
    the same corrupted input are comparable."""

    def __init__(self, terms):
        self.terms = list(terms)

    def expand(self, audience, presentation_context=None):
        raise NotImplementedError

    def detect(self, slide_title, slide_text, context):
        return list(self.terms)


class AdversarialCorruptor:
    """Takes honest detections and corrupts everything it can: offsets,
    casing, phantom terms, alternative counts."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.inner = MockJargonProvider()

    def expand(self, audience, presentation_context=None):
        return self.inner.expand(audience, presentation_context)

    def corrupt(self, slide_title, slide_text, context):
        rng = self.rng
        terms = []
        for term in self.inner.detect(slide_title, slide_text, context):
            start, end = term.start_index, term.end_index
            roll = rng.random()
            if roll < 0.2:
                start, end = start + rng.randint(-7, 7), end + rng.randint(-7, 7)
            elif roll < 0.4:
                start, end = -1, -1
            elif roll < 0.5:
                start, end = end, start
            elif roll < 0.6:
                start, end = True, "12"
            elif roll < 0.7:
                start, end = 0, len(slide_text) + 50
            surface = term.term
            if rng.random() < 0.3:
                surface = surface.upper() if rng.random() < 0.5 else surface.lower()
            alts = term.alternatives
            if rng.random() < 0.15:
                alts = alts[:1]  # too few: must be dropped downstream
            elif rng.random() < 0.15:
                alts = alts + ("extra one", "extra two")
            terms.append(
                JargonTerm(
                    term=surface,
                    definition=term.definition,
                    alternatives=alts,
                    start_index=start,
                    end_index=end,
                )
            )
        if rng.random() < 0.5:
            terms.append(
                JargonTerm(
                    term="phantom hexadecimal zeppelin",
                    definition="never appears in any slide",
                    alternatives=("a", "b"),
                    start_index=rng.randint(-5, 90),
                    end_index=rng.randint(-5, 90),
                )
            )
        return terms


def test_criterion_6_jargon_index_integrity_under_adversarial_providers():
    rng = random.Random(6006)
    corruptor = AdversarialCorruptor(rng)
    context = corruptor.expand(
        type("A", (), {"description": "general public", "expertise_level": 1})()
    )
    lexicon_terms = [e.term for e in corruptor.inner.lexicon]

    checked_terms = 0
    for case in range(300):
        words = ["plain", "words", "between"] + [
            rng.choice(lexicon_terms) for _ in range(rng.randint(1, 3))
        ]
        rng.shuffle(words)
        slide = make_slide("Fuzz case", (" ".join(words),))
        text = canonical_slide_text(slide)

        provider = FixedDetector(corruptor.corrupt(slide.title, text, context))
        terms = detect_jargon(provider, slide, context)
        for term in terms:
            checked_terms += 1
            assert text[term.start_index : term.end_index] == term.term, (
                f"case {case}: offsets do not address the term"
            )
            assert len(term.alternatives) == 2
            assert term.term.lower() in text.lower()

        if terms:
            # known-concept suppression: anything the audience knows is silent
            known = tuple(t.term.upper() for t in terms[: rng.randint(1, len(terms))])
            quiet_context = dataclasses.replace(context, known_concepts=known)
            suppressed = detect_jargon(provider, slide, quiet_context)
            banned = {k.lower() for k in known}
            assert all(t.term.lower() not in banned for t in suppressed)

            # hide monotonicity: hiding only ever removes flags
            state = HideState()
            target = rng.choice(terms).term
            hidden_state = hide_term(state, "p", slide.id, target)
            before = {t.term.lower() for t in terms}
            after = {
                t.term.lower()
                for t in detect_jargon(
                    provider, slide, context,
                    hide_state=hidden_state, presentation_id="p",
                )
            }
            assert after <= before
            assert target.lower() not in after

            muted = hide_all(hidden_state, "p", slide.id)
            assert detect_jargon(provider, slide, context,
                                 hide_state=muted, presentation_id="p") == []
            restored = reset_hidden(muted, "p", slide.id)
            back = detect_jargon(provider, slide, context,
                                 hide_state=restored, presentation_id="p")
            assert {t.term.lower() for t in back} == before

    assert checked_terms >= 100, "fuzzing produced too few flagged terms to be meaningful"
    _report(6, f"index integrity on {checked_terms} adversarial terms")


# ---------------------------------------------------------------------------
# 7. Prompt fidelity against golden files
# ---------------------------------------------------------------------------


def test_criterion_7_prompt_golden_fidelity():
    from decksmith.jargon import ExpandedAudienceContext

    expansion = render_audience_expansion_prompt(
        "undergrad freshman no programming experience", 1
    )
    assert expansion == (GOLDEN / "audience_expansion_prompt.txt").read_text("utf-8")

    context = ExpandedAudienceContext(
        original_description="general public interested in productivity",
        expanded_description=(
            "Adults without research training who follow mainstream technology "
            "coverage. They understand everyday productivity language but not "
            "cognitive-science terminology."
        ),
        inferred_expertise_level=2,
        known_concepts=("apps", "social media", "to-do lists"),
        likely_jargon=("cognitive control", "media multitasking index"),
        domain_background="General public, non-technical",
    )
    detection = render_jargon_detection_prompt(
        context,
        "The Illusion of Productivity",
        "The Illusion of Productivity\n"
        "Heavy Media Multitaskers (HMMs) show reduced cognitive control.",
        presentation_context="Conference talk about media multitasking research",
    )
    assert detection == (GOLDEN / "jargon_detection_prompt.txt").read_text("utf-8")

    minimal = render_jargon_detection_prompt(
        ExpandedAudienceContext(
            original_description="colleagues",
            expanded_description=(
                "Coworkers from the same team with shared day-to-day vocabulary."
            ),
            inferred_expertise_level=3,
        ),
        None,
        "Just plain text.",
    )
    assert minimal == (GOLDEN / "jargon_detection_prompt_minimal.txt").read_text("utf-8")
    _report(7, "prompt templates byte-identical to golden files")


# ---------------------------------------------------------------------------
# 8. Full authoring scenario over HTTP only
# ---------------------------------------------------------------------------


def test_criterion_8_end_to_end_scenario_over_http():
    started = time.perf_counter()
    client = TestClient(create_app())

    def ok(response, status=200):
        assert response.status_code == status, response.text
        return response.json()

    # A 600-second talk for a level-3 general audience.
    created = ok(client.post("/presentations", json={
        "title": "Impact of Media Multitasking on Attention",
        "total_duration_s": 600,
        "audience": {"expertise_level": 3,
                     "description": "general public interested in productivity"},
        "topic": "media multitasking",
    }), 201)
    pid = created["presentation"]["id"]

    # Five sections; the emphasized ones match the planned time split.
    plan = [
        ("Introduction", 60, "none"),
        ("Defining multitasking", 120, "low"),
        ("The illusion of productivity", 210, "high"),
        ("Implications for daily life", 150, "medium"),
        ("Conclusion", 60, "none"),
    ]
    sections = [
        ok(client.post(f"/presentations/{pid}/sections",
                       json={"title": t, "duration_s": d, "emphasis": e}), 201)["section"]
        for t, d, e in plan
    ]

    # Reuse flow: save the Introduction section, then pull it into the deck
    # again as a fresh copy (simulating reuse from an earlier session).
    intro_entry = ok(client.post("/repository/save", json={
        "presentation_id": pid, "granularity": "section",
        "section_id": sections[0]["id"],
    }), 201)["entry_id"]
    reimported = ok(client.post("/repository/import", json={
        "entry_id": intro_entry, "presentation_id": pid, "position": 5,
    }), 201)["section"]
    assert reimported["id"] != sections[0]["id"]
    assert reimported["title"] == "Introduction"

    # The key slide, checked for audience-confusing jargon.
    slide = ok(client.post(f"/sections/{sections[2]['id']}/slides", json={
        "title": "The Illusion of Productivity",
        "elements": [{
            "kind": "text",
            "content": "Heavy Media Multitaskers (HMMs) perform worse on attention tests.",
            "bounds": {"x": 0.1, "y": 0.3, "w": 0.8, "h": 0.4},
        }],
    }), 201)["slide"]

    checked = ok(client.post(f"/slides/{slide['id']}/jargon-check", json={}))
    assert [t["term"] for t in checked["terms"]] == ["Heavy Media Multitaskers (HMMs)"]
    assert checked["terms"][0]["alternatives"] == [
        "frequent media users", "people who multitask with media",
    ]
    span = checked["slide_text"][
        checked["terms"][0]["start_index"]:checked["terms"][0]["end_index"]
    ]
    assert span == "Heavy Media Multitaskers (HMMs)"

    # The emphasized sections hold more time than anything less important
    # (210 vs 150 vs 120), so the ratio table reports no emphasis conflicts.
    # The reused Introduction pushed the plan to 660s in a 600s slot, so the
    # timeline overflows at exactly that tail section and nowhere else.
    report = ok(client.get(f"/presentations/{pid}/conflicts"))
    by_id = {s["id"]: s["conflict_level"] for s in report["sections"]}
    assert all(level == "none" for level in by_id.values())
    overflowing = [s["id"] for s in report["sections"] if s["overflow"]]
    assert overflowing == [reimported["id"]]

    # Save the slide, polish the title, and keep both versions.
    ok(client.post("/repository/save", json={
        "presentation_id": pid, "granularity": "slide", "slide_id": slide["id"],
    }), 201)
    lineage_id = ok(client.get(f"/slides/{slide['id']}/diff"))["lineage_id"]
    ok(client.patch(f"/slides/{slide['id']}",
                    json={"title": "Multitasking feels productive. It is not."}))
    synced = ok(client.post(f"/slides/{slide['id']}/sync",
                            json={"decision": "keep_both"}))
    assert synced["outcome"] == {"lineage_id": lineage_id, "version_index": 1}

    # Scripted expectation for the final repository state.
    entries = ok(client.get("/repository/entries"))["entries"]
    assert sorted(e["granularity"] for e in entries) == ["section", "slide"]
    assert all(e["source_presentation_id"] == pid for e in entries)

    lineage = ok(client.get(f"/lineages/{lineage_id}"))
    titles = [v["slide"]["title"] for v in lineage["versions"]]
    assert titles == [
        "The Illusion of Productivity",
        "Multitasking feels productive. It is not.",
    ]
    assert [v["version_index"] for v in lineage["versions"]] == [0, 1]
    assert all(v["replaced_at"] is None for v in lineage["versions"])

    hits = ok(client.get("/repository/search", params={"q": "multitasking"}))["hits"]
    assert any(
        h["kind"] == "slide" and h["version_index"] == 1 for h in hits
    ), "the keep-both head version must be searchable"

    final = ok(client.get(f"/presentations/{pid}"))
    assert final["dirty_slide_ids"] == []
    assert len(final["presentation"]["sections"]) == 6  # 5 planned + reused intro

    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"scenario took {elapsed:.2f}s, budget 10s"
    _report(8, "end-to-end authoring scenario over HTTP", elapsed)
