#!/usr/bin/env python3
"""Record live authoring-service responses into tests/fixtures.ts.

The frontend contract tests render recorded API bodies, so the fixtures must
be genuine wire payloads. This script drives the real HTTP app in-process,
captures the relevant responses verbatim, and writes them out as typed
TypeScript constants. Re-run it after changing the service's JSON shapes:

    python3 scripts/record-fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from decksmith.service import ServiceConfig, create_app

OUT_PATH = Path(__file__).resolve().parent.parent / "tests" / "fixtures.ts"

HEADER = '''\
/**
 * Recorded authoring-service responses used by the contract tests.
 *
 * Generated by scripts/record-fixtures.py against the real HTTP app; do not
 * edit by hand. Each constant is one response body captured verbatim.
 */

import type {
  ConflictReport,
  DiffResponse,
  JargonCheckResponse,
  LineageResponse,
  PresentationBody,
  SearchResponse,
} from "../src/types.js";

'''


def must(response, status):
    assert response.status_code == status, (
        f"{response.request.method} {response.request.url} -> "
        f"{response.status_code}: {response.text}"
    )
    return response.json()


def record() -> dict[str, tuple[str, dict]]:
    client = TestClient(create_app(ServiceConfig()))
    fixtures: dict[str, tuple[str, dict]] = {}

    # Deck one: five sections exercising every conflict color.
    body = must(
        client.post(
            "/presentations",
            json={
                "title": "Quarterly results",
                "total_duration_s": 600,
                "audience": {
                    "description": "general public interested in productivity",
                    "expertise_level": 3,
                },
                "topic": "media multitasking",
            },
        ),
        201,
    )
    pid = body["presentation"]["id"]

    plan = [
        ("Headline", "high", 40),
        ("Walkthrough", "high", 90),
        ("Comparisons", "medium", 76),
        ("Backdrop", "low", 104),
        ("Warmup", "none", 60),
    ]
    section_ids = {}
    for title, emphasis, duration in plan:
        created = must(
            client.post(
                f"/presentations/{pid}/sections",
                json={"title": title, "emphasis": emphasis, "duration_s": duration},
            ),
            201,
        )
        section_ids[title] = created["section"]["id"]

    hmms_slide = must(
        client.post(
            f"/sections/{section_ids['Headline']}/slides",
            json={
                "title": "The Illusion of Productivity",
                "elements": [
                    {
                        "kind": "text",
                        "content": (
                            "Heavy Media Multitaskers (HMMs) show reduced "
                            "cognitive control."
                        ),
                        "bounds": {"x": 0.1, "y": 0.3, "w": 0.8, "h": 0.3},
                    },
                    {
                        "kind": "text",
                        "content": (
                            "Their media multitasking index predicts distraction."
                        ),
                        "bounds": {"x": 0.1, "y": 0.65, "w": 0.8, "h": 0.2},
                    },
                ],
            },
        ),
        201,
    )["slide"]

    takeaways = must(
        client.post(
            f"/sections/{section_ids['Walkthrough']}/slides",
            json={
                "title": "Key takeaways",
                "elements": [
                    {
                        "kind": "text",
                        "content": "Multitasking reduces focus.",
                        "bounds": {"x": 0.1, "y": 0.2, "w": 0.8, "h": 0.3},
                    },
                    {
                        "kind": "text",
                        "content": "Productivity apps do not fix attention.",
                        "bounds": {"x": 0.1, "y": 0.6, "w": 0.8, "h": 0.3},
                    },
                ],
            },
        ),
        201,
    )["slide"]

    fixtures["PRESENTATION_BODY"] = (
        "PresentationBody",
        must(client.get(f"/presentations/{pid}"), 200),
    )
    fixtures["REPORT_ALL_LEVELS"] = (
        "ConflictReport",
        must(client.get(f"/presentations/{pid}/conflicts"), 200),
    )

    must(client.patch(f"/presentations/{pid}", json={"total_duration_s": 300}), 200)
    fixtures["REPORT_TAIL_OVERFLOW"] = (
        "ConflictReport",
        must(client.get(f"/presentations/{pid}/conflicts"), 200),
    )

    must(client.patch(f"/presentations/{pid}", json={"total_duration_s": 200}), 200)
    fixtures["REPORT_OVERFLOW_OVERRIDE"] = (
        "ConflictReport",
        must(client.get(f"/presentations/{pid}/conflicts"), 200),
    )

    must(client.patch(f"/presentations/{pid}", json={"total_duration_s": 600}), 200)

    # Deck two: the classic 120s-vs-240s pair.
    launch = must(
        client.post(
            "/presentations",
            json={
                "title": "Launch plan",
                "total_duration_s": 600,
                "audience": {"description": "product team", "expertise_level": 4},
            },
        ),
        201,
    )
    launch_id = launch["presentation"]["id"]
    for title, emphasis, duration in [
        ("KeyResult", "high", 120),
        ("Background", "low", 240),
    ]:
        must(
            client.post(
                f"/presentations/{launch_id}/sections",
                json={"title": title, "emphasis": emphasis, "duration_s": duration},
            ),
            201,
        )
    fixtures["PRESENTATION_KEYRESULT"] = (
        "PresentationBody",
        must(client.get(f"/presentations/{launch_id}"), 200),
    )
    fixtures["REPORT_KEYRESULT"] = (
        "ConflictReport",
        must(client.get(f"/presentations/{launch_id}/conflicts"), 200),
    )

    # Jargon check over the mock provider and bundled lexicon.
    fixtures["JARGON_CHECK"] = (
        "JargonCheckResponse",
        must(client.post(f"/slides/{hmms_slide['id']}/jargon-check", json={}), 200),
    )

    # Save work, then edit the slide so the diff shows every change kind.
    must(
        client.post(
            "/repository/save",
            json={"granularity": "presentation", "presentation_id": pid},
        ),
        201,
    )
    must(
        client.post(
            "/repository/save",
            json={
                "granularity": "section",
                "presentation_id": pid,
                "section_id": section_ids["Headline"],
            },
        ),
        201,
    )
    must(
        client.post(
            "/repository/save",
            json={
                "granularity": "slide",
                "presentation_id": pid,
                "slide_id": takeaways["id"],
            },
        ),
        201,
    )

    fixtures["DIFF_CLEAN"] = (
        "DiffResponse",
        must(client.get(f"/slides/{takeaways['id']}/diff"), 200),
    )

    kept, dropped = takeaways["elements"]
    must(
        client.patch(
            f"/slides/{takeaways['id']}",
            json={
                "title": "Sharper takeaways",
                "elements": [
                    {
                        "id": kept["id"],
                        "kind": "text",
                        "content": "Multitasking feels productive. It is not.",
                        "bounds": kept["bounds"],
                    },
                    {
                        "kind": "text",
                        "content": "Practice single-tasking for one week.",
                        "bounds": dropped["bounds"],
                    },
                ],
            },
        ),
        200,
    )

    diff = must(client.get(f"/slides/{takeaways['id']}/diff"), 200)
    fixtures["DIFF_MIXED"] = ("DiffResponse", diff)
    fixtures["LINEAGE_SINGLE"] = (
        "LineageResponse",
        must(client.get(f"/lineages/{diff['lineage_id']}"), 200),
    )

    fixtures["SEARCH_PRODUCTIVITY"] = (
        "SearchResponse",
        must(client.get("/repository/search", params={"q": "productivity"}), 200),
    )

    return fixtures


def main() -> None:
    fixtures = record()
    parts = [HEADER]
    for name, (ts_type, payload) in fixtures.items():
        literal = json.dumps(payload, indent=2, ensure_ascii=False)
        parts.append(f"export const {name}: {ts_type} = {literal};\n\n")
    OUT_PATH.write_text("".join(parts).rstrip() + "\n", encoding="utf-8")
    print(f"wrote {OUT_PATH} ({len(fixtures)} fixtures)")


if __name__ == "__main__":
    main()
