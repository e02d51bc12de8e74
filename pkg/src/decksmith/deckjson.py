"""Canonical JSON form of a deck (schema_version 1) and its validation.

The canonical byte form sorts keys and uses compact separators, so
serializing the same value always yields identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import MalformedDocument, UnsupportedSchemaVersion
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

SCHEMA_VERSION = 1

EMPHASIS_NAMES = ("none", "low", "medium", "high")


def canonical_json_bytes(obj: Any) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode(
        "utf-8"
    )


# -- value -> json ------------------------------------------------------------


def element_to_json(el: Element) -> dict:
    return {
        "id": el.id,
        "kind": el.kind,
        "content": el.content,
        "bounds": {"x": el.bounds.x, "y": el.bounds.y, "w": el.bounds.w, "h": el.bounds.h},
    }


def slide_to_json(slide: Slide) -> dict:
    ref = None
    if slide.lineage_ref is not None:
        ref = {
            "lineage_id": slide.lineage_ref.lineage_id,
            "version_index": slide.lineage_ref.version_index,
        }
    return {
        "id": slide.id,
        "title": slide.title,
        "lineage_ref": ref,
        "elements": [element_to_json(e) for e in slide.elements],
    }


def section_to_json(section: Section) -> dict:
    return {
        "id": section.id,
        "title": section.title,
        "duration_s": section.duration_s,
        "emphasis": section.emphasis.to_json(),
        "slides": [slide_to_json(s) for s in section.slides],
    }


def presentation_to_json(p: Presentation) -> dict:
    return {
        "id": p.id,
        "title": p.title,
        "total_duration_s": p.total_duration_s,
        "audience": {
            "expertise_level": p.audience.expertise_level,
            "description": p.audience.description,
        },
        "topic": p.topic,
        "created_at": p.created_at,
        "sections": [section_to_json(s) for s in p.sections],
    }


def deck_document(p: Presentation) -> dict:
    return {"schema_version": SCHEMA_VERSION, "presentation": presentation_to_json(p)}


def serialize(p: Presentation) -> bytes:
    return canonical_json_bytes(deck_document(p))


# -- json -> value ------------------------------------------------------------


def _req(obj: dict, key: str, where: str):
    if key not in obj:
        raise MalformedDocument(f"{where}: missing key {key!r}")
    return obj[key]


def _req_str(obj: dict, key: str, where: str) -> str:
    value = _req(obj, key, where)
    if not isinstance(value, str):
        raise MalformedDocument(f"{where}.{key}: expected string")
    return value


def _req_int(obj: dict, key: str, where: str) -> int:
    value = _req(obj, key, where)
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(f"{where}.{key}: expected integer")
    return value


def element_from_json(obj: Any, where: str = "element") -> Element:
    if not isinstance(obj, dict):
        raise MalformedDocument(f"{where}: expected object")
    bounds = _req(obj, "bounds", where)
    if not isinstance(bounds, dict):
        raise MalformedDocument(f"{where}.bounds: expected object")
    for axis in ("x", "y", "w", "h"):
        v = _req(bounds, axis, f"{where}.bounds")
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise MalformedDocument(f"{where}.bounds.{axis}: expected number")
    return Element(
        id=_req_str(obj, "id", where),
        kind=_req_str(obj, "kind", where),
        content=_req_str(obj, "content", where),
        bounds=Bounds(x=bounds["x"], y=bounds["y"], w=bounds["w"], h=bounds["h"]),
    )


def slide_from_json(obj: Any, where: str = "slide") -> Slide:
    if not isinstance(obj, dict):
        raise MalformedDocument(f"{where}: expected object")
    title = _req(obj, "title", where)
    if title is not None and not isinstance(title, str):
        raise MalformedDocument(f"{where}.title: expected string or null")
    ref_obj = obj.get("lineage_ref")
    ref = None
    if ref_obj is not None:
        if not isinstance(ref_obj, dict):
            raise MalformedDocument(f"{where}.lineage_ref: expected object or null")
        ref = LineageRef(
            lineage_id=_req_str(ref_obj, "lineage_id", f"{where}.lineage_ref"),
            version_index=_req_int(ref_obj, "version_index", f"{where}.lineage_ref"),
        )
        if ref.version_index < 0:
            raise MalformedDocument(f"{where}.lineage_ref.version_index: must be >= 0")
    elements_obj = _req(obj, "elements", where)
    if not isinstance(elements_obj, list):
        raise MalformedDocument(f"{where}.elements: expected array")
    elements = tuple(
        element_from_json(e, f"{where}.elements[{i}]") for i, e in enumerate(elements_obj)
    )
    return Slide(id=_req_str(obj, "id", where), title=title, elements=elements, lineage_ref=ref)


def section_from_json(obj: Any, where: str = "section") -> Section:
    if not isinstance(obj, dict):
        raise MalformedDocument(f"{where}: expected object")
    slides_obj = _req(obj, "slides", where)
    if not isinstance(slides_obj, list):
        raise MalformedDocument(f"{where}.slides: expected array")
    return Section(
        id=_req_str(obj, "id", where),
        title=_req_str(obj, "title", where),
        duration_s=_req_int(obj, "duration_s", where),
        emphasis=Emphasis.from_json(_req_str(obj, "emphasis", where)),
        slides=tuple(slide_from_json(s, f"{where}.slides[{i}]") for i, s in enumerate(slides_obj)),
    )


def presentation_from_json(obj: Any, where: str = "presentation") -> Presentation:
    if not isinstance(obj, dict):
        raise MalformedDocument(f"{where}: expected object")
    audience_obj = _req(obj, "audience", where)
    if not isinstance(audience_obj, dict):
        raise MalformedDocument(f"{where}.audience: expected object")
    topic = obj.get("topic")
    if topic is not None and not isinstance(topic, str):
        raise MalformedDocument(f"{where}.topic: expected string or null")
    sections_obj = _req(obj, "sections", where)
    if not isinstance(sections_obj, list):
        raise MalformedDocument(f"{where}.sections: expected array")
    return Presentation(
        id=_req_str(obj, "id", where),
        title=_req_str(obj, "title", where),
        total_duration_s=_req_int(obj, "total_duration_s", where),
        audience=AudienceProfile(
            expertise_level=_req_int(audience_obj, "expertise_level", f"{where}.audience"),
            description=_req_str(audience_obj, "description", f"{where}.audience"),
        ),
        sections=tuple(
            section_from_json(s, f"{where}.sections[{i}]") for i, s in enumerate(sections_obj)
        ),
        created_at=_req_str(obj, "created_at", where),
        topic=topic,
    )


def deserialize(data: bytes | str) -> Presentation:
    """Parse a canonical deck document back into a Presentation value."""
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocument("deck document must be a JSON object")
    version = doc.get("schema_version")
    if version is None:
        raise MalformedDocument("missing schema_version")
    if version != SCHEMA_VERSION:
        raise UnsupportedSchemaVersion(f"unsupported schema_version {version!r}")
    try:
        return presentation_from_json(_req(doc, "presentation", "deck"))
    except (MalformedDocument, UnsupportedSchemaVersion):
        raise
    except Exception as exc:  # domain violations surface as malformed documents
        raise MalformedDocument(str(exc)) from exc


# -- full validation with JSON pointers ---------------------------------------


def validate_document(doc: Any) -> list[dict]:
    """Collect every violation in a parsed deck document.

    Returns a list of ``{"pointer": ..., "message": ...}`` records; an empty
    list means the document is a valid deck. Structural show-stoppers (not an
    object, missing/unsupported schema_version) raise instead, since nothing
    below them can be checked.
    """
    if not isinstance(doc, dict):
        raise MalformedDocument("deck document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise UnsupportedSchemaVersion(f"unsupported schema_version {version!r}")

    violations: list[dict] = []

    def bad(pointer: str, message: str) -> None:
        violations.append({"pointer": pointer, "message": message})

    p = doc.get("presentation")
    if not isinstance(p, dict):
        bad("/presentation", "expected object")
        return violations

    def check_str(obj, key, pointer, optional=False):
        if key not in obj:
            if not optional:
                bad(f"{pointer}/{key}", "missing")
            return None
        if not isinstance(obj[key], str):
            bad(f"{pointer}/{key}", "expected string")
            return None
        return obj[key]

    def check_int(obj, key, pointer):
        if key not in obj:
            bad(f"{pointer}/{key}", "missing")
            return None
        v = obj[key]
        if isinstance(v, bool) or not isinstance(v, int):
            bad(f"{pointer}/{key}", "expected integer")
            return None
        return v

    check_str(p, "id", "/presentation")
    check_str(p, "title", "/presentation")
    check_str(p, "created_at", "/presentation")
    total = check_int(p, "total_duration_s", "/presentation")
    if total is not None and total <= 0:
        bad("/presentation/total_duration_s", f"must be positive, got {total}")
    topic = p.get("topic")
    if topic is not None and not isinstance(topic, str):
        bad("/presentation/topic", "expected string or null")

    audience = p.get("audience")
    if not isinstance(audience, dict):
        bad("/presentation/audience", "missing or not an object")
    else:
        level = check_int(audience, "expertise_level", "/presentation/audience")
        if level is not None and not 1 <= level <= 5:
            bad("/presentation/audience/expertise_level", f"must be in [1, 5], got {level}")
        desc = check_str(audience, "description", "/presentation/audience")
        if desc is not None and not desc.strip():
            bad("/presentation/audience/description", "must be non-empty")

    sections = p.get("sections")
    if not isinstance(sections, list):
        bad("/presentation/sections", "missing or not an array")
        return violations

    seen_section_ids: dict[str, str] = {}
    seen_slide_ids: dict[str, str] = {}
    for i, sec in enumerate(sections):
        sp = f"/presentation/sections/{i}"
        if not isinstance(sec, dict):
            bad(sp, "expected object")
            continue
        sid = check_str(sec, "id", sp)
        if sid is not None:
            if sid in seen_section_ids:
                bad(f"{sp}/id", f"duplicate section id (also at {seen_section_ids[sid]})")
            seen_section_ids[sid] = sp
        check_str(sec, "title", sp)
        duration = check_int(sec, "duration_s", sp)
        if duration is not None and duration <= 0:
            bad(f"{sp}/duration_s", f"must be positive, got {duration}")
        emphasis = check_str(sec, "emphasis", sp)
        if emphasis is not None and emphasis not in EMPHASIS_NAMES:
            bad(f"{sp}/emphasis", f"must be one of {list(EMPHASIS_NAMES)}, got {emphasis!r}")
        slides = sec.get("slides")
        if not isinstance(slides, list):
            bad(f"{sp}/slides", "missing or not an array")
            continue
        for j, slide in enumerate(slides):
            slp = f"{sp}/slides/{j}"
            if not isinstance(slide, dict):
                bad(slp, "expected object")
                continue
            slide_id = check_str(slide, "id", slp)
            if slide_id is not None:
                if slide_id in seen_slide_ids:
                    bad(f"{slp}/id", f"duplicate slide id (also at {seen_slide_ids[slide_id]})")
                seen_slide_ids[slide_id] = slp
            title = slide.get("title")
            if title is not None and not isinstance(title, str):
                bad(f"{slp}/title", "expected string or null")
            ref = slide.get("lineage_ref")
            if ref is not None:
                if not isinstance(ref, dict):
                    bad(f"{slp}/lineage_ref", "expected object or null")
                else:
                    check_str(ref, "lineage_id", f"{slp}/lineage_ref")
                    idx = check_int(ref, "version_index", f"{slp}/lineage_ref")
                    if idx is not None and idx < 0:
                        bad(f"{slp}/lineage_ref/version_index", "must be >= 0")
            elements = slide.get("elements")
            if not isinstance(elements, list):
                bad(f"{slp}/elements", "missing or not an array")
                continue
            seen_element_ids: dict[str, str] = {}
            for k, el in enumerate(elements):
                ep = f"{slp}/elements/{k}"
                if not isinstance(el, dict):
                    bad(ep, "expected object")
                    continue
                el_id = check_str(el, "id", ep)
                if el_id is not None:
                    if el_id in seen_element_ids:
                        bad(f"{ep}/id", "duplicate element id within slide")
                    seen_element_ids[el_id] = ep
                kind = check_str(el, "kind", ep)
                if kind is not None and kind not in ("text", "image"):
                    bad(f"{ep}/kind", f'must be "text" or "image", got {kind!r}')
                check_str(el, "content", ep)
                bounds = el.get("bounds")
                if not isinstance(bounds, dict):
                    bad(f"{ep}/bounds", "missing or not an object")
                    continue
                values = {}
                for axis in ("x", "y", "w", "h"):
                    v = bounds.get(axis)
                    if isinstance(v, bool) or not isinstance(v, (int, float)):
                        bad(f"{ep}/bounds/{axis}", "expected number")
                    else:
                        values[axis] = float(v)
                if len(values) == 4:
                    x, y, w, h = values["x"], values["y"], values["w"], values["h"]
                    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                        bad(f"{ep}/bounds", "origin outside the unit square")
                    if w <= 0.0 or h <= 0.0:
                        bad(f"{ep}/bounds", "width and height must be positive")
                    elif x + w > 1.0 or y + h > 1.0:
                        bad(f"{ep}/bounds", "extends past the unit square")
    return violations
