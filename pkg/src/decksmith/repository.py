"""Central slide repository: multi-granularity saves, slide version lineages,
change detection, synchronization, copy-on-import reuse, and keyword search.

Saved payloads are plain JSON documents, deep-copied on the way in and out, so
repository state can never be mutated through values handed to callers.
"""

from __future__ import annotations

import copy
import json
import os
import re
import threading
from dataclasses import dataclass, replace as dc_replace
from pathlib import Path
from typing import Union

from .deckjson import (
    canonical_json_bytes,
    presentation_to_json,
    section_to_json,
    slide_from_json,
    slide_to_json,
)
from .errors import (
    EmptyQuery,
    InvalidDecision,
    StorageFailure,
    StoreLockedError,
    UnknownEntry,
    UnknownLineage,
    UnknownVersion,
)
from .model import LineageRef, Presentation, Section, Slide, new_id, utc_now_iso

STORE_SCHEMA_VERSION = 1

GRANULARITY_PRESENTATION = "presentation"
GRANULARITY_SECTION = "section"
GRANULARITY_SLIDE = "slide"

SavedValue = Union[Presentation, Section, Slide]


# ---------------------------------------------------------------------------
# Slide diffing
# ---------------------------------------------------------------------------

DIFFABLE_FIELDS = ("content", "bounds", "kind")


@dataclass(frozen=True)
class SlideDiff:
    added: tuple[str, ...]
    removed: tuple[str, ...]
    modified: tuple[tuple[str, frozenset[str]], ...]
    title_changed: bool

    @property
    def is_empty(self) -> bool:
        return not (self.added or self.removed or self.modified or self.title_changed)

    def to_json(self) -> dict:
        return {
            "added": list(self.added),
            "removed": list(self.removed),
            "modified": [
                {"element_id": eid, "changed_fields": sorted(fields)}
                for eid, fields in self.modified
            ],
            "title_changed": self.title_changed,
        }


def detect_changes(working: Slide, base: Slide) -> SlideDiff:
    """Element-id keyed diff of a working slide against a saved version.

    Slide id and lineage_ref are ignored; element ids are the correspondence.
    """
    base_by_id = {e.id: e for e in base.elements}
    working_by_id = {e.id: e for e in working.elements}

    added = tuple(e.id for e in working.elements if e.id not in base_by_id)
    removed = tuple(e.id for e in base.elements if e.id not in working_by_id)

    modified = []
    for el in working.elements:
        old = base_by_id.get(el.id)
        if old is None:
            continue
        changed = frozenset(
            field for field in DIFFABLE_FIELDS if getattr(el, field) != getattr(old, field)
        )
        if changed:
            modified.append((el.id, changed))

    return SlideDiff(
        added=added,
        removed=removed,
        modified=tuple(modified),
        title_changed=working.title != base.title,
    )


# ---------------------------------------------------------------------------
# Sync decisions
# ---------------------------------------------------------------------------

IGNORE_CHANGES = "ignore_changes"
SET_AS_ORIGIN = "set_as_origin"
KEEP_BOTH = "keep_both"
REPLACE_CONTENT = "replace_content"

SYNC_DECISION_KINDS = (IGNORE_CHANGES, SET_AS_ORIGIN, KEEP_BOTH, REPLACE_CONTENT)


@dataclass(frozen=True)
class SyncDecision:
    """One of the four resolutions for a changed reused slide."""

    kind: str
    target_version_indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in SYNC_DECISION_KINDS:
            raise InvalidDecision(f"unknown sync decision {self.kind!r}")
        if self.kind == REPLACE_CONTENT:
            if not self.target_version_indices:
                raise InvalidDecision("replace_content requires at least one target version")
            for idx in self.target_version_indices:
                if isinstance(idx, bool) or not isinstance(idx, int) or idx < 0:
                    raise InvalidDecision(f"bad target version index {idx!r}")
        elif self.target_version_indices:
            raise InvalidDecision(f"{self.kind} takes no target versions")


@dataclass(frozen=True)
class SyncOutcome:
    """Where the working slide should point after a sync resolution."""

    lineage_id: str
    version_index: int


# ---------------------------------------------------------------------------
# Repository views
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepositoryEntry:
    entry_id: str
    granularity: str
    payload: dict
    saved_at: str
    source_presentation_id: str | None

    def to_json(self) -> dict:
        return {
            "entry_id": self.entry_id,
            "granularity": self.granularity,
            "payload": self.payload,
            "saved_at": self.saved_at,
            "source_presentation_id": self.source_presentation_id,
        }


@dataclass(frozen=True)
class LineageVersion:
    version_index: int
    payload: dict
    saved_at: str
    replaced_at: str | None = None


@dataclass(frozen=True)
class SlideLineage:
    lineage_id: str
    versions: tuple[LineageVersion, ...]


@dataclass(frozen=True)
class SearchHit:
    kind: str  # "entry" | "slide"
    granularity: str
    score: int
    saved_at: str
    snippet: str
    entry_id: str | None = None
    lineage_id: str | None = None
    version_index: int | None = None

    def to_json(self) -> dict:
        body = {
            "kind": self.kind,
            "granularity": self.granularity,
            "score": self.score,
            "saved_at": self.saved_at,
            "snippet": self.snippet,
        }
        if self.kind == "entry":
            body["entry_id"] = self.entry_id
        else:
            body["lineage_id"] = self.lineage_id
            body["version_index"] = self.version_index
        return body


# ---------------------------------------------------------------------------
# Persistence backends
# ---------------------------------------------------------------------------


class FileStore:
    """One JSON document per entry and lineage under a store directory."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.entries_dir = self.root / "entries"
        self.lineages_dir = self.root / "lineages"
        self.assets_dir = self.root / "assets"
        self._init_layout()

    def _init_layout(self) -> None:
        for d in (self.root, self.entries_dir, self.lineages_dir, self.assets_dir):
            d.mkdir(parents=True, exist_ok=True)
        manifest_path = self.root / "index.json"
        if manifest_path.exists():
            try:
                manifest = json.loads(manifest_path.read_text("utf-8"))
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise StoreLockedError(f"corrupt store manifest {manifest_path}: {exc}") from exc
            if not isinstance(manifest, dict) or manifest.get("schema_version") != STORE_SCHEMA_VERSION:
                raise StoreLockedError(
                    f"unsupported store manifest schema in {manifest_path}"
                )
        else:
            self._write_json(manifest_path, {"schema_version": STORE_SCHEMA_VERSION})

    @staticmethod
    def _write_json(path: Path, doc: dict) -> None:
        tmp = path.with_name(path.name + ".tmp")
        try:
            tmp.write_bytes(canonical_json_bytes(doc))
            os.replace(tmp, path)
        except OSError as exc:
            raise StorageFailure(f"cannot write {path}: {exc}") from exc

    @staticmethod
    def _read_json(path: Path) -> dict:
        try:
            doc = json.loads(path.read_text("utf-8"))
        except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise StorageFailure(f"cannot read {path}: {exc}") from exc
        if not isinstance(doc, dict):
            raise StorageFailure(f"{path}: expected a JSON object")
        return doc

    def load(self) -> tuple[dict[str, dict], dict[str, dict]]:
        entries = {}
        for path in sorted(self.entries_dir.glob("*.json")):
            doc = self._read_json(path)
            entries[doc["entry_id"]] = doc
        lineages = {}
        for path in sorted(self.lineages_dir.glob("*.json")):
            doc = self._read_json(path)
            lineages[doc["lineage_id"]] = doc
        return entries, lineages

    def put_entry(self, doc: dict) -> None:
        self._write_json(self.entries_dir / f"{doc['entry_id']}.json", doc)

    def put_lineage(self, doc: dict) -> None:
        self._write_json(self.lineages_dir / f"{doc['lineage_id']}.json", doc)


# ---------------------------------------------------------------------------
# Repository
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def _tokenize(text: str) -> set[str]:
    return set(_TOKEN_RE.findall(text.lower()))


_SNIPPET_LIMIT = 80


@dataclass
class _IndexDoc:
    key: tuple
    granularity: str
    title_tokens: set[str]
    body_tokens: set[str]
    saved_at: str
    texts: list[str]  # title first, then body fields, for snippets


class Repository:
    """Shared store of saved presentations, sections, and slide lineages.

    Without a backing ``FileStore`` the repository is purely in-memory.
    """

    def __init__(self, store: FileStore | None = None):
        self._store = store
        self._lock = threading.RLock()
        self._entries: dict[str, dict] = {}
        self._lineages: dict[str, dict] = {}
        self._index: dict[tuple, _IndexDoc] = {}
        if store is not None:
            self._entries, self._lineages = store.load()
        self._rebuild_index()

    @classmethod
    def open(cls, root: str | Path) -> "Repository":
        return cls(FileStore(root))

    # -- saving ---------------------------------------------------------------

    def save(self, value: SavedValue, *, source_presentation_id: str | None = None) -> RepositoryEntry:
        """Store a deep copy of the value; slides without a lineage get one,
        with the saved content as version 0."""
        with self._lock:
            if isinstance(value, Presentation):
                granularity = GRANULARITY_PRESENTATION
                payload = presentation_to_json(value)
                slide_objs = [sl for sec in payload["sections"] for sl in sec["slides"]]
            elif isinstance(value, Section):
                granularity = GRANULARITY_SECTION
                payload = section_to_json(value)
                slide_objs = list(payload["slides"])
            elif isinstance(value, Slide):
                granularity = GRANULARITY_SLIDE
                payload = slide_to_json(value)
                slide_objs = [payload]
            else:
                raise TypeError(f"cannot save {type(value).__name__}")

            now = utc_now_iso()
            for slide_obj in slide_objs:
                self._register_slide(slide_obj, now)

            entry = {
                "schema_version": STORE_SCHEMA_VERSION,
                "entry_id": new_id(),
                "granularity": granularity,
                "payload": payload,
                "saved_at": now,
                "source_presentation_id": source_presentation_id,
            }
            self._entries[entry["entry_id"]] = entry
            if self._store is not None:
                self._store.put_entry(entry)
            self._reindex_entry(entry["entry_id"])
            return self._entry_view(entry)

    def _register_slide(self, slide_obj: dict, now: str) -> None:
        """Give a payload slide a lineage: create one for slides without a
        ref, and verify refs that are already present."""
        ref = slide_obj.get("lineage_ref")
        if ref is not None:
            lineage = self._lineages.get(ref["lineage_id"])
            if lineage is None:
                raise UnknownLineage(f"slide references unknown lineage {ref['lineage_id']}")
            if not 0 <= ref["version_index"] < len(lineage["versions"]):
                raise UnknownVersion(
                    f"slide references missing version {ref['version_index']} "
                    f"of lineage {ref['lineage_id']}"
                )
            return
        lineage_id = new_id()
        version_payload = copy.deepcopy(slide_obj)
        version_payload["lineage_ref"] = None
        doc = {
            "schema_version": STORE_SCHEMA_VERSION,
            "lineage_id": lineage_id,
            "versions": [
                {
                    "version_index": 0,
                    "payload": version_payload,
                    "saved_at": now,
                    "replaced_at": None,
                }
            ],
        }
        self._lineages[lineage_id] = doc
        if self._store is not None:
            self._store.put_lineage(doc)
        self._reindex_lineage(lineage_id)
        slide_obj["lineage_ref"] = {"lineage_id": lineage_id, "version_index": 0}

    # -- reading --------------------------------------------------------------

    def entry(self, entry_id: str) -> RepositoryEntry:
        with self._lock:
            doc = self._entries.get(entry_id)
            if doc is None:
                raise UnknownEntry(f"no repository entry {entry_id}")
            return self._entry_view(doc)

    def entries(self) -> list[RepositoryEntry]:
        with self._lock:
            return [self._entry_view(doc) for doc in self._entries.values()]

    @staticmethod
    def _entry_view(doc: dict) -> RepositoryEntry:
        return RepositoryEntry(
            entry_id=doc["entry_id"],
            granularity=doc["granularity"],
            payload=copy.deepcopy(doc["payload"]),
            saved_at=doc["saved_at"],
            source_presentation_id=doc.get("source_presentation_id"),
        )

    def lineage(self, lineage_id: str) -> SlideLineage:
        with self._lock:
            doc = self._lineages.get(lineage_id)
            if doc is None:
                raise UnknownLineage(f"no lineage {lineage_id}")
            return SlideLineage(
                lineage_id=lineage_id,
                versions=tuple(
                    LineageVersion(
                        version_index=v["version_index"],
                        payload=copy.deepcopy(v["payload"]),
                        saved_at=v["saved_at"],
                        replaced_at=v.get("replaced_at"),
                    )
                    for v in doc["versions"]
                ),
            )

    def lineage_ids(self) -> list[str]:
        with self._lock:
            return list(self._lineages)

    def base_slide(self, lineage_id: str, version_index: int) -> Slide:
        """The saved slide value for one lineage version."""
        with self._lock:
            doc = self._lineages.get(lineage_id)
            if doc is None:
                raise UnknownLineage(f"no lineage {lineage_id}")
            if not 0 <= version_index < len(doc["versions"]):
                raise UnknownVersion(
                    f"lineage {lineage_id} has no version {version_index}"
                )
            return slide_from_json(copy.deepcopy(doc["versions"][version_index]["payload"]))

    # -- reuse ----------------------------------------------------------------

    def import_value(self, entry_id: str) -> SavedValue:
        """Deep copy of a saved entry with fresh presentation/section/slide ids.

        Element ids are preserved: they key change detection against the slide's
        lineage, so an untouched copy diffs as unchanged.
        """
        entry = self.entry(entry_id)
        payload = entry.payload  # already a deep copy
        if entry.granularity == GRANULARITY_PRESENTATION:
            payload["id"] = new_id()
            for section in payload["sections"]:
                section["id"] = new_id()
                for slide in section["slides"]:
                    slide["id"] = new_id()
            from .deckjson import presentation_from_json

            return presentation_from_json(payload)
        if entry.granularity == GRANULARITY_SECTION:
            payload["id"] = new_id()
            for slide in payload["slides"]:
                slide["id"] = new_id()
            from .deckjson import section_from_json

            return section_from_json(payload)
        payload["id"] = new_id()
        return slide_from_json(payload)

    def materialize_slide(self, lineage_id: str, version_index: int) -> Slide:
        """Fresh-id copy of one lineage version, linked back to it."""
        base = self.base_slide(lineage_id, version_index)
        return dc_replace(
            base,
            id=new_id(),
            lineage_ref=LineageRef(lineage_id=lineage_id, version_index=version_index),
        )

    # -- synchronization --------------------------------------------------------

    def resolve_sync(self, lineage_id: str, working: Slide, decision: SyncDecision) -> SyncOutcome:
        """Apply one of the four sync resolutions and report the version the
        working slide should now be linked to."""
        with self._lock:
            doc = self._lineages.get(lineage_id)
            if doc is None:
                raise UnknownLineage(f"no lineage {lineage_id}")
            versions = doc["versions"]
            now = utc_now_iso()

            if decision.kind == IGNORE_CHANGES:
                ref = working.lineage_ref
                if ref is not None and ref.lineage_id == lineage_id:
                    index = ref.version_index
                else:
                    index = len(versions) - 1
                return SyncOutcome(lineage_id, index)

            content = slide_to_json(working)
            content["lineage_ref"] = None

            if decision.kind == SET_AS_ORIGIN:
                new_lineage_id = new_id()
                new_doc = {
                    "schema_version": STORE_SCHEMA_VERSION,
                    "lineage_id": new_lineage_id,
                    "versions": [
                        {
                            "version_index": 0,
                            "payload": content,
                            "saved_at": now,
                            "replaced_at": None,
                        }
                    ],
                }
                self._lineages[new_lineage_id] = new_doc
                if self._store is not None:
                    self._store.put_lineage(new_doc)
                self._reindex_lineage(new_lineage_id)
                return SyncOutcome(new_lineage_id, 0)

            if decision.kind == KEEP_BOTH:
                index = len(versions)
                versions.append(
                    {
                        "version_index": index,
                        "payload": content,
                        "saved_at": now,
                        "replaced_at": None,
                    }
                )
                if self._store is not None:
                    self._store.put_lineage(doc)
                self._reindex_lineage(lineage_id)
                return SyncOutcome(lineage_id, index)

            # replace_content
            for idx in decision.target_version_indices:
                if not 0 <= idx < len(versions):
                    raise UnknownVersion(f"lineage {lineage_id} has no version {idx}")
            for idx in decision.target_version_indices:
                old = versions[idx]
                versions[idx] = {
                    "version_index": idx,
                    "payload": copy.deepcopy(content),
                    "saved_at": old["saved_at"],
                    "replaced_at": now,
                }
            if self._store is not None:
                self._store.put_lineage(doc)
            self._reindex_lineage(lineage_id)
            return SyncOutcome(lineage_id, max(decision.target_version_indices))

    # -- search -----------------------------------------------------------------

    def search(self, query: str, granularity: str | None = None) -> list[SearchHit]:
        """Case-insensitive token search; titles weigh double. Deterministic
        order: score desc, then most recent saved_at, then stable key."""
        if not query or not query.strip():
            raise EmptyQuery("search query must be non-empty")
        tokens = _tokenize(query)
        if not tokens:
            return []
        with self._lock:
            hits = []
            for doc in self._index.values():
                if granularity is not None and doc.granularity != granularity:
                    continue
                score = 2 * len(tokens & doc.title_tokens) + len(tokens & doc.body_tokens)
                if score == 0:
                    continue
                hits.append(self._hit_for(doc, score, tokens))
            hits.sort(key=lambda h: (-h.score, _reverse_text(h.saved_at), _hit_key(h)))
            return hits

    @staticmethod
    def _hit_for(doc: _IndexDoc, score: int, tokens: set[str]) -> SearchHit:
        snippet = ""
        for text in doc.texts:
            if tokens & _tokenize(text):
                snippet = text[:_SNIPPET_LIMIT]
                break
        if doc.key[0] == "entry":
            return SearchHit(
                kind="entry",
                granularity=doc.granularity,
                score=score,
                saved_at=doc.saved_at,
                snippet=snippet,
                entry_id=doc.key[1],
            )
        return SearchHit(
            kind="slide",
            granularity=doc.granularity,
            score=score,
            saved_at=doc.saved_at,
            snippet=snippet,
            lineage_id=doc.key[1],
            version_index=doc.key[2],
        )

    # -- index maintenance --------------------------------------------------------

    def _rebuild_index(self) -> None:
        self._index = {}
        for entry_id in self._entries:
            self._reindex_entry(entry_id)
        for lineage_id in self._lineages:
            self._reindex_lineage(lineage_id)

    def _reindex_entry(self, entry_id: str) -> None:
        doc = self._entries[entry_id]
        # Slide-granularity entries are reachable through their lineage; indexing
        # them twice would duplicate every hit.
        if doc["granularity"] == GRANULARITY_SLIDE:
            return
        payload = doc["payload"]
        title = payload.get("title") or ""
        if doc["granularity"] == GRANULARITY_PRESENTATION:
            slides = [sl for sec in payload["sections"] for sl in sec["slides"]]
            body_texts = [sec.get("title") or "" for sec in payload["sections"]]
        else:
            slides = list(payload["slides"])
            body_texts = []
        for slide in slides:
            body_texts.append(slide.get("title") or "")
            body_texts.extend(
                el["content"] for el in slide["elements"] if el["kind"] == "text"
            )
        body_texts = [t for t in body_texts if t]
        key = ("entry", entry_id)
        self._index[key] = _IndexDoc(
            key=key,
            granularity=doc["granularity"],
            title_tokens=_tokenize(title),
            body_tokens=set().union(*[_tokenize(t) for t in body_texts]) if body_texts else set(),
            saved_at=doc["saved_at"],
            texts=[title] + body_texts,
        )

    def _reindex_lineage(self, lineage_id: str) -> None:
        doc = self._lineages[lineage_id]
        stale = [k for k in self._index if k[0] == "slide" and k[1] == lineage_id]
        for k in stale:
            del self._index[k]
        for version in doc["versions"]:
            payload = version["payload"]
            title = payload.get("title") or ""
            body_texts = [
                el["content"]
                for el in payload["elements"]
                if el["kind"] == "text" and el["content"]
            ]
            key = ("slide", lineage_id, version["version_index"])
            self._index[key] = _IndexDoc(
                key=key,
                granularity=GRANULARITY_SLIDE,
                title_tokens=_tokenize(title),
                body_tokens=set().union(*[_tokenize(t) for t in body_texts])
                if body_texts
                else set(),
                saved_at=version.get("replaced_at") or version["saved_at"],
                texts=[title] + body_texts,
            )


def _reverse_text(s: str) -> tuple:
    # Sort helper: lexicographically descending ISO timestamps == most recent first.
    return tuple(-ord(c) for c in s)


def _hit_key(hit: SearchHit) -> tuple:
    if hit.kind == "entry":
        return ("entry", hit.entry_id or "")
    return ("slide", hit.lineage_id or "", hit.version_index or 0)


# ---------------------------------------------------------------------------
# Deck-level reuse helpers
# ---------------------------------------------------------------------------


def reuse_slide(
    repo: Repository,
    presentation: Presentation,
    lineage_id: str,
    version_index: int,
    target_section_id: str,
    position: int | None = None,
) -> tuple[Presentation, Slide]:
    """Copy one lineage version into a section of the working presentation."""
    presentation.section(target_section_id)  # raises UnknownSection early
    slide = repo.materialize_slide(lineage_id, version_index)
    from .model import insert_slide

    return insert_slide(presentation, target_section_id, slide, position), slide
