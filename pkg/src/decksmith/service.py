"""HTTP JSON service for deck authoring.

One workspace per open presentation, holding the current deck snapshot, a
monotonically increasing revision number, and the session's jargon hide
state. Mutating endpoints accept an optional ``revision`` field in the body;
when present and stale the request is rejected with 409 so two clients
editing the same deck cannot silently overwrite each other.

Every error is serialized as ``{"error": {"code", "message", "details"}}``
with a stable machine-readable code.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, replace as dc_replace
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.concurrency import run_in_threadpool
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import model
from .assets import AssetStore
from .constraints import conflict_report_bytes
from .deckjson import (
    SCHEMA_VERSION,
    element_from_json,
    presentation_to_json,
    section_to_json,
    slide_to_json,
)
from .errors import (
    ConfigError,
    DeckError,
    GranularityMismatch,
    InvalidDecision,
    MalformedDocument,
    NoLineage,
    RevisionConflict,
    UnknownAsset,
    UnknownPresentation,
    UnknownSection,
    UnknownSlide,
)
from .jargon import (
    HideState,
    LiveJargonProvider,
    MockJargonProvider,
    detect_jargon,
    expand_audience_context,
    hide_all,
    hide_term,
    load_lexicon,
    reset_hidden,
)
from .jargon.pipeline import canonical_slide_text
from .model import AudienceProfile, Emphasis, LineageRef, Presentation, Section, Slide
from .repository import (
    GRANULARITY_PRESENTATION,
    GRANULARITY_SECTION,
    GRANULARITY_SLIDE,
    Repository,
    SyncDecision,
    detect_changes,
)

_STATUS_BY_CODE = {
    "unknown_presentation": 404,
    "unknown_section": 404,
    "unknown_slide": 404,
    "unknown_element": 404,
    "unknown_entry": 404,
    "unknown_lineage": 404,
    "unknown_version": 404,
    "unknown_asset": 404,
    "not_found": 404,
    "revision_conflict": 409,
    "provider_error": 502,
    "storage_failure": 500,
    "store_locked": 500,
    "config_error": 500,
}
_DEFAULT_ERROR_STATUS = 400


def _error_status(code: str) -> int:
    return _STATUS_BY_CODE.get(code, _DEFAULT_ERROR_STATUS)


def _error_response(code: str, message: str, details=None, status: int | None = None):
    return JSONResponse(
        status_code=status if status is not None else _error_status(code),
        content={"error": {"code": code, "message": message, "details": details}},
    )


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

ENV_BIND_ADDR = "BIND_ADDR"
ENV_STORE_DIR = "STORE_DIR"

DEFAULT_BIND_ADDR = "127.0.0.1:8321"
DEFAULT_JARGON_CONCURRENCY = 4


@dataclass
class ServiceConfig:
    bind_addr: str = DEFAULT_BIND_ADDR
    store_dir: str | None = None
    lexicon_path: str | None = None
    jargon_api_url: str | None = None
    jargon_api_key: str | None = None
    jargon_model: str | None = None
    max_concurrent_jargon: int = DEFAULT_JARGON_CONCURRENCY

    @classmethod
    def from_env(cls, environ=None) -> "ServiceConfig":
        env = os.environ if environ is None else environ
        return cls(
            bind_addr=env.get(ENV_BIND_ADDR, DEFAULT_BIND_ADDR),
            store_dir=env.get(ENV_STORE_DIR) or None,
            jargon_api_url=env.get("JARGON_API_URL") or None,
            jargon_api_key=env.get("JARGON_API_KEY") or None,
            jargon_model=env.get("JARGON_MODEL") or None,
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        try:
            raw = json.loads(Path(path).read_text("utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot load config {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"config {path} must be a JSON object")
        config = cls()
        for key in (
            "bind_addr",
            "store_dir",
            "lexicon_path",
            "jargon_api_url",
            "jargon_api_key",
            "jargon_model",
            "max_concurrent_jargon",
        ):
            if key in raw:
                setattr(config, key, raw[key])
        return config

    @property
    def host(self) -> str:
        return self.bind_addr.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        try:
            return int(self.bind_addr.rsplit(":", 1)[1])
        except (IndexError, ValueError) as exc:
            raise ConfigError(f"bind_addr {self.bind_addr!r} must be host:port") from exc


# ---------------------------------------------------------------------------
# Workspaces
# ---------------------------------------------------------------------------


class Workspace:
    """One open presentation plus its session-scoped editing state."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.revision = 0
        self.hide_state = HideState()
        self.expansions: dict[tuple, object] = {}
        self.lock = threading.RLock()

    def check_revision(self, body: dict) -> None:
        token = body.get("revision")
        if token is None:
            return
        if isinstance(token, bool) or not isinstance(token, int):
            raise MalformedDocument("revision must be an integer")
        if token != self.revision:
            raise RevisionConflict(
                f"revision {token} is stale, current revision is {self.revision}"
            )

    def commit(self, presentation: Presentation) -> None:
        self.presentation = presentation
        self.revision += 1


class ServiceState:
    def __init__(self, config: ServiceConfig, repository: Repository, assets: AssetStore, provider):
        self.config = config
        self.repository = repository
        self.assets = assets
        self.provider = provider
        self.workspaces: dict[str, Workspace] = {}
        self.lock = threading.RLock()
        self.jargon_slots = threading.BoundedSemaphore(config.max_concurrent_jargon)

    def add_workspace(self, presentation: Presentation) -> Workspace:
        workspace = Workspace(presentation)
        with self.lock:
            self.workspaces[presentation.id] = workspace
        return workspace

    def workspace(self, presentation_id: str) -> Workspace:
        with self.lock:
            workspace = self.workspaces.get(presentation_id)
        if workspace is None:
            raise UnknownPresentation(f"no presentation {presentation_id}")
        return workspace

    def find_section(self, section_id: str) -> tuple[Workspace, Section]:
        with self.lock:
            workspaces = list(self.workspaces.values())
        for workspace in workspaces:
            for section in workspace.presentation.sections:
                if section.id == section_id:
                    return workspace, section
        raise UnknownSection(f"no section {section_id}")

    def find_slide(self, slide_id: str) -> tuple[Workspace, Section, Slide]:
        with self.lock:
            workspaces = list(self.workspaces.values())
        for workspace in workspaces:
            for section in workspace.presentation.sections:
                for slide in section.slides:
                    if slide.id == slide_id:
                        return workspace, section, slide
        raise UnknownSlide(f"no slide {slide_id}")


# ---------------------------------------------------------------------------
# Request parsing helpers
# ---------------------------------------------------------------------------


async def _json_body(request: Request) -> dict:
    raw = await request.body()
    if not raw:
        return {}
    try:
        doc = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocument("request body must be a JSON object")
    return doc


def _require(body: dict, key: str):
    if key not in body:
        raise MalformedDocument(f"missing required field {key!r}")
    return body[key]


def _require_str(body: dict, key: str) -> str:
    value = _require(body, key)
    if not isinstance(value, str):
        raise MalformedDocument(f"field {key!r} must be a string")
    return value


def _require_int(body: dict, key: str) -> int:
    value = _require(body, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(f"field {key!r} must be an integer")
    return value


def _opt_int(body: dict, key: str) -> int | None:
    value = body.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(f"field {key!r} must be an integer")
    return value


def _parse_audience(raw) -> AudienceProfile:
    if not isinstance(raw, dict):
        raise MalformedDocument("audience must be an object")
    return AudienceProfile(
        expertise_level=_require_int(raw, "expertise_level"),
        description=_require_str(raw, "description"),
    )


def _parse_elements(raw) -> tuple:
    if not isinstance(raw, list):
        raise MalformedDocument("elements must be a list")
    elements = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict):
            raise MalformedDocument(f"elements[{i}] must be an object")
        item = dict(item)
        item.setdefault("id", model.new_id())
        elements.append(element_from_json(item, where=f"elements[{i}]"))
    return tuple(elements)


def _parse_emphasis(raw) -> Emphasis:
    if not isinstance(raw, str):
        raise MalformedDocument("emphasis must be a string")
    return Emphasis.from_json(raw)


# ---------------------------------------------------------------------------
# Response helpers
# ---------------------------------------------------------------------------


def _dirty_slide_ids(state: ServiceState, presentation: Presentation) -> list[str]:
    dirty = []
    for section in presentation.sections:
        for slide in section.slides:
            ref = slide.lineage_ref
            if ref is None:
                continue
            try:
                base = state.repository.base_slide(ref.lineage_id, ref.version_index)
            except DeckError:
                continue
            if not detect_changes(slide, base).is_empty:
                dirty.append(slide.id)
    return dirty


def _presentation_body(state: ServiceState, workspace: Workspace) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "presentation": presentation_to_json(workspace.presentation),
        "revision": workspace.revision,
        "dirty_slide_ids": _dirty_slide_ids(state, workspace.presentation),
    }


# ---------------------------------------------------------------------------
# Application factory
# ---------------------------------------------------------------------------


def build_provider(config: ServiceConfig):
    if config.jargon_api_url:
        return LiveJargonProvider(
            api_url=config.jargon_api_url,
            model=config.jargon_model or "",
            api_key=config.jargon_api_key,
        )
    return MockJargonProvider(load_lexicon(config.lexicon_path))


def create_app(
    config: ServiceConfig | None = None,
    *,
    repository: Repository | None = None,
    assets: AssetStore | None = None,
    provider=None,
) -> FastAPI:
    config = config or ServiceConfig()
    if repository is None:
        repository = (
            Repository.open(config.store_dir) if config.store_dir else Repository()
        )
    if assets is None:
        assets = (
            AssetStore(Path(config.store_dir) / "assets") if config.store_dir else AssetStore()
        )
    if provider is None:
        provider = build_provider(config)

    state = ServiceState(config, repository, assets, provider)
    app = FastAPI(title="deck authoring service", docs_url=None, redoc_url=None)
    app.state.service = state

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(DeckError)
    async def _deck_error(_request: Request, exc: DeckError):
        return _error_response(exc.code, str(exc), exc.details)

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(_request: Request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return _error_response(code, str(exc.detail), status=exc.status_code)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        return _error_response("malformed_document", "invalid request", exc.errors())

    # -- health -----------------------------------------------------------------

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok"}

    # -- presentations ------------------------------------------------------------

    @app.post("/presentations", status_code=201)
    async def create_presentation(request: Request):
        body = await _json_body(request)
        presentation = model.create_presentation(
            title=_require_str(body, "title"),
            total_duration_s=_require_int(body, "total_duration_s"),
            audience=_parse_audience(_require(body, "audience")),
            topic=body.get("topic"),
        )
        workspace = state.add_workspace(presentation)
        return _presentation_body(state, workspace)

    @app.get("/presentations")
    async def list_presentations():
        with state.lock:
            workspaces = list(state.workspaces.values())
        return {
            "presentations": [
                {
                    "id": w.presentation.id,
                    "title": w.presentation.title,
                    "revision": w.revision,
                }
                for w in workspaces
            ]
        }

    @app.get("/presentations/{presentation_id}")
    async def get_presentation(presentation_id: str):
        workspace = state.workspace(presentation_id)
        with workspace.lock:
            return _presentation_body(state, workspace)

    @app.patch("/presentations/{presentation_id}")
    async def patch_presentation(presentation_id: str, request: Request):
        body = await _json_body(request)
        workspace = state.workspace(presentation_id)
        with workspace.lock:
            workspace.check_revision(body)
            kwargs = {}
            if "title" in body:
                kwargs["title"] = _require_str(body, "title")
            if "total_duration_s" in body:
                kwargs["total_duration_s"] = _require_int(body, "total_duration_s")
            if "audience" in body:
                kwargs["audience"] = _parse_audience(body["audience"])
            if "topic" in body:
                topic = body["topic"]
                if topic is not None and not isinstance(topic, str):
                    raise MalformedDocument("topic must be a string or null")
                kwargs["topic"] = topic
            updated = model.update_presentation(workspace.presentation, **kwargs)
            workspace.commit(updated)
            return _presentation_body(state, workspace)

    # -- sections -----------------------------------------------------------------

    @app.post("/presentations/{presentation_id}/sections", status_code=201)
    async def add_section(presentation_id: str, request: Request):
        body = await _json_body(request)
        workspace = state.workspace(presentation_id)
        with workspace.lock:
            workspace.check_revision(body)
            emphasis = _parse_emphasis(body["emphasis"]) if "emphasis" in body else None
            updated, section = model.add_section(
                workspace.presentation,
                title=_require_str(body, "title"),
                duration_s=_opt_int(body, "duration_s"),
                emphasis=emphasis,
                position=_opt_int(body, "position"),
            )
            workspace.commit(updated)
            return {"section": section_to_json(section), "revision": workspace.revision}

    @app.patch("/sections/{section_id}")
    async def patch_section(section_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section = state.find_section(section_id)
        with workspace.lock:
            workspace.check_revision(body)
            kwargs = {}
            if "title" in body:
                kwargs["title"] = _require_str(body, "title")
            if "duration_s" in body:
                kwargs["duration_s"] = _require_int(body, "duration_s")
            if "emphasis" in body:
                kwargs["emphasis"] = _parse_emphasis(body["emphasis"])
            updated = model.update_section(workspace.presentation, section_id, **kwargs)
            workspace.commit(updated)
            return {
                "section": section_to_json(updated.section(section_id)),
                "revision": workspace.revision,
            }

    @app.put("/presentations/{presentation_id}/section-order")
    async def reorder_sections(presentation_id: str, request: Request):
        body = await _json_body(request)
        workspace = state.workspace(presentation_id)
        with workspace.lock:
            workspace.check_revision(body)
            order = _require(body, "order")
            if not isinstance(order, list) or not all(isinstance(x, str) for x in order):
                raise MalformedDocument("order must be a list of section ids")
            updated = model.reorder_sections(workspace.presentation, order)
            workspace.commit(updated)
            return _presentation_body(state, workspace)

    # -- slides ---------------------------------------------------------------------

    @app.post("/sections/{section_id}/slides", status_code=201)
    async def add_slide(section_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section = state.find_section(section_id)
        with workspace.lock:
            workspace.check_revision(body)
            title = body.get("title")
            if title is not None and not isinstance(title, str):
                raise MalformedDocument("title must be a string or null")
            elements = _parse_elements(body.get("elements", []))
            updated, slide = model.add_slide(
                workspace.presentation,
                section_id,
                title=title,
                elements=elements,
                position=_opt_int(body, "position"),
            )
            workspace.commit(updated)
            return {"slide": slide_to_json(slide), "revision": workspace.revision}

    @app.patch("/slides/{slide_id}")
    async def patch_slide(slide_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section, _slide = state.find_slide(slide_id)
        with workspace.lock:
            workspace.check_revision(body)
            kwargs = {}
            if "title" in body:
                title = body["title"]
                if title is not None and not isinstance(title, str):
                    raise MalformedDocument("title must be a string or null")
                kwargs["title"] = title
            if "elements" in body:
                kwargs["elements"] = _parse_elements(body["elements"])
            updated = model.update_slide(workspace.presentation, slide_id, **kwargs)
            _section2, slide = updated.find_slide(slide_id)
            workspace.commit(updated)
            return {"slide": slide_to_json(slide), "revision": workspace.revision}

    @app.put("/slides/{slide_id}/move")
    async def move_slide(slide_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section, _slide = state.find_slide(slide_id)
        with workspace.lock:
            workspace.check_revision(body)
            updated = model.move_slide(
                workspace.presentation,
                slide_id,
                _require_str(body, "target_section_id"),
                position=_opt_int(body, "position"),
            )
            workspace.commit(updated)
            return _presentation_body(state, workspace)

    # -- constraint reports -----------------------------------------------------------

    @app.get("/presentations/{presentation_id}/conflicts")
    async def get_conflicts(presentation_id: str):
        workspace = state.workspace(presentation_id)
        with workspace.lock:
            payload = conflict_report_bytes(workspace.presentation)
        return Response(content=payload, media_type="application/json")

    # -- repository ---------------------------------------------------------------------

    @app.post("/repository/save", status_code=201)
    async def repository_save(request: Request):
        body = await _json_body(request)
        granularity = _require_str(body, "granularity")
        workspace = state.workspace(_require_str(body, "presentation_id"))
        with workspace.lock:
            workspace.check_revision(body)
            presentation = workspace.presentation
            if granularity == GRANULARITY_PRESENTATION:
                value = presentation
            elif granularity == GRANULARITY_SECTION:
                value = presentation.section(_require_str(body, "section_id"))
            elif granularity == GRANULARITY_SLIDE:
                _section, value = presentation.find_slide(_require_str(body, "slide_id"))
            else:
                raise GranularityMismatch(f"unknown granularity {granularity!r}")
            entry = state.repository.save(value, source_presentation_id=presentation.id)

            # Saving may have created lineages for slides that had none; bind
            # those references back into the working deck.
            refs = _lineage_refs_in_payload(entry.granularity, entry.payload)
            updated = presentation
            changed = False
            for section in presentation.sections:
                for slide in section.slides:
                    ref = refs.get(slide.id)
                    if ref is not None and slide.lineage_ref != ref:
                        updated = model.replace_slide(
                            updated, dc_replace(slide, lineage_ref=ref)
                        )
                        changed = True
            if changed:
                workspace.commit(updated)
            return {
                "entry_id": entry.entry_id,
                "granularity": entry.granularity,
                "saved_at": entry.saved_at,
                "revision": workspace.revision,
            }

    @app.get("/repository/entries")
    async def repository_entries():
        entries = state.repository.entries()
        return {
            "entries": [
                {
                    "entry_id": e.entry_id,
                    "granularity": e.granularity,
                    "saved_at": e.saved_at,
                    "source_presentation_id": e.source_presentation_id,
                    "title": e.payload.get("title"),
                }
                for e in sorted(entries, key=lambda e: e.saved_at, reverse=True)
            ]
        }

    @app.get("/repository/search")
    async def repository_search(q: str = "", granularity: str | None = None):
        if granularity is not None and granularity not in (
            GRANULARITY_PRESENTATION,
            GRANULARITY_SECTION,
            GRANULARITY_SLIDE,
        ):
            raise GranularityMismatch(f"unknown granularity {granularity!r}")
        hits = state.repository.search(q, granularity)
        return {"hits": [h.to_json() for h in hits]}

    @app.post("/repository/import", status_code=201)
    async def repository_import(request: Request):
        body = await _json_body(request)
        entry_id = _require_str(body, "entry_id")
        entry = state.repository.entry(entry_id)
        value = state.repository.import_value(entry_id)

        if entry.granularity == GRANULARITY_PRESENTATION:
            workspace = state.add_workspace(value)
            return _presentation_body(state, workspace)

        if entry.granularity == GRANULARITY_SECTION:
            if "presentation_id" not in body:
                raise GranularityMismatch("importing a section requires presentation_id")
            workspace = state.workspace(_require_str(body, "presentation_id"))
            with workspace.lock:
                workspace.check_revision(body)
                updated = model.insert_section(
                    workspace.presentation, value, position=_opt_int(body, "position")
                )
                workspace.commit(updated)
                return {
                    "section": section_to_json(value),
                    "revision": workspace.revision,
                }

        if "presentation_id" not in body or "section_id" not in body:
            raise GranularityMismatch(
                "importing a slide requires presentation_id and section_id"
            )
        workspace = state.workspace(_require_str(body, "presentation_id"))
        with workspace.lock:
            workspace.check_revision(body)
            updated = model.insert_slide(
                workspace.presentation,
                _require_str(body, "section_id"),
                value,
                position=_opt_int(body, "position"),
            )
            workspace.commit(updated)
            return {"slide": slide_to_json(value), "revision": workspace.revision}

    @app.post("/repository/reuse-slide", status_code=201)
    async def repository_reuse_slide(request: Request):
        body = await _json_body(request)
        workspace = state.workspace(_require_str(body, "presentation_id"))
        with workspace.lock:
            workspace.check_revision(body)
            section_id = _require_str(body, "section_id")
            workspace.presentation.section(section_id)
            slide = state.repository.materialize_slide(
                _require_str(body, "lineage_id"), _require_int(body, "version_index")
            )
            updated = model.insert_slide(
                workspace.presentation, section_id, slide, position=_opt_int(body, "position")
            )
            workspace.commit(updated)
            return {"slide": slide_to_json(slide), "revision": workspace.revision}

    @app.get("/lineages/{lineage_id}")
    async def get_lineage(lineage_id: str):
        lineage = state.repository.lineage(lineage_id)
        return {
            "lineage_id": lineage.lineage_id,
            "versions": [
                {
                    "version_index": v.version_index,
                    "saved_at": v.saved_at,
                    "replaced_at": v.replaced_at,
                    "slide": v.payload,
                }
                for v in lineage.versions
            ],
        }

    # -- diff & sync ----------------------------------------------------------------------

    @app.get("/slides/{slide_id}/diff")
    async def slide_diff(slide_id: str):
        workspace, _section, slide = state.find_slide(slide_id)
        with workspace.lock:
            if slide.lineage_ref is None:
                raise NoLineage(f"slide {slide_id} is not linked to a lineage")
            ref = slide.lineage_ref
            base = state.repository.base_slide(ref.lineage_id, ref.version_index)
            diff = detect_changes(slide, base)
            return {
                "slide_id": slide_id,
                "lineage_id": ref.lineage_id,
                "version_index": ref.version_index,
                "dirty": not diff.is_empty,
                "diff": diff.to_json(),
            }

    @app.post("/slides/{slide_id}/sync")
    async def slide_sync(slide_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section, slide = state.find_slide(slide_id)
        with workspace.lock:
            workspace.check_revision(body)
            if slide.lineage_ref is None:
                raise NoLineage(f"slide {slide_id} is not linked to a lineage")
            decision_kind = _require(body, "decision")
            if not isinstance(decision_kind, str):
                raise InvalidDecision("decision must be a string")
            targets = body.get("target_version_indices", [])
            if not isinstance(targets, list):
                raise InvalidDecision("target_version_indices must be a list")
            for t in targets:
                if isinstance(t, bool) or not isinstance(t, int):
                    raise InvalidDecision("target_version_indices must be integers")
            decision = SyncDecision(decision_kind, tuple(targets))

            ref = slide.lineage_ref
            outcome = state.repository.resolve_sync(ref.lineage_id, slide, decision)

            if decision.kind == "ignore_changes":
                # Discard local edits: restore the working slide from its base.
                base = state.repository.base_slide(ref.lineage_id, ref.version_index)
                new_slide = dc_replace(slide, title=base.title, elements=base.elements)
            else:
                new_slide = dc_replace(
                    slide,
                    lineage_ref=LineageRef(
                        lineage_id=outcome.lineage_id, version_index=outcome.version_index
                    ),
                )
            updated = model.replace_slide(workspace.presentation, new_slide)
            workspace.commit(updated)
            return {
                "slide": slide_to_json(new_slide),
                "outcome": {
                    "lineage_id": outcome.lineage_id,
                    "version_index": outcome.version_index,
                },
                "revision": workspace.revision,
            }

    # -- jargon ------------------------------------------------------------------------------

    def _expanded_context(workspace: Workspace, presentation_context: str | None):
        audience = workspace.presentation.audience
        key = (audience.description, audience.expertise_level, presentation_context)
        cached = workspace.expansions.get(key)
        if cached is not None:
            return cached
        with state.jargon_slots:
            context = expand_audience_context(state.provider, audience, presentation_context)
        workspace.expansions[key] = context
        return context

    @app.post("/slides/{slide_id}/jargon-check")
    async def jargon_check(slide_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section, slide = state.find_slide(slide_id)
        presentation_context = body.get("presentation_context")
        if presentation_context is not None and not isinstance(presentation_context, str):
            raise MalformedDocument("presentation_context must be a string or null")

        def run():
            context = _expanded_context(workspace, presentation_context)
            with state.jargon_slots:
                terms = detect_jargon(
                    state.provider,
                    slide,
                    context,
                    hide_state=workspace.hide_state,
                    presentation_id=workspace.presentation.id,
                )
            return context, terms

        context, terms = await run_in_threadpool(run)
        return {
            "slide_id": slide_id,
            "slide_text": canonical_slide_text(slide),
            "context": context.to_json(),
            "terms": [t.to_json() for t in terms],
        }

    @app.post("/slides/{slide_id}/jargon-hide")
    async def jargon_hide(slide_id: str, request: Request):
        body = await _json_body(request)
        workspace, _section, slide = state.find_slide(slide_id)
        with workspace.lock:
            pid = workspace.presentation.id
            if body.get("reset"):
                workspace.hide_state = reset_hidden(workspace.hide_state, pid, slide_id)
            elif body.get("all"):
                workspace.hide_state = hide_all(workspace.hide_state, pid, slide_id)
            else:
                term = _require_str(body, "term")
                workspace.hide_state = hide_term(workspace.hide_state, pid, slide_id, term)
            return {
                "slide_id": slide_id,
                "hidden_terms": sorted(workspace.hide_state.hidden_terms(pid, slide_id)),
                "all_hidden": workspace.hide_state.is_all_hidden(pid, slide_id),
            }

    # -- assets ---------------------------------------------------------------------------------

    @app.post("/assets", status_code=201)
    async def upload_asset(request: Request):
        data = await request.body()
        if not data:
            raise MalformedDocument("asset upload body is empty")
        digest = state.assets.put(data)
        return {"sha256": digest}

    @app.get("/assets/{digest}")
    async def get_asset(digest: str):
        if not state.assets.exists(digest):
            raise UnknownAsset(f"no asset {digest}")
        return Response(content=state.assets.get(digest), media_type="application/octet-stream")

    return app


def _lineage_refs_in_payload(granularity: str, payload: dict) -> dict[str, LineageRef]:
    """slide id -> lineage ref for every slide embedded in a saved payload."""
    if granularity == GRANULARITY_PRESENTATION:
        slides = [sl for sec in payload["sections"] for sl in sec["slides"]]
    elif granularity == GRANULARITY_SECTION:
        slides = list(payload["slides"])
    else:
        slides = [payload]
    refs = {}
    for slide in slides:
        ref = slide.get("lineage_ref")
        if ref is not None:
            refs[slide["id"]] = LineageRef(
                lineage_id=ref["lineage_id"], version_index=ref["version_index"]
            )
    return refs


def run_service(config: ServiceConfig) -> None:
    """Blocking entry point used by the CLI's serve command."""
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
