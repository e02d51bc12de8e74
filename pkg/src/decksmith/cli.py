"""deckctl: command-line companion for offline deck workflows.

Exit codes are stable: 0 success, 1 domain violation, 2 malformed input,
3 provider failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import deckjson
from .constraints import compute_conflicts, compute_timeline, conflict_report_bytes
from .errors import (
    ConfigError,
    DeckError,
    EmptySlide,
    MalformedDocument,
    ProviderError,
    UnsupportedSchemaVersion,
)
from .jargon import (
    LiveJargonProvider,
    MockJargonProvider,
    detect_jargon,
    expand_audience_context,
    load_lexicon,
)
from .repository import (
    GRANULARITY_PRESENTATION,
    GRANULARITY_SECTION,
    GRANULARITY_SLIDE,
    Repository,
)
from .service import ServiceConfig, run_service

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MALFORMED = 2
EXIT_PROVIDER = 3


def _fail(message: str, code: int) -> "click.exceptions.Exit":
    click.echo(message, err=True)
    sys.exit(code)


def _read_document(path: str) -> dict:
    """Parse a deck file into a raw document; exit 2 if uninterpretable."""
    try:
        raw = Path(path).read_text("utf-8")
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}", EXIT_MALFORMED)
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        _fail(f"{path} is not valid JSON: {exc}", EXIT_MALFORMED)
    return doc


def _load_deck(path: str):
    """Parse and fully validate a deck file; exits on any problem."""
    doc = _read_document(path)
    try:
        return deckjson.deserialize(json.dumps(doc))
    except (UnsupportedSchemaVersion, MalformedDocument) as exc:
        _fail(str(exc), EXIT_MALFORMED if _uninterpretable(doc) else EXIT_DOMAIN)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)


def _uninterpretable(doc) -> bool:
    return (
        not isinstance(doc, dict)
        or doc.get("schema_version") != deckjson.SCHEMA_VERSION
        or not isinstance(doc.get("presentation"), dict)
    )


@click.group()
def main():
    """Authoring toolkit: validate decks, report conflicts, check jargon,
    work with the slide repository, and run the HTTP service."""


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------


@main.command()
@click.argument("deck_file", type=click.Path())
def validate(deck_file):
    """Check a deck file against the document schema and all invariants."""
    doc = _read_document(deck_file)
    try:
        diagnostics = deckjson.validate_document(doc)
    except (MalformedDocument, UnsupportedSchemaVersion) as exc:
        _fail(str(exc), EXIT_MALFORMED)
    if diagnostics:
        for item in diagnostics:
            click.echo(f"{item['pointer']}: {item['message']}")
        sys.exit(EXIT_DOMAIN)
    click.echo("ok")
    sys.exit(EXIT_OK)


# ---------------------------------------------------------------------------
# conflicts
# ---------------------------------------------------------------------------


@main.command()
@click.argument("deck_file", type=click.Path())
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "json"]),
    default="human",
    show_default=True,
)
def conflicts(deck_file, fmt):
    """Report emphasis/time conflicts and overflow for each section."""
    deck = _load_deck(deck_file)
    if fmt == "json":
        sys.stdout.buffer.write(conflict_report_bytes(deck))
        sys.stdout.buffer.write(b"\n")
        sys.exit(EXIT_OK)

    report = compute_conflicts(deck)
    timeline = {t.section_id: t for t in compute_timeline(deck)}
    for section in deck.sections:
        entry = next(s for s in report.sections if s.section_id == section.id)
        t = timeline[section.id]
        line = (
            f"{section.title}: {entry.conflict_level.name}"
            f" [{t.start}s-{t.end}s, emphasis {section.emphasis.to_json()}]"
        )
        if entry.pairs:
            worst = min(p.ratio for p in entry.pairs)
            line += f" (r={float(worst):.2f})"
        if entry.overflow:
            line += " OVERFLOW"
        click.echo(line)
    click.echo(
        f"total: {report.sum_duration_s}s of {report.total_duration_s}s allocated"
    )
    sys.exit(EXIT_OK)


# ---------------------------------------------------------------------------
# jargon
# ---------------------------------------------------------------------------


@main.command()
@click.argument("deck_file", type=click.Path())
@click.option("--slide", "slide_id", required=True, help="slide id to analyze")
@click.option(
    "--mock-lexicon",
    type=click.Path(),
    default=None,
    help="lexicon JSON for the offline provider (default: bundled)",
)
@click.option("--live", is_flag=True, help="use the live provider (JARGON_* env)")
@click.option(
    "--presentation-context", default=None, help="extra context for audience expansion"
)
def jargon(deck_file, slide_id, mock_lexicon, live, presentation_context):
    """Run the jargon check for one slide and print flagged terms as JSON."""
    deck = _load_deck(deck_file)
    try:
        _section, slide = deck.find_slide(slide_id)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)

    try:
        if live:
            provider = LiveJargonProvider.from_env()
        else:
            provider = MockJargonProvider(load_lexicon(mock_lexicon))
        context = expand_audience_context(provider, deck.audience, presentation_context)
        terms = detect_jargon(provider, slide, context)
    except (ProviderError, ConfigError) as exc:
        _fail(str(exc), EXIT_PROVIDER)
    except EmptySlide as exc:
        _fail(str(exc), EXIT_DOMAIN)
    except DeckError as exc:
        _fail(str(exc), EXIT_MALFORMED if isinstance(exc, MalformedDocument) else EXIT_DOMAIN)

    click.echo(json.dumps([t.to_json() for t in terms], indent=2, ensure_ascii=False))
    sys.exit(EXIT_OK)


# ---------------------------------------------------------------------------
# repo
# ---------------------------------------------------------------------------


@main.group()
def repo():
    """Operate on a slide repository store directory."""


def _open_repo(store: str) -> Repository:
    try:
        return Repository.open(store)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)


@repo.command("save")
@click.argument("deck_file", type=click.Path())
@click.option("--store", required=True, type=click.Path(), help="store directory")
@click.option(
    "--granularity",
    type=click.Choice([GRANULARITY_PRESENTATION, GRANULARITY_SECTION, GRANULARITY_SLIDE]),
    default=GRANULARITY_PRESENTATION,
    show_default=True,
)
@click.option("--id", "value_id", default=None, help="section or slide id to save")
def repo_save(deck_file, store, granularity, value_id):
    """Save a deck (or one of its sections/slides) into the repository."""
    deck = _load_deck(deck_file)
    repository = _open_repo(store)
    try:
        if granularity == GRANULARITY_PRESENTATION:
            value = deck
        elif granularity == GRANULARITY_SECTION:
            if not value_id:
                _fail("--id is required when saving a section", EXIT_DOMAIN)
            value = deck.section(value_id)
        else:
            if not value_id:
                _fail("--id is required when saving a slide", EXIT_DOMAIN)
            _section, value = deck.find_slide(value_id)
        entry = repository.save(value, source_presentation_id=deck.id)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)
    click.echo(
        json.dumps(
            {
                "entry_id": entry.entry_id,
                "granularity": entry.granularity,
                "saved_at": entry.saved_at,
            }
        )
    )
    sys.exit(EXIT_OK)


@repo.command("import")
@click.argument("entry_id")
@click.option("--store", required=True, type=click.Path(), help="store directory")
@click.option("--out", type=click.Path(), default=None, help="write result to a file")
def repo_import(entry_id, store, out):
    """Copy a saved entry out of the repository with fresh ids."""
    repository = _open_repo(store)
    try:
        entry = repository.entry(entry_id)
        value = repository.import_value(entry_id)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)

    if entry.granularity == GRANULARITY_PRESENTATION:
        payload = deckjson.deck_document(value)
    elif entry.granularity == GRANULARITY_SECTION:
        payload = {"granularity": entry.granularity, "section": deckjson.section_to_json(value)}
    else:
        payload = {"granularity": entry.granularity, "slide": deckjson.slide_to_json(value)}

    text = json.dumps(payload, indent=2, ensure_ascii=False)
    if out:
        Path(out).write_text(text + "\n", "utf-8")
        click.echo(f"wrote {out}")
    else:
        click.echo(text)
    sys.exit(EXIT_OK)


@repo.command("search")
@click.argument("query")
@click.option("--store", required=True, type=click.Path(), help="store directory")
@click.option(
    "--granularity",
    type=click.Choice([GRANULARITY_PRESENTATION, GRANULARITY_SECTION, GRANULARITY_SLIDE]),
    default=None,
)
def repo_search(query, store, granularity):
    """Keyword search over saved entries and slide versions."""
    repository = _open_repo(store)
    try:
        hits = repository.search(query, granularity)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)
    click.echo(json.dumps([h.to_json() for h in hits], indent=2, ensure_ascii=False))
    sys.exit(EXIT_OK)


# ---------------------------------------------------------------------------
# serve
# ---------------------------------------------------------------------------


@main.command()
@click.option("--config", "config_file", type=click.Path(), default=None)
@click.option("--store", type=click.Path(), default=None, help="store directory")
@click.option("--bind", default=None, help="host:port to listen on")
def serve(config_file, store, bind):
    """Run the HTTP authoring service."""
    try:
        config = (
            ServiceConfig.from_file(config_file) if config_file else ServiceConfig.from_env()
        )
        if store:
            config.store_dir = store
        if bind:
            config.bind_addr = bind
        config.port  # validates bind_addr early
        run_service(config)
    except DeckError as exc:
        _fail(str(exc), EXIT_DOMAIN)


if __name__ == "__main__":
    main()
