"""Error taxonomy shared by the engine, HTTP service, and CLI.

Every error carries a stable machine-readable ``code``; the service maps
codes to HTTP statuses and the CLI maps them to exit codes.
"""

from __future__ import annotations

from typing import Any


class DeckError(Exception):
    """Base class for all engine errors."""

    code = "deck_error"

    def __init__(self, message: str, *, details: Any = None):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict:
        body: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details is not None:
            body["details"] = self.details
        return body


# -- deck model -------------------------------------------------------------

class InvalidDuration(DeckError):
    code = "invalid_duration"


class InvalidAudience(DeckError):
    code = "invalid_audience"


class InvalidBounds(DeckError):
    code = "invalid_bounds"


class PositionOutOfRange(DeckError):
    code = "position_out_of_range"


class NotAPermutation(DeckError):
    code = "not_a_permutation"


class UnknownPresentation(DeckError):
    code = "unknown_presentation"


class UnknownSection(DeckError):
    code = "unknown_section"


class UnknownSlide(DeckError):
    code = "unknown_slide"


class UnknownElement(DeckError):
    code = "unknown_element"


class MalformedDocument(DeckError):
    code = "malformed_document"


class UnsupportedSchemaVersion(DeckError):
    code = "unsupported_schema_version"


# -- repository -------------------------------------------------------------

class StorageFailure(DeckError):
    code = "storage_failure"


class StoreLockedError(DeckError):
    code = "store_locked"


class UnknownEntry(DeckError):
    code = "unknown_entry"


class GranularityMismatch(DeckError):
    code = "granularity_mismatch"


class UnknownLineage(DeckError):
    code = "unknown_lineage"


class UnknownVersion(DeckError):
    code = "unknown_version"


class InvalidDecision(DeckError):
    code = "invalid_decision"


class NoLineage(DeckError):
    code = "no_lineage"


class EmptyQuery(DeckError):
    code = "empty_query"


class UnknownAsset(DeckError):
    code = "unknown_asset"


# -- jargon pipeline ----------------------------------------------------------

class ProviderError(DeckError):
    code = "provider_error"


class EmptySlide(DeckError):
    code = "empty_slide"


class DuplicateLexiconTerm(DeckError):
    code = "duplicate_lexicon_term"


# -- service ------------------------------------------------------------------

class ConfigError(DeckError):
    code = "config_error"


class RevisionConflict(DeckError):
    code = "revision_conflict"
