"""Content-addressed binary asset storage.

Assets (image bytes and similar) are stored under the SHA-256 hex digest of
their content, so identical uploads share one file and references never go
stale when a deck is copied.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .errors import StorageFailure, UnknownAsset


class AssetStore:
    """Write-once blob store keyed by SHA-256 content hash."""

    def __init__(self, root: str | Path | None = None):
        self._root = Path(root) if root is not None else None
        self._blobs: dict[str, bytes] = {}
        if self._root is not None:
            try:
                self._root.mkdir(parents=True, exist_ok=True)
            except OSError as exc:
                raise StorageFailure(f"cannot create asset directory {self._root}: {exc}") from exc

    def put(self, data: bytes) -> str:
        digest = hashlib.sha256(data).hexdigest()
        if self._root is None:
            self._blobs.setdefault(digest, bytes(data))
            return digest
        path = self._root / digest
        if not path.exists():
            tmp = path.with_name(digest + ".tmp")
            try:
                tmp.write_bytes(data)
                tmp.replace(path)
            except OSError as exc:
                raise StorageFailure(f"cannot store asset {digest}: {exc}") from exc
        return digest

    def exists(self, digest: str) -> bool:
        if self._root is None:
            return digest in self._blobs
        return (self._root / digest).is_file()

    def get(self, digest: str) -> bytes:
        if self._root is None:
            try:
                return self._blobs[digest]
            except KeyError:
                raise UnknownAsset(f"no asset {digest}") from None
        path = self._root / digest
        if not path.is_file():
            raise UnknownAsset(f"no asset {digest}")
        try:
            return path.read_bytes()
        except OSError as exc:
            raise StorageFailure(f"cannot read asset {digest}: {exc}") from exc
