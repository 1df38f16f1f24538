"""Persistent JSON cache for weight systems and module skeletons."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

FORMAT_VERSION = "liefusion-cache/1"
ENV_VAR = "LIEFUSION_CACHE_DIR"


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "liefusion"


def resolve_cache_dir(flag: str | None = None) -> Path:
    """Flag first, then the environment variable, then the platform default."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else default_cache_dir()


class DiskCache:
    """One JSON file per entry, named by a hash of (kind, type, labels).

    Entries written under a different format version are ignored. Writes go
    to a temporary file in the same directory and are renamed into place, so
    concurrent readers never see a partial document.
    """

    def __init__(self, directory):
        self.directory = Path(directory)

    @staticmethod
    def key(kind: str, lie_type: str, labels) -> str:
        return json.dumps([kind, lie_type, [int(x) for x in labels]], separators=(",", ":"))

    def path(self, kind: str, lie_type: str, labels) -> Path:
        digest = hashlib.sha256(self.key(kind, lie_type, labels).encode()).hexdigest()
        return self.directory / f"{digest}.json"

    def get(self, kind: str, lie_type: str, labels):
        p = self.path(kind, lie_type, labels)
        try:
            with open(p, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, ValueError):
            return None
        if doc.get("version") != FORMAT_VERSION or doc.get("key") != self.key(kind, lie_type, labels):
            return None
        return doc.get("payload")

    def put(self, kind: str, lie_type: str, labels, payload) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        doc = {"version": FORMAT_VERSION, "key": self.key(kind, lie_type, labels), "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, separators=(",", ":"))
            os.replace(tmp, self.path(kind, lie_type, labels))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def install(store) -> None:
    """Route the weight and module memo layers through ``store`` (None disables)."""
    from . import repbuilder, weights

    weights.set_store(store)
    repbuilder.set_store(store)
