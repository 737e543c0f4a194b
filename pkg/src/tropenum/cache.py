"""One JSON file per count request, checked by content hash on read."""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj) -> str:
    return hashlib.sha256(canonical(obj).encode()).hexdigest()


def default_dir() -> Path:
    env = os.environ.get("TROPICAL_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "tropenum"


class ReportCache:
    def __init__(self, directory: str | Path | None = None):
        self.dir = Path(directory) if directory is not None else default_dir()

    def key(self, request: dict) -> str:
        return digest({"request": request, "version": __version__})

    def path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def load(self, request: dict) -> dict | None:
        """The cached report, or None when missing or corrupted."""
        p = self.path(self.key(request))
        try:
            entry = json.loads(p.read_text())
            report = entry["report"]
            if entry.get("sha256") != digest(report) or entry.get("request") != request:
                raise ValueError("hash mismatch")
        except FileNotFoundError:
            return None
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("discarding corrupted cache entry %s (%s)", p, exc)
            return None
        return report

    def store(self, request: dict, report: dict) -> Path:
        self.dir.mkdir(parents=True, exist_ok=True)
        p = self.path(self.key(request))
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps({"request": request, "report": report, "sha256": digest(report)}, indent=1))
        tmp.replace(p)
        return p
