"""On-disk cache of prime snake characters.

One JSON file per ``(rank, snake)``, named by a SHA-256 of the canonical
snake form and the format version.  Each file also stores a digest of its
payload; anything that fails to parse, carries another version, names a
different snake or fails re-validation is discarded with a warning and
recomputed.  The cache only ever saves work: with it disabled every answer
is the same.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from filelock import FileLock, Timeout

from .lweight import Character
from .paths import PrimeSnake

log = logging.getLogger(__name__)

CACHE_VERSION = "snakelab-char-1"
ENV_VAR = "SNAKELAB_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "snakelab"


def canonical_form(snake: PrimeSnake) -> str:
    return f"{snake.n}|" + ";".join(f"{i}:{a}" for i, a in snake.factors)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def validate_snake_character(snake: PrimeSnake, ch: Character) -> bool:
    """Multiplicity one everywhere and ``ω`` the only dominant monomial."""
    if any(c != 1 for _, c in ch):
        return False
    return ch.dominant_monomials() == [snake.lweight()]


class CharacterCache:
    """Content-addressed store for snake characters.

    IO errors switch the cache off for the rest of the session rather than
    propagate; ``enabled`` reports the current state.
    """

    def __init__(self, root: str | os.PathLike | None = None, version: str = CACHE_VERSION):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.version = version
        self.enabled = True
        self.hits = self.misses = self.rejected = 0
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            log.warning("character cache disabled: %s", exc)
            self.enabled = False

    def key(self, snake: PrimeSnake) -> str:
        return _digest(f"{self.version}\n{canonical_form(snake)}")

    def path_for(self, snake: PrimeSnake) -> Path:
        k = self.key(snake)
        return self.root / k[:2] / f"{k}.json"

    def _lock(self, path: Path) -> FileLock:
        return FileLock(str(path) + ".lock", timeout=10)

    def get(self, snake: PrimeSnake) -> Character | None:
        if not self.enabled:
            return None
        path = self.path_for(snake)
        if not path.exists():
            self.misses += 1
            return None
        try:
            with self._lock(path):
                text = path.read_text()
        except (OSError, Timeout) as exc:
            log.warning("cache read failed for %s: %s", path.name, exc)
            self.misses += 1
            return None
        ch = self._decode(snake, text)
        if ch is None:
            self.rejected += 1
            log.warning("discarding corrupt cache entry %s", path.name)
            try:
                path.unlink()
            except OSError:
                pass
            return None
        self.hits += 1
        return ch

    def _decode(self, snake: PrimeSnake, text: str) -> Character | None:
        try:
            obj = json.loads(text)
            if obj.get("version") != self.version or obj.get("snake") != canonical_form(snake):
                return None
            body = json.dumps(obj["character"], sort_keys=True, separators=(",", ":"))
            if _digest(body) != obj.get("digest"):
                return None
            ch = Character.from_json(snake.n, obj["character"])
        except (ValueError, KeyError, TypeError):
            return None
        return ch if validate_snake_character(snake, ch) else None

    def put(self, snake: PrimeSnake, ch: Character) -> None:
        if not self.enabled:
            return
        path = self.path_for(snake)
        payload = ch.to_json()
        body = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        record = {
            "version": self.version,
            "snake": canonical_form(snake),
            "digest": _digest(body),
            "character": payload,
        }
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with self._lock(path):
                fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
                with os.fdopen(fd, "w") as fh:
                    json.dump(record, fh, sort_keys=True, separators=(",", ":"))
                os.replace(tmp, path)
        except (OSError, Timeout) as exc:
            log.warning("character cache disabled after write failure: %s", exc)
            self.enabled = False

    def clear(self) -> int:
        removed = 0
        for f in self.root.glob("*/*.json"):
            try:
                f.unlink()
                removed += 1
            except OSError:
                pass
        return removed
