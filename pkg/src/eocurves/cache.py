"""Persistent JSON caches for the two memoized counting tables.

Keys flatten to "g,n,mu1,...,mun"; values are decimal integer strings
for the graph counts and "p/q" strings for the Hurwitz numbers.  Corrupt
entries are rejected with a warning and recomputed rather than trusted.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

from . import catalan as cat
from . import hurwitz as hur
from .errors import CorruptCache
from .rationals import parse_q, qstr


def cache_dir(default: str | None = None) -> Path:
    env = os.environ.get("EO_CACHE_DIR")
    if env:
        return Path(env)
    return Path(default) if default else Path(".eo-cache")


def _flatten(g: int, mu: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in (g, len(mu), *mu))


def _unflatten(key: str) -> tuple[int, tuple[int, ...]]:
    parts = [int(v) for v in key.split(",")]
    g, n, mu = parts[0], parts[1], tuple(parts[2:])
    if len(mu) != n or g < 0:
        raise CorruptCache(f"malformed key {key!r}")
    return g, mu


def export_caches(path: Path) -> dict:
    payload = {
        "catalan": {_flatten(g, mu): str(v)
                    for (g, mu), v in sorted(cat._count_memo.items())},
        "hurwitz": {_flatten(g, mu): qstr(v)
                    for (g, mu), v in sorted(hur._h_memo.items())},
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1, sort_keys=True))
    return {"catalan": len(payload["catalan"]), "hurwitz": len(payload["hurwitz"])}


def import_caches(path: Path, warn=lambda msg: print(msg, file=sys.stderr)) -> dict:
    """Load cached values, validating every entry; corrupt ones are skipped."""
    if not path.exists():
        return {"catalan": 0, "hurwitz": 0, "rejected": 0}
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        warn(f"cache: unreadable file {path}: {exc}")
        return {"catalan": 0, "hurwitz": 0, "rejected": 1}
    rejected = 0
    loaded_c = 0
    for key, value in payload.get("catalan", {}).items():
        try:
            g, mu = _unflatten(key)
            v = parse_q(str(value))
            if v.denominator != 1 or v < 0:
                raise CorruptCache(f"count {key} = {value} is not a whole number")
            cat._count_memo[(g, mu)] = int(v)
            loaded_c += 1
        except (CorruptCache, ValueError) as exc:
            warn(f"cache: rejecting {key!r}: {exc}")
            rejected += 1
    loaded_h = 0
    for key, value in payload.get("hurwitz", {}).items():
        try:
            g, mu = _unflatten(key)
            v = parse_q(str(value))
            if v < 0:
                raise CorruptCache(f"count {key} = {value} is negative")
            hur._h_memo[(g, mu)] = v
            loaded_h += 1
        except (CorruptCache, ValueError) as exc:
            warn(f"cache: rejecting {key!r}: {exc}")
            rejected += 1
    return {"catalan": loaded_c, "hurwitz": loaded_h, "rejected": rejected}
