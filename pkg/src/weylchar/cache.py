"""On-disk cache of multiplicity tables, one JSON document per dominant weight.

Writes go to a temporary file in the same directory followed by an atomic
rename, so a reader never sees a partial document.  Anything that fails
validation on load is recomputed and overwritten.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .document import DocumentError, document_to_table, dumps, table_to_document
from .multiplicity import MultiplicityTable, solve_multiplicities
from .weights import DominantWeight

log = logging.getLogger(__name__)

ENV_VAR = "WEYLCHAR_CACHE_DIR"


def cache_filename(lam: DominantWeight) -> str:
    return f"{lam.algebra}__{'-'.join(str(v) for v in lam.partition)}.json"


def resolve_dir(flag: str | None) -> Path | None:
    value = flag or os.environ.get(ENV_VAR)
    return Path(value) if value else None


def store(directory: Path, table: MultiplicityTable) -> Path | None:
    """Write *table*; returns the path, or None (with a warning) if the
    directory is not writable."""
    target = directory / cache_filename(table.dominant)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(dumps(table_to_document(table)))
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        log.warning("cache directory %s is not writable (%s); continuing uncached", directory, exc)
        return None
    return target


def load(directory: Path, lam: DominantWeight) -> MultiplicityTable | None:
    """Load and validate a cached table; None if missing or invalid."""
    path = directory / cache_filename(lam)
    try:
        text = path.read_text()
    except FileNotFoundError:
        return None
    except OSError as exc:
        log.warning("cannot read cache file %s: %s", path, exc)
        return None
    try:
        return document_to_table(json.loads(text), expect=lam)
    except (json.JSONDecodeError, DocumentError) as exc:
        log.warning("discarding corrupted cache file %s: %s", path, exc)
        return None


def cached_multiplicities(directory: Path | None, lam: DominantWeight) -> MultiplicityTable:
    if directory is None:
        return solve_multiplicities(lam.rank_n, lam)
    table = load(directory, lam)
    if table is None:
        table = solve_multiplicities(lam.rank_n, lam)
        store(directory, table)
    return table
