"""JSON documents for characters, shared by CLI output and the cache.

Every integer that can grow (dimension, multiplicities, orbit sizes) is a
decimal string.
"""

from __future__ import annotations

import json
from typing import Any

from .multiplicity import MultiplicityTable, character
from .weights import DominantWeight, orbit_size, sub_dominant_set


class DocumentError(ValueError):
    """A document is malformed or violates a table invariant."""


def _fmt(p) -> str:
    return ",".join(str(v) for v in p)


def table_to_document(table: MultiplicityTable) -> dict[str, Any]:
    lam = table.dominant
    rows = character(table.rank_n, lam, table)
    dim = sum(r.multiplicity * r.orbit_size for r in rows)
    return {
        "algebra": lam.algebra,
        "rank_n": table.rank_n,
        "dominant": {"partition": list(lam.partition), "dynkin": list(lam.dynkin)},
        "weight_m": lam.weight,
        "dimension": str(dim),
        "rows": [
            {
                "partition": list(r.partition),
                "multiplicity": str(r.multiplicity),
                "orbit_size": str(r.orbit_size),
            }
            for r in rows
        ],
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _decimal(value, what: str) -> int:
    if not isinstance(value, str) or not value.lstrip("-").isdigit():
        raise DocumentError(f"{what} must be a decimal string, got {value!r}")
    return int(value)


def document_to_table(doc: dict[str, Any], expect: DominantWeight | None = None) -> MultiplicityTable:
    """Rebuild and validate a table from a document.

    Checks the schema, that the rows are exactly Sub(M lambda_1) in order,
    that orbit sizes and dimension are consistent, and the table invariants.
    """
    try:
        n = doc["rank_n"]
        dom = doc["dominant"]
        lam = DominantWeight(n, tuple(dom["partition"]))
        if list(lam.partition) != dom["partition"] or list(lam.dynkin) != dom["dynkin"]:
            raise DocumentError("dominant weight is not canonical or its views disagree")
        if doc["algebra"] != lam.algebra or doc["weight_m"] != lam.weight:
            raise DocumentError("algebra label or weight does not match the dominant weight")
        if expect is not None and lam != expect:
            raise DocumentError(f"document is for {lam.partition}, expected {expect.partition}")
        expected_rows = [w.partition for w in sub_dominant_set(n, lam.weight)]
        rows = []
        dim = 0
        for entry, q in zip(doc["rows"], expected_rows, strict=True):
            if tuple(entry["partition"]) != q:
                raise DocumentError(f"row {entry['partition']} out of place, expected {list(q)}")
            mult = _decimal(entry["multiplicity"], "multiplicity")
            size = _decimal(entry["orbit_size"], "orbit_size")
            if size != orbit_size(q, n):
                raise DocumentError(f"wrong orbit size for {list(q)}")
            dim += mult * size
            rows.append((q, mult))
        if _decimal(doc["dimension"], "dimension") != dim:
            raise DocumentError("dimension does not match the rows")
        return MultiplicityTable(n, lam, tuple(rows))
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"invalid document: {exc}") from exc


def format_text(doc: dict[str, Any]) -> str:
    header = ("partition", "dynkin", "multiplicity", "orbit_size")
    body = []
    for r in doc["rows"]:
        p = r["partition"]
        dynkin = [p[i] - p[i + 1] for i in range(len(p) - 1)]
        body.append((f"({_fmt(p)})", _fmt(dynkin), r["multiplicity"], r["orbit_size"]))
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(4)]
    lines = [" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header, *body]]
    dom = doc["dominant"]
    lines.append(
        f"{doc['algebra']} highest weight ({_fmt(dom['partition'])}) "
        f"dynkin [{_fmt(dom['dynkin'])}] M={doc['weight_m']} dimension {doc['dimension']}"
    )
    return "\n".join(lines) + "\n"
