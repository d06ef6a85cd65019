"""Report assembly and JSON / CSV / text encoding.

Reports are plain dicts. JSON output is key-sorted; anything that depends on
wall-clock time lives under the top-level ``timing`` key so it can be
dropped for byte-stable comparisons.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any

import numpy as np

from circhad.correlation import (
    DEFAULT_TOL,
    gram_orthogonality_oracle,
    is_circulant_hadamard,
    paf_spectrum,
    representer_spectrum,
    spectrum_modulus_check,
    wiener_khinchin_residual,
)
from circhad.known import KNOWN_MATRICES
from circhad.search.engine import SearchOutcome, verify_solutions
from circhad.sequences import SignRow, format_row
from circhad.theorem import identity_report, regularity_stats, remark2_residuals

ODD_ORDER_NOTE = "odd order: half-split identities are undefined and omitted"


def _spectrum_block(row: SignRow, tol: float) -> dict:
    n = len(row)
    return {
        "paf": list(paf_spectrum(row).values),
        "modulus_check": spectrum_modulus_check(row, tol),
        "tol": tol,
        "wk_residual_ok": wiener_khinchin_residual(row) <= DEFAULT_TOL * n,
    }


def row_report(row: SignRow, tol: float = DEFAULT_TOL) -> dict:
    """Everything known about one first row."""
    rep: dict[str, Any] = {
        "input": format_row(row),
        "order": len(row),
        "hadamard": is_circulant_hadamard(row),
        "gram_oracle": gram_orthogonality_oracle(row),
        "regularity": regularity_stats(row).to_dict(),
        "spectrum": _spectrum_block(row, tol),
    }
    if len(row) % 2 == 0:
        ids = identity_report(row).to_dict()
        ids["remark2_residuals"] = {str(j): r for j, r in remark2_residuals(row).items()}
        rep["identities"] = ids
    else:
        rep["notes"] = [ODD_ORDER_NOTE]
    return rep


def spectrum_report(row: SignRow, tol: float = DEFAULT_TOL) -> dict:
    spec = representer_spectrum(row)
    vals = np.asarray(spec.values)
    return {
        "input": format_row(row),
        "order": len(row),
        "hadamard": is_circulant_hadamard(row),
        "spectrum": {
            **_spectrum_block(row, tol),
            "real": [float(x) for x in vals.real],
            "imag": [float(x) for x in vals.imag],
            "power": [float(x) for x in spec.power()],
            "wk_residual": wiener_khinchin_residual(row),
        },
    }


def search_report(outcome: SearchOutcome, include_timing: bool = True) -> dict:
    block = outcome.to_dict()
    block["verified"] = verify_solutions(outcome)
    rep: dict[str, Any] = {
        "input": {"command": "search", "n": outcome.config.n},
        "order": outcome.config.n,
        "search": block,
    }
    if include_timing:
        rep["timing"] = {
            "elapsed_s": round(outcome.elapsed, 6),
            "worker_count": outcome.config.worker_count,
        }
    return rep


def known_report(tol: float = DEFAULT_TOL) -> dict:
    records = []
    for rec in KNOWN_MATRICES:
        r = row_report(rec.first_row, tol)
        r["name"] = rec.name
        records.append(r)
    ok = all(r["hadamard"] and r["gram_oracle"] and r["spectrum"]["modulus_check"] for r in records)
    return {"input": {"command": "known"}, "count": len(records), "all_verified": ok, "known": records}


# -- encoders --------------------------------------------------------------

def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def flatten(report: dict, prefix: str = "") -> list[tuple[str, Any]]:
    """Dotted-path leaves; lists and scalars are leaves."""
    out: list[tuple[str, Any]] = []
    for key in sorted(report):
        path = f"{prefix}{key}"
        val = report[key]
        if isinstance(val, dict) and val:
            out.extend(flatten(val, path + "."))
        else:
            out.append((path, val))
    return out


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for path, val in flatten(report):
        w.writerow([path, json.dumps(val, sort_keys=True, separators=(",", ":"))])
    return buf.getvalue()


def from_csv(text: str) -> dict:
    """Inverse of :func:`to_csv`."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["key", "value"]:
        raise ValueError("missing key,value header")
    out: dict[str, Any] = {}
    for path, raw in rows[1:]:
        node = out
        *parents, leaf = path.split(".")
        for p in parents:
            node = node.setdefault(p, {})
        node[leaf] = json.loads(raw)
    return out


def to_text(report: dict) -> str:
    lines = []
    for path, val in flatten(report):
        if isinstance(val, list) and val and isinstance(val[0], dict):
            for i, item in enumerate(val):
                lines.append(f"{path}[{i}]:")
                lines.extend("  " + ln for ln in to_text(item).splitlines())
            continue
        if not isinstance(val, str):
            val = json.dumps(val)
        lines.append(f"{path}: {val}")
    return "\n".join(lines) + "\n"


def encode(report: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")
