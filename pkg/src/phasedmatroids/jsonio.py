"""JSON serialization for phases, matrices, phirotopes and results.

Angles travel as multiples of pi (``angle_over_pi``) so that the common
textbook values (1/2, 7/4, 5/6, ...) stay exact in fixtures.  The zero phase
and zero matrix entries serialize as ``null``.
"""

from __future__ import annotations

import json
import math
from typing import Any, Optional

import numpy as np

from .canonical import CanonicalizationResult, SpanningForest
from .errors import PhasedMatroidError
from .matrices import ComplexMatrix
from .phases import Phase, Tolerance
from .phirotopes import Phirotope, Rephasing
from .realization import (
    NotRealizable,
    Realizable,
    RealizabilityVerdict,
    Unsupported,
    Witness,
)


class FormatError(PhasedMatroidError, ValueError):
    """Input JSON does not match the declared schema."""


def phase_to_json(p: Phase) -> Optional[dict]:
    if p.is_zero:
        return None
    return {"angle_over_pi": p.angle_over_pi}


def phase_from_json(obj: Any) -> Phase:
    if obj is None:
        return Phase(None)
    if not isinstance(obj, dict) or set(obj) != {"angle_over_pi"}:
        raise FormatError(f"expected null or {{'angle_over_pi': x}}, got {obj!r}")
    x = obj["angle_over_pi"]
    if not isinstance(x, (int, float)) or isinstance(x, bool):
        raise FormatError(f"angle_over_pi must be a number, got {x!r}")
    return Phase.from_angle_over_pi(float(x))


def matrix_to_json(m: ComplexMatrix) -> dict:
    entries = []
    for i in range(1, m.rows + 1):
        row = []
        for j in range(1, m.cols + 1):
            norm = m.entry_norm(i, j)
            if norm == 0.0:
                row.append(None)
            else:
                row.append({"norm": norm,
                            "angle_over_pi": m.entry_phase(i, j).angle_over_pi})
        entries.append(row)
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(obj: Any) -> ComplexMatrix:
    if not isinstance(obj, dict):
        raise FormatError("matrix must be a JSON object")
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"matrix is missing field {exc}") from exc
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1):
        raise FormatError("matrix rows/cols must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise FormatError(f"expected {rows} entry rows")
    norms = np.zeros((rows, cols))
    angles = np.zeros((rows, cols))
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"entry row {i + 1} must have {cols} entries")
        for j, e in enumerate(row):
            if e is None:
                continue
            if not isinstance(e, dict) or set(e) != {"norm", "angle_over_pi"}:
                raise FormatError(f"bad entry at ({i + 1}, {j + 1}): {e!r}")
            norm = float(e["norm"])
            if norm < 0.0:
                raise FormatError(f"negative norm at ({i + 1}, {j + 1})")
            norms[i, j] = norm
            angles[i, j] = float(e["angle_over_pi"]) * math.pi
    return ComplexMatrix(norms, angles)


def phirotope_to_json(phi: Phirotope) -> dict:
    return {
        "n": phi.n,
        "r": phi.r,
        "values": [{"basis": list(b), "phase": phase_to_json(phi.values[b])}
                   for b in phi.sorted_bases()],
    }


def phirotope_from_json(obj: Any, tolerance: Tolerance,
                        validate: bool = True) -> Phirotope:
    if not isinstance(obj, dict):
        raise FormatError("phirotope must be a JSON object")
    try:
        n, r, items = obj["n"], obj["r"], obj["values"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"phirotope is missing field {exc}") from exc
    if not (isinstance(n, int) and isinstance(r, int) and 1 <= r <= n):
        raise FormatError("need integers 1 <= r <= n")
    if not isinstance(items, list):
        raise FormatError("values must be a list")
    values = {}
    for item in items:
        if not isinstance(item, dict) or set(item) != {"basis", "phase"}:
            raise FormatError(f"bad value record: {item!r}")
        basis = item["basis"]
        if (not isinstance(basis, list) or len(basis) != r
                or any(not isinstance(k, int) for k in basis)
                or sorted(basis) != basis or len(set(basis)) != r
                or basis[0] < 1 or basis[-1] > n):
            raise FormatError(f"bad basis {basis!r}: need a sorted {r}-subset of [1, {n}]")
        key = tuple(basis)
        if key in values:
            raise FormatError(f"basis {basis} appears twice")
        values[key] = phase_from_json(item["phase"])
    if len(values) != math.comb(n, r):
        raise FormatError(
            f"expected {math.comb(n, r)} values, got {len(values)}: "
            "every sorted r-subset must appear exactly once")
    try:
        return Phirotope(n, r, values, tolerance, validate=validate)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def forest_to_json(forest: SpanningForest) -> list:
    return [list(e) for e in forest.edges]


def forest_from_json(obj: Any) -> tuple:
    if not isinstance(obj, list):
        raise FormatError("forest must be a list of [i, j] pairs")
    edges = []
    for e in obj:
        if (not isinstance(e, list) or len(e) != 2
                or any(not isinstance(k, int) for k in e)):
            raise FormatError(f"bad forest edge {e!r}")
        edges.append((e[0], e[1]))
    return tuple(edges)


def rephasing_to_json(rho: Rephasing) -> list:
    return [phase_to_json(p) for p in rho.rho]


def canonicalization_to_json(result: CanonicalizationResult) -> dict:
    return {
        "rho": rephasing_to_json(result.rho),
        "global_phase": phase_to_json(result.global_phase),
        "canonical": phirotope_to_json(result.canonical),
    }


def witness_to_json(w: Witness) -> dict:
    return {
        "basis": list(w.basis),
        "expected": phase_to_json(w.expected),
        "computed": phase_to_json(w.computed),
    }


def verdict_to_json(v: RealizabilityVerdict) -> dict:
    if isinstance(v, Realizable):
        return {
            "verdict": "Realizable",
            "matrix": matrix_to_json(v.matrix),
            "rho": rephasing_to_json(v.rho),
            "global_phase": phase_to_json(v.global_phase),
        }
    if isinstance(v, NotRealizable):
        out = {"verdict": "NotRealizable"}
        if v.witness is not None:
            out["witness"] = witness_to_json(v.witness)
        if v.infeasible_equation is not None:
            out["infeasible_equation"] = v.infeasible_equation
        if v.matrix is not None:
            out["matrix"] = matrix_to_json(v.matrix)
        return out
    if isinstance(v, Unsupported):
        out = {"verdict": "Unsupported", "reason": v.reason}
        if v.detail is not None:
            out["detail"] = v.detail
        return out
    raise TypeError(f"not a verdict: {v!r}")


def dumps(obj: Any, pretty: bool = False) -> str:
    """Deterministic JSON text: sorted keys, fixed separators."""
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
