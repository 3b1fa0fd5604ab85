"""Batch command-line front end.

Reads phirotopes and matrices from JSON, runs the library operations and
emits deterministic JSON reports.  Exit codes: 0 success / Realizable /
valid; 1 NotRealizable / violations found; 2 malformed input; 3 unsupported
input (essentially oriented, non-uniform, disconnected).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib import metadata

from . import jsonio
from .canonical import (
    associated_bipartite_graph,
    canonical_spanning_forest,
    canonicalize,
    is_essentially_oriented,
)
from .errors import (
    DisconnectedGraphError,
    FirstSubsetNotBasisError,
    InvalidPhirotopeError,
    NotAMatroidError,
    PhasedMatroidError,
    RankDeficientError,
)
from .phases import Tolerance
from .phirotopes import from_matrix, underlying_matroid
from .realization import NOT_A_PHIROTOPE, NotRealizable, Unsupported, decide_realizability, verify

try:
    VERSION = metadata.version("phased-matroids")
except metadata.PackageNotFoundError:  # running from a source tree
    VERSION = "0.1.0"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_MALFORMED = 2
EXIT_UNSUPPORTED = 3


def _provenance(raw: bytes, tol: Tolerance) -> dict:
    return {
        "input_sha256": hashlib.sha256(raw).hexdigest(),
        "tolerance": tol.eps,
        "version": VERSION,
    }


def _violations_json(violations) -> list:
    return [{"X": list(x), "Y": list(y)} for x, y in violations]


def _cmd_validate(doc, tol):
    phi = jsonio.phirotope_from_json(doc, tol, validate=False)
    violations = phi.check_gp()
    report = {"valid": not violations, "violations": _violations_json(violations)}
    return report, EXIT_OK if not violations else EXIT_NEGATIVE


def _cmd_from_matrix(doc, tol):
    m = jsonio.matrix_from_json(doc)
    phi = from_matrix(m, tol)
    return {"phirotope": jsonio.phirotope_to_json(phi)}, EXIT_OK


def _cmd_canonicalize(doc, tol):
    phi = jsonio.phirotope_from_json(doc, tol)
    result = canonicalize(phi)
    return jsonio.canonicalization_to_json(result), EXIT_OK


def _cmd_orient_check(doc, tol):
    phi = jsonio.phirotope_from_json(doc, tol)
    return {"essentially_oriented": is_essentially_oriented(phi, tol)}, EXIT_OK


def _cmd_realize(doc, tol):
    phi = jsonio.phirotope_from_json(doc, tol, validate=False)
    verdict = decide_realizability(phi)
    report = jsonio.verdict_to_json(verdict)
    if isinstance(verdict, NotRealizable):
        return report, EXIT_NEGATIVE
    if isinstance(verdict, Unsupported):
        # an invalid phirotope counts as "violations found", not "unsupported"
        code = EXIT_NEGATIVE if verdict.reason == NOT_A_PHIROTOPE else EXIT_UNSUPPORTED
        return report, code
    return report, EXIT_OK


def _cmd_verify(doc, tol):
    if not isinstance(doc, dict) or "phirotope" not in doc or "matrix" not in doc:
        raise jsonio.FormatError('verify expects {"phirotope": ..., "matrix": ...}')
    phi = jsonio.phirotope_from_json(doc["phirotope"], tol, validate=False)
    m = jsonio.matrix_from_json(doc["matrix"])
    witness = verify(phi, m)
    if witness is None:
        return {"realizes": True}, EXIT_OK
    return {"realizes": False, "witness": jsonio.witness_to_json(witness)}, EXIT_NEGATIVE


def _cmd_tree(doc, tol):
    phi = jsonio.phirotope_from_json(doc, tol)
    graph = associated_bipartite_graph(underlying_matroid(phi))
    forest = canonical_spanning_forest(graph)
    return {"forest": jsonio.forest_to_json(forest),
            "components": forest.component_count}, EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "from-matrix": _cmd_from_matrix,
    "canonicalize": _cmd_canonicalize,
    "orient-check": _cmd_orient_check,
    "realize": _cmd_realize,
    "verify": _cmd_verify,
    "tree": _cmd_tree,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasedmatroids",
        description="Phased-matroid validation, canonicalization and realizability.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", required=True, help="input JSON file")
    parser.add_argument("--output", default=None, help="output file (default: stdout)")
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="angular tolerance in radians (default 1e-9)")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads; output is identical for any value")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout

    def emit(report):
        text = jsonio.dumps(report, pretty=args.pretty)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            out.write(text)

    try:
        tol = Tolerance(args.tol)
    except ValueError as exc:
        emit({"error": str(exc)})
        return EXIT_MALFORMED
    try:
        with open(args.input, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        emit({"error": str(exc)})
        return EXIT_MALFORMED
    try:
        doc = json.loads(raw)
    except ValueError as exc:
        emit({"error": f"invalid JSON: {exc}"})
        return EXIT_MALFORMED

    try:
        report, code = COMMANDS[args.command](doc, tol)
    except jsonio.FormatError as exc:
        emit({"error": str(exc)})
        return EXIT_MALFORMED
    except InvalidPhirotopeError as exc:
        emit({"error": str(exc), "violations": _violations_json(exc.violations)})
        return EXIT_NEGATIVE
    except (DisconnectedGraphError, FirstSubsetNotBasisError, NotAMatroidError) as exc:
        emit({"error": str(exc)})
        return EXIT_UNSUPPORTED
    except (RankDeficientError, PhasedMatroidError) as exc:
        emit({"error": str(exc)})
        return EXIT_MALFORMED

    report = {"command": args.command, "provenance": _provenance(raw, tol),
              "result": report}
    emit(report)
    return code


def main():  # console-script entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
