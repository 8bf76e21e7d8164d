"""Command-line front end.

Exit codes: 0 a verdict (or other result) was printed, 2 bad input,
3 time or size cap hit, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classifier import ADVICE, Report, Statement, Verdict, classify
from .dimension import hilbert_dimension, maximal_independent_set
from .errors import (InvariantViolation, ParseError, PartruthError,
                     ResourceLimitExceeded, TrivialIdealError)
from .geomdsl import compile_script
from .groebner import groebner_basis
from .limits import resource_limits
from .polyring import MonomialOrder, Ring
from .zwsoracle import zws_test

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_INVARIANT = 0, 2, 3, 4
TIMEOUT_ENV = "PARTRUTH_TIMEOUT"

VERDICT_TEXT = {
    Verdict.GENERALLY_TRUE: "generally true",
    Verdict.GENERALLY_FALSE: "generally false",
    Verdict.TRUE_ON_PARTS_FALSE_ON_PARTS: "true on parts, false on parts",
    Verdict.CONTRADICTORY_HYPOTHESES: "contradictory hypotheses",
    Verdict.NOT_INDEPENDENT: "not independent",
    Verdict.DIMENSION_MISMATCH: "dimension mismatch",
}

_MAIN_VERDICTS = (Verdict.GENERALLY_TRUE, Verdict.GENERALLY_FALSE,
                  Verdict.TRUE_ON_PARTS_FALSE_ON_PARTS)


# ---------------------------------------------------------------------------
# statement files
# ---------------------------------------------------------------------------

def _string_list(data, key, required=True):
    if key not in data:
        if required:
            raise ParseError(f"statement is missing {key!r}")
        return None
    value = data[key]
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{key!r} must be a list of strings")
    return value


def statement_from_json(data) -> Statement:
    """Build a Statement from the decoded statement-file object."""
    if not isinstance(data, dict):
        raise ParseError("statement file must hold a JSON object")
    unknown = set(data) - {"ring", "hypotheses", "thesis", "independent", "provenance"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    names = _string_list(data, "ring")
    hyps = _string_list(data, "hypotheses")
    if not isinstance(data.get("thesis"), str):
        raise ParseError("'thesis' must be a polynomial string")
    independent = _string_list(data, "independent", required=False)
    try:
        ring = Ring(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    provenance = None
    if "provenance" in data:
        block = data["provenance"]
        if not isinstance(block, dict):
            raise ParseError("'provenance' must be an object")
        provenance = {}
        for var, entry in block.items():
            if var not in ring:
                raise ParseError(f"provenance names unknown variable {var!r}")
            try:
                provenance[var] = (str(entry["point"]), str(entry["coordinate"]),
                                   bool(entry["free"]))
            except (TypeError, KeyError):
                raise ParseError(f"bad provenance entry for {var!r}") from None
    try:
        return Statement.parse(ring, hyps, data["thesis"], independent, provenance)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_statement(path: Path, kind: str | None = None) -> Statement:
    kind = kind or ("json" if path.suffix == ".json" else "dsl")
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if kind == "dsl":
        return compile_script(text).statement
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos, line=exc.lineno) from None
    return statement_from_json(data)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def report_to_dict(r: Report, oracle: bool | None = None) -> dict:
    d = {
        "verdict": r.verdict.value,
        "dimension": r.dimension,
        "independent_set": list(r.independent_set_used),
        "degeneracy_conditions": [str(g) for g in r.degeneracy_conditions],
    }
    if oracle is not None:
        d["oracle"] = {"zws": oracle,
                       "agreement": oracle == (r.verdict is Verdict.TRUE_ON_PARTS_FALSE_ON_PARTS)}
    d["timings_ms"] = {k: round(v * 1000, 3) for k, v in r.timings.items()}
    return d


def render_json(d: dict) -> str:
    return json.dumps(d, indent=2, ensure_ascii=False) + "\n"


def render_text(d: dict) -> str:
    verdict = Verdict(d["verdict"])
    Y = ", ".join(d["independent_set"])
    lines = [
        f"verdict: {VERDICT_TEXT[verdict]}",
        f"  {ADVICE[verdict]}",
        f"dimension: {d['dimension']}",
        f"independent variables: {{{Y}}}",
    ]
    if d["degeneracy_conditions"]:
        lines.append("degeneracy conditions:")
        lines += [f"  {g}" for g in d["degeneracy_conditions"]]
    if "oracle" in d:
        o = d["oracle"]
        lines.append(f"zero-divisor test: {'true' if o['zws'] else 'false'}"
                     f" ({'agrees' if o['agreement'] else 'DISAGREES'})")
    total = sum(d["timings_ms"].values())
    lines.append(f"time: {total:.1f} ms")
    return "\n".join(lines) + "\n"


def render_report(r: Report, fmt: str = "text", oracle: bool | None = None) -> str:
    d = report_to_dict(r, oracle)
    return render_json(d) if fmt == "json" else render_text(d)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _prove(args, statement: Statement) -> str:
    report = classify(statement)
    oracle = None
    if args.oracle and report.verdict in _MAIN_VERDICTS:
        oracle = zws_test(statement.ideal, statement.thesis, report.independent_set_used)
        if oracle != (report.verdict is Verdict.TRUE_ON_PARTS_FALSE_ON_PARTS):
            raise InvariantViolation(
                f"zero-divisor test says {oracle} but the verdict is {report.verdict.value}")
    for g in report.degeneracy_conditions:
        if not g.support() <= set(report.independent_set_used):
            raise InvariantViolation(f"condition {g} involves dependent variables")
    return render_report(report, args.format, oracle)


def _compile(args, path: Path) -> str:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return render_json(compile_script(text).to_json())


def _order(name: str) -> MonomialOrder:
    return MonomialOrder.lex() if name == "lex" else MonomialOrder.grevlex()


def _gb(args, statement: Statement) -> str:
    gb = groebner_basis(statement.ideal, _order(args.order))
    polys = [str(g) for g in gb.elements]
    if args.format == "json":
        return render_json({"order": args.order, "basis": polys})
    return "\n".join(polys or ["0"]) + "\n"


def _dim(args, statement: Statement) -> str:
    try:
        d = hilbert_dimension(statement.ideal).dimension
        Y = list(maximal_independent_set(statement.ideal))
    except TrivialIdealError:
        d, Y = -1, []
    if args.format == "json":
        return render_json({"dimension": d, "independent_set": Y})
    return f"dimension: {d}\nmaximal independent set: {{{', '.join(Y)}}}\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partruth",
        description="Classify polynomial geometry statements by elimination.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, statement=True):
        p.add_argument("path", nargs="?", help="input file")
        p.add_argument("--input", dest="input_path", help="input file (alternative to PATH)")
        if statement:
            p.add_argument("--kind", choices=("json", "dsl"),
                           help="input kind (default: from the file extension)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timeout", type=float, default=None,
                       help=f"seconds before giving up (default: ${TIMEOUT_ENV} or none)")

    p = sub.add_parser("prove", help="classify a statement")
    common(p)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the zero-divisor test")
    p = sub.add_parser("compile", help="compile a construction script to statement JSON")
    common(p, statement=False)
    p = sub.add_parser("gb", help="print the reduced Groebner basis of the hypotheses")
    common(p)
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p = sub.add_parser("dim", help="print the dimension and a maximal independent set")
    common(p)
    return parser


def _timeout(args) -> float | None:
    value = args.timeout
    if value is None and os.environ.get(TIMEOUT_ENV):
        try:
            value = float(os.environ[TIMEOUT_ENV])
        except ValueError:
            raise ParseError(f"${TIMEOUT_ENV} is not a number") from None
    if value is not None and not value > 0:
        raise ParseError("timeout must be positive")
    return value


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT

    try:
        if args.path and args.input_path:
            raise ParseError("give the input either as PATH or with --input, not both")
        raw = args.path or args.input_path
        if not raw:
            raise ParseError("no input file given")
        path = Path(raw)
        timeout = _timeout(args)
        with resource_limits(max_seconds=timeout):
            if args.command == "compile":
                out = _compile(args, path)
            else:
                statement = load_statement(path, args.kind)
                out = {"prove": _prove, "gb": _gb, "dim": _dim}[args.command](args, statement)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        where = f" during {exc.step}" if exc.step else ""
        print(f"error: resource limit exceeded{where}: {exc}", file=stderr)
        return EXIT_LIMIT
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INVARIANT
    except PartruthError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
