"""Command-line front end: space files in, reports and verdicts out.

Space files are JSON with a name, the maximal simplices, and optional
closed boundary regions.  When only one region is given the other
defaults to the closure of its complement in the boundary; when neither
is given the positive region is empty and the whole boundary is
negative, which is the convention for a plain complex.

Exit codes: 0 success, 1 failed --assert-symmetric, 2 input or
validation error, 3 identity-suite mismatch in ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .complexes import SimplicialComplex, betti, boundary_subcomplex, build_complex
from .errors import InputError, PseudomanifoldError
from .exactness import lefschetz_duality_check, les_exactness_check, mayer_vietoris_check
from .morse import build_matching, morse_betti
from .spaces import BoundarySplit, builtin_example, truncated_double
from .symmetry import ActionReport, SymmetryVerdict, analyze_action

EXIT_OK = 0
EXIT_ASSERT_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_SUITE_FAILED = 3


@dataclass(frozen=True)
class SpaceFile:
    """Parsed space file: a named complex with optional boundary regions."""

    name: str
    maximal_simplices: Tuple[Tuple[int, ...], ...]
    positive_region: Optional[Tuple[Tuple[int, ...], ...]]
    negative_region: Optional[Tuple[Tuple[int, ...], ...]]

    def complex(self) -> SimplicialComplex:
        return build_complex(self.maximal_simplices)

    def split(self) -> BoundarySplit:
        domain = self.complex()
        boundary = boundary_subcomplex(domain)
        positive = _region_complex(self.positive_region)
        negative = _region_complex(self.negative_region)
        if positive is None and negative is None:
            positive = SimplicialComplex.empty()
            negative = boundary
        elif negative is None:
            negative = _complement_closure(boundary, positive)
        elif positive is None:
            positive = _complement_closure(boundary, negative)
        return BoundarySplit(domain, positive, negative)


def _region_complex(region) -> Optional[SimplicialComplex]:
    if region is None:
        return None
    return build_complex(region) if region else SimplicialComplex.empty()


def _complement_closure(boundary: SimplicialComplex, region: SimplicialComplex) -> SimplicialComplex:
    rest = [s for s in boundary.faces if s not in region.faces]
    return SimplicialComplex.from_maximal(rest) if rest else SimplicialComplex.empty()


def _simplex_list(raw, label: str) -> Tuple[Tuple[int, ...], ...]:
    def is_vertex(v) -> bool:
        return isinstance(v, int) and not isinstance(v, bool)

    if not isinstance(raw, list) or not all(
        isinstance(s, list) and s and all(is_vertex(v) for v in s) for s in raw
    ):
        raise InputError("%s must be a list of nonempty integer lists" % label)
    return tuple(tuple(s) for s in raw)


def parse_space_file(data: Union[bytes, str]) -> SpaceFile:
    """Decode and structurally validate a space file.

    The boundary-split invariants are verified here as well, so a
    returned SpaceFile always yields a usable split.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError("space file is not UTF-8: %s" % exc) from exc
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON at byte offset %d: %s" % (exc.pos, exc.msg)) from exc
    if not isinstance(raw, dict):
        raise InputError("space file must be a JSON object")
    unknown = set(raw) - {"name", "maximal_simplices", "positive_region", "negative_region"}
    if unknown:
        raise InputError("unknown space-file fields: %s" % ", ".join(sorted(unknown)))
    if not isinstance(raw.get("name"), str):
        raise InputError("space file needs a string 'name'")
    if "maximal_simplices" not in raw:
        raise InputError("space file needs 'maximal_simplices'")
    out = SpaceFile(
        name=raw["name"],
        maximal_simplices=_simplex_list(raw["maximal_simplices"], "maximal_simplices"),
        positive_region=(
            _simplex_list(raw["positive_region"], "positive_region")
            if "positive_region" in raw
            else None
        ),
        negative_region=(
            _simplex_list(raw["negative_region"], "negative_region")
            if "negative_region" in raw
            else None
        ),
    )
    out.split()  # surfaces region/boundary violations now
    return out


def space_file_dict(name: str, obj: Union[SimplicialComplex, BoundarySplit]) -> Dict:
    """Serializable space-file payload with deterministic ordering."""
    if isinstance(obj, BoundarySplit):
        return {
            "name": name,
            "maximal_simplices": [list(s) for s in sorted(obj.domain.maximal_simplices())],
            "positive_region": [list(s) for s in sorted(obj.positive.maximal_simplices())],
            "negative_region": [list(s) for s in sorted(obj.negative.maximal_simplices())],
        }
    return {
        "name": name,
        "maximal_simplices": [list(s) for s in sorted(obj.maximal_simplices())],
    }


_INT_LIST = re.compile(r"\[\s*((?:-?\d+,\s*)*-?\d+)\s*\]")


def _dump(payload: Dict) -> str:
    """Indented JSON with innermost integer lists collapsed to one line."""
    text = json.dumps(payload, indent=2, sort_keys=True)
    text = _INT_LIST.sub(lambda m: "[" + re.sub(r",\s*", ", ", m.group(1)) + "]", text)
    return text + "\n"


def load_space(locator: str) -> Tuple[str, BoundarySplit]:
    """Resolve a catalog name or a space-file path to a named split."""
    if os.path.exists(locator):
        with open(locator, "rb") as handle:
            space = parse_space_file(handle.read())
        return space.name, space.split()
    if os.sep in locator or locator.endswith(".json"):
        raise InputError("no such file: %s" % locator)
    obj = builtin_example(locator)
    if isinstance(obj, BoundarySplit):
        return locator, obj
    return locator, BoundarySplit(obj, SimplicialComplex.empty(), boundary_subcomplex(obj))


# -- report formatting -------------------------------------------------------


def _table_json(table) -> List[List[int]]:
    dims = table.as_dict()
    if not dims:
        return []
    lo, hi = min(dims), max(dims)
    return [[k, dims.get(k, 0)] for k in range(lo, hi + 1)]


def _verdict_json(verdict: SymmetryVerdict) -> Dict:
    out: Dict = {"symmetric": verdict.symmetric, "shifts": list(verdict.shifts)}
    if verdict.witness is not None:
        w = verdict.witness
        out["witness"] = {
            "shift": w.shift,
            "degree": w.degree,
            "dim_at_degree": w.dim_at_degree,
            "dim_at_mirror": w.dim_at_mirror,
        }
    return out


def report_json(report: ActionReport) -> Dict:
    out = {
        "name": report.name,
        "betti_positive": _table_json(report.positive_table),
        "betti_negative": _table_json(report.negative_table),
        "verdict_positive": _verdict_json(report.positive_verdict),
        "verdict_negative": _verdict_json(report.negative_verdict),
        "duality": report.duality_status,
        "factor2": "pass" if report.factor2_passed else "fail",
    }
    if report.rolled is not None:
        table, verdict = report.rolled.positive
        out["rolled"] = {
            "modulus": report.rolled.modulus,
            "entries": list(table.entries),
            "verdict": _verdict_json(verdict),
        }
    return out


def _format_table(table) -> str:
    cells = _table_json(table)
    if not cells:
        return "0"
    return "  ".join("%d:%d" % (k, d) for k, d in cells)


def _format_verdict(verdict: SymmetryVerdict) -> str:
    if verdict.symmetric:
        return "symmetric (shift %s)" % ", ".join(str(m) for m in verdict.shifts)
    w = verdict.witness
    return "asymmetric (shift %d fails at degree %d: %d vs %d)" % (
        w.shift,
        w.degree,
        w.dim_at_degree,
        w.dim_at_mirror,
    )


def report_text(report: ActionReport) -> str:
    lines = [
        "space: %s" % report.name,
        "betti (domain, positive): %s" % _format_table(report.positive_table),
        "betti (domain, negative): %s" % _format_table(report.negative_table),
        "verdict positive: %s" % _format_verdict(report.positive_verdict),
        "verdict negative: %s" % _format_verdict(report.negative_verdict),
        "duality: %s" % report.duality_status,
        "factor2: %s" % ("pass" if report.factor2_passed else "fail"),
    ]
    if report.rolled is not None:
        table, verdict = report.rolled.positive
        lines.append(
            "rolled mod %d: (%s) %s"
            % (report.rolled.modulus, ", ".join(str(e) for e in table.entries), _format_verdict(verdict))
        )
    return "\n".join(lines) + "\n"


# -- identity suites ---------------------------------------------------------


def run_identity_suites(split: BoundarySplit) -> Dict[str, str]:
    """The five checks behind ``verify``; values are pass/fail/skipped."""
    results: Dict[str, str] = {}
    try:
        results["duality"] = "pass" if lefschetz_duality_check(split).passed else "fail"
    except PseudomanifoldError:
        results["duality"] = "skipped"

    double = truncated_double(split)
    pairs = [split.positive_pair(), split.negative_pair(), double.exit_pair()]

    results["les"] = "pass" if all(les_exactness_check(p).passed for p in pairs) else "fail"

    mv = mayer_vietoris_check(double.total, double.copy_a, double.copy_b, double.exit_a, double.exit_b)
    results["mayer_vietoris"] = "pass" if mv.passed else "fail"

    doubled = betti(split.positive_pair()).scaled(2)
    results["factor2"] = "pass" if betti(double.exit_pair()).same_dims(doubled) else "fail"

    results["morse"] = (
        "pass" if all(morse_betti(build_matching(p)).same_dims(betti(p)) for p in pairs) else "fail"
    )
    return results


# -- subcommands -------------------------------------------------------------


def cmd_analyze(args) -> int:
    name, split = load_space(args.space)
    report = analyze_action(split, min_chern=args.mod, name=name)
    if args.json:
        sys.stdout.write(_dump(report_json(report)))
    else:
        sys.stdout.write(report_text(report))
    if args.assert_symmetric and not report.positive_verdict.symmetric:
        return EXIT_ASSERT_FAILED
    return EXIT_OK


def cmd_example(args) -> int:
    obj = builtin_example(args.name)
    payload = space_file_dict(args.name, obj)
    text = _dump(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    name, split = load_space(args.space)
    results = run_identity_suites(split)
    passed = all(v != "fail" for v in results.values())
    if args.json:
        sys.stdout.write(_dump({"name": name, "suites": results, "passed": passed}))
    else:
        for suite in ("duality", "les", "mayer_vietoris", "factor2", "morse"):
            sys.stdout.write("%-14s %s\n" % (suite, results[suite]))
        sys.stdout.write("verify %s: %s\n" % (name, "pass" if passed else "FAIL"))
    return EXIT_OK if passed else EXIT_SUITE_FAILED


def cmd_double(args) -> int:
    name, split = load_space(args.space)
    double = truncated_double(split)
    mapping = {v: i for i, v in enumerate(sorted(double.total.vertices))}
    glued = BoundarySplit(
        double.total.relabel(mapping),
        double.exit_boundary.relabel(mapping),
        double.entry_boundary.relabel(mapping),
    )
    payload = space_file_dict(name + "_double", glued)
    text = _dump(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topsym",
        description="Symmetry verdicts and homological identity checks for "
        "triangulated boundary splits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Betti tables and symmetry verdicts")
    analyze.add_argument("space", help="space file or catalog name")
    analyze.add_argument("--json", action="store_true", help="machine-readable output")
    analyze.add_argument("--mod", type=int, metavar="N", help="add verdicts rolled modulo 2N")
    analyze.add_argument(
        "--assert-symmetric",
        action="store_true",
        help="exit 1 when the positive verdict is asymmetric",
    )
    analyze.set_defaults(func=cmd_analyze)

    example = sub.add_parser("example", help="write a catalog space file")
    example.add_argument("name", help="catalog name")
    example.add_argument("-o", "--output", help="write to a file instead of stdout")
    example.set_defaults(func=cmd_example)

    verify = sub.add_parser("verify", help="run the homological identity suites")
    verify.add_argument("space", help="space file or catalog name")
    verify.add_argument("--json", action="store_true", help="machine-readable output")
    verify.set_defaults(func=cmd_verify)

    double = sub.add_parser("double", help="emit the truncated double as a space file")
    double.add_argument("space", help="space file or catalog name")
    double.add_argument("-o", "--output", help="write to a file instead of stdout")
    double.set_defaults(func=cmd_double)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
