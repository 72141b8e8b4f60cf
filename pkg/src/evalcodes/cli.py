"""Command line interface.

Four subcommands: vanishing-ideal, rghw, toric-table and weights.  Problem
files are JSON objects with a "schema": 1 marker:

    {
      "schema": 1,
      "q": 3, "s": 2,
      "order": "grevlex",
      "points": [[0, 0], [1, 0]],          or {"family": "torus"}
                                            or {"family": "cartesian",
                                                "subsets": [[0, 1], [0, 1, 2]]}
      "L1": {"total_degree": 2},            or a list of polynomials
      "L2": {"total_degree": 1},            optional; absent means zero
      "r": [1, 2]                           optional; defaults to [1]
    }

Polynomials are strings like "t1^2*t2 + 2*t2 - 1" (factors joined by "*",
terms by "+"/"-") or lists of [[e1, ..., es], coeff] term pairs.  Space
shorthands: {"total_degree": d}, {"squarefree_degree": d},
{"squarefree_max_degree": d}.  Exit codes: 0 success, 1 input error,
2 budget refusal.
"""

import argparse
import json
import re
import sys
import time
from dataclasses import asdict, dataclass
from importlib import resources
from itertools import product
from pathlib import Path

from .codes import DEFAULT_BUDGET, evaluate_space, next_to_minimal, standardize, weight_distribution
from .errors import BudgetExceededError
from .families import (
    HypersimplexSpec,
    cartesian_points,
    toric_code,
    toric_min_distance_formula,
    torus_points,
)
from .field import PrimeField
from .groebner import PointSet, footprint, initial_ideal, vanishing_ideal
from .poly import Polynomial, echelonize, format_polynomial, order_by_name
from .weights import RghwProblem, relative_footprint, rghw_degree

_FACTOR_VAR = re.compile(r"t(\d+)(?:\^(\d+))?\Z")
_FACTOR_INT = re.compile(r"\d+\Z")
_TERM_SPLIT = re.compile(r"(?=[+-])")


def parse_polynomial(text, field, nvars):
    """Parse the text form: terms joined by + or -, factors by *."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    terms = {}
    for chunk in _TERM_SPLIT.split(text.replace(" ", "")):
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        exps = [0] * nvars
        for factor in chunk.split("*"):
            m = _FACTOR_VAR.match(factor)
            if m:
                idx = int(m.group(1))
                if not 1 <= idx <= nvars:
                    raise ValueError(
                        f"variable t{idx} out of range for s={nvars}"
                    )
                exps[idx - 1] += int(m.group(2) or 1)
                continue
            if _FACTOR_INT.match(factor):
                coeff *= int(factor)
                continue
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        mono = tuple(exps)
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(field, nvars, terms)


def polynomial_from_pairs(pairs, field, nvars):
    """Parse the [[exponents], coeff] term pair form."""
    terms = {}
    for item in pairs:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not isinstance(item[0], (list, tuple))
        ):
            raise ValueError(f"expected [[exponents], coeff] pair, got {item!r}")
        exps, coeff = item
        if len(exps) != nvars:
            raise ValueError(
                f"exponent vector {exps!r} has wrong length for s={nvars}"
            )
        mono = tuple(int(e) for e in exps)
        terms[mono] = terms.get(mono, 0) + int(coeff)
    return Polynomial(field, nvars, terms)


def _space_polynomials(spec, field, s):
    """Basis polynomials for a space specification (list or shorthand)."""
    if isinstance(spec, dict):
        keys = set(spec)
        if keys == {"total_degree"}:
            d = int(spec["total_degree"])
            if d < 0:
                raise ValueError("total_degree must be non-negative")
            monos = [
                m for m in product(range(d + 1), repeat=s) if sum(m) <= d
            ]
        elif keys == {"squarefree_degree"}:
            d = int(spec["squarefree_degree"])
            if not 0 <= d <= s:
                raise ValueError("squarefree_degree must lie in [0, s]")
            monos = [m for m in product(range(2), repeat=s) if sum(m) == d]
        elif keys == {"squarefree_max_degree"}:
            d = int(spec["squarefree_max_degree"])
            if not 0 <= d <= s:
                raise ValueError("squarefree_max_degree must lie in [0, s]")
            monos = [m for m in product(range(2), repeat=s) if sum(m) <= d]
        else:
            raise ValueError(f"unknown space shorthand {spec!r}")
        return [Polynomial.monomial(field, m) for m in monos]
    if isinstance(spec, list):
        polys = []
        for item in spec:
            if isinstance(item, str):
                polys.append(parse_polynomial(item, field, s))
            elif isinstance(item, list):
                polys.append(polynomial_from_pairs(item, field, s))
            else:
                raise ValueError(f"cannot parse polynomial entry {item!r}")
        return polys
    raise ValueError(f"space specification must be a list or shorthand, got {spec!r}")


def _points_from_spec(spec, field, s):
    if isinstance(spec, list):
        pts = PointSet(field, spec)
        if pts.nvars != s:
            raise ValueError(f"points have arity {pts.nvars}, expected s={s}")
        return pts
    if isinstance(spec, dict) and "family" in spec:
        family = spec["family"]
        if family == "torus":
            return torus_points(field, s)
        if family == "cartesian":
            subsets = spec.get("subsets")
            if not isinstance(subsets, list) or len(subsets) != s:
                raise ValueError("cartesian family needs s coordinate subsets")
            return cartesian_points(field, subsets)
        raise ValueError(f"unknown point family {family!r}")
    raise ValueError("points must be a coordinate list or a family object")


def _fixture_dir():
    return resources.files("evalcodes") / "fixtures"


def fixture_names():
    return sorted(
        p.name[: -len(".json")]
        for p in _fixture_dir().iterdir()
        if p.name.endswith(".json")
    )


def load_problem(source):
    """Load a problem file from a path or a built-in fixture name."""
    path = Path(source)
    if path.exists():
        text = path.read_text()
    else:
        name = source if source.endswith(".json") else source + ".json"
        candidate = _fixture_dir() / name
        if not candidate.is_file():
            raise ValueError(
                f"no such file or fixture {source!r};"
                f" fixtures: {', '.join(fixture_names())}"
            )
        text = candidate.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {source}: {exc}") from exc
    if not isinstance(data, dict) or data.get("schema") != 1:
        raise ValueError('problem file must be an object with "schema": 1')
    return data


@dataclass
class ResolvedProblem:
    data: dict
    field: object
    s: int
    order: object
    points: object
    space1: list
    space2: list | None
    r_values: list


def resolve_problem(data, order_override=None, need_spaces=True):
    for key in ("q", "s", "points"):
        if key not in data:
            raise ValueError(f"problem file is missing {key!r}")
    field = PrimeField(int(data["q"]))
    s = int(data["s"])
    if s < 1:
        raise ValueError("s must be positive")
    order_name = order_override or data.get("order", "grevlex")
    order = order_by_name(order_name)
    points = _points_from_spec(data["points"], field, s)
    space1 = space2 = None
    if need_spaces:
        if "L1" not in data:
            raise ValueError("problem file is missing 'L1'")
        space1 = _space_polynomials(data["L1"], field, s)
        if data.get("L2") is not None:
            space2 = _space_polynomials(data["L2"], field, s)
    r_values = data.get("r", [1])
    if not isinstance(r_values, list) or not all(
        isinstance(r, int) and r >= 1 for r in r_values
    ):
        raise ValueError("'r' must be a list of positive integers")
    return ResolvedProblem(data, field, s, order, points, space1, space2, r_values)


@dataclass
class ResultReport:
    """Machine readable outcome of the rghw and weights commands."""

    schema: int
    command: str
    problem: dict
    order: str
    q: int
    s: int
    n: int
    k1: int
    k2: int
    results: list
    weights: dict | None
    refusal: str | None
    budget: int
    elapsed_seconds: float

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**{f: data[f] for f in cls.__dataclass_fields__})

    def check(self):
        for entry in self.results:
            m, fp = entry.get("rghw"), entry.get("relative_footprint")
            if m is not None and fp is not None and m < fp:
                raise RuntimeError(
                    f"internal inconsistency: M_{entry['r']}={m} below"
                    f" footprint bound {fp}"
                )
        return self


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_vanishing_ideal(args):
    data = load_problem(args.problem)
    resolved = resolve_problem(data, args.order, need_spaces=False)
    t0 = time.perf_counter()
    gb = vanishing_ideal(resolved.points, resolved.order)
    fp = footprint(gb)
    elapsed = time.perf_counter() - t0
    payload = {
        "schema": 1,
        "command": "vanishing-ideal",
        "problem": data,
        "order": resolved.order.name,
        "q": resolved.field.q,
        "s": resolved.s,
        "n": len(resolved.points),
        "generators": [format_polynomial(g) for g in gb.generators],
        "initial_ideal": [list(m) for m in initial_ideal(gb)],
        "footprint_size": len(fp),
        "standard_monomials": [list(m) for m in fp],
        "elapsed_seconds": elapsed,
    }
    lines = [
        f"vanishing ideal: q={resolved.field.q} s={resolved.s}"
        f" n={len(resolved.points)} order={resolved.order.name}",
        "generators:",
        *(f"  {format_polynomial(g)}" for g in gb.generators),
        f"footprint size: {len(fp)}",
        f"elapsed: {elapsed:.3f}s",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_rghw(args):
    data = load_problem(args.problem)
    resolved = resolve_problem(data, args.order)
    t0 = time.perf_counter()
    problem = RghwProblem(
        resolved.points,
        resolved.space1,
        resolved.space2,
        resolved.order,
    )
    results = []
    refused = False
    for r in resolved.r_values:
        entry = {"r": r, "rghw": None, "relative_footprint": None, "refusal": None}
        entry["relative_footprint"] = relative_footprint(problem, r)
        try:
            entry["rghw"] = rghw_degree(
                problem,
                r,
                budget=args.budget,
                threads=args.threads,
                validate=args.validate,
            )
        except BudgetExceededError as exc:
            entry["refusal"] = str(exc)
            refused = True
        results.append(entry)
    elapsed = time.perf_counter() - t0
    report = ResultReport(
        schema=1,
        command="rghw",
        problem=data,
        order=resolved.order.name,
        q=resolved.field.q,
        s=resolved.s,
        n=len(resolved.points),
        k1=problem.k1,
        k2=problem.k2,
        results=results,
        weights=None,
        refusal=None,
        budget=args.budget,
        elapsed_seconds=elapsed,
    ).check()
    lines = [
        f"rghw: q={report.q} s={report.s} n={report.n}"
        f" k1={report.k1} k2={report.k2} order={report.order}"
    ]
    for entry in results:
        r = entry["r"]
        if entry["refusal"]:
            lines.append(f"r={r}: refused ({entry['refusal']})")
        else:
            lines.append(
                f"r={r}: M_{r} = {entry['rghw']}"
                f"  RFP_{r} = {entry['relative_footprint']}"
            )
    lines.append(f"elapsed: {elapsed:.3f}s")
    _emit(args, report.to_dict(), lines)
    return 2 if refused else 0


def cmd_weights(args):
    data = load_problem(args.problem)
    resolved = resolve_problem(data, args.order)
    t0 = time.perf_counter()
    gb = vanishing_ideal(resolved.points, resolved.order)
    space = standardize(
        echelonize(
            resolved.space1,
            resolved.order,
            field=resolved.field,
            nvars=resolved.s,
        ),
        gb,
    )
    code = evaluate_space(space, resolved.points)
    refusal = None
    weights = None
    try:
        profile = weight_distribution(code, budget=args.budget, threads=args.threads)
        weights = {
            "distribution": [[w, c] for w, c in sorted(profile.distribution.items())],
            "distinct_weights": profile.distinct_weights,
        }
    except BudgetExceededError as exc:
        refusal = str(exc)
    elapsed = time.perf_counter() - t0
    report = ResultReport(
        schema=1,
        command="weights",
        problem=data,
        order=resolved.order.name,
        q=resolved.field.q,
        s=resolved.s,
        n=code.n,
        k1=code.k,
        k2=0,
        results=[],
        weights=weights,
        refusal=refusal,
        budget=args.budget,
        elapsed_seconds=elapsed,
    ).check()
    lines = [
        f"weights: q={report.q} s={report.s} n={report.n} k={report.k1}"
        f" order={report.order}"
    ]
    if refusal:
        lines.append(f"refused ({refusal})")
    else:
        lines.append("weight  count")
        for w, c in weights["distribution"]:
            lines.append(f"{w:6d}  {c}")
        lines.append(f"distinct nonzero weights: {weights['distinct_weights']}")
    lines.append(f"elapsed: {elapsed:.3f}s")
    _emit(args, report.to_dict(), lines)
    return 2 if refusal else 0


def cmd_toric_table(args):
    field = PrimeField(args.q)
    if args.s < 1:
        raise ValueError("s must be positive")
    t0 = time.perf_counter()
    rows = []
    refused = False
    for d in range(1, args.s + 1):
        code = toric_code(HypersimplexSpec(field, args.s, d))
        row = {"d": d, "n": code.n, "k": code.k}
        row["min_distance_formula"] = toric_min_distance_formula(args.q, args.s, d)
        try:
            profile = weight_distribution(
                code, budget=args.budget, threads=args.threads
            )
            row["min_distance"] = profile.minimum_distance
            # The second-weight convention is only defined for q >= 3.
            row["next_to_minimal"] = next_to_minimal(profile) if args.q >= 3 else None
            row["refusal"] = None
            if row["min_distance"] != row["min_distance_formula"]:
                raise RuntimeError(
                    f"internal inconsistency: enumerated distance"
                    f" {row['min_distance']} != formula"
                    f" {row['min_distance_formula']} at d={d}"
                )
        except BudgetExceededError as exc:
            row["min_distance"] = None
            row["next_to_minimal"] = None
            row["refusal"] = str(exc)
            refused = True
        rows.append(row)
    elapsed = time.perf_counter() - t0
    payload = {
        "schema": 1,
        "command": "toric-table",
        "q": args.q,
        "s": args.s,
        "rows": rows,
        "budget": args.budget,
        "elapsed_seconds": elapsed,
    }
    lines = [f"toric codes over hypersimplices: q={args.q} s={args.s}"]
    lines.append(" d    n    k  delta  delta_formula  delta2")
    for row in rows:
        if row["refusal"]:
            lines.append(
                f"{row['d']:2d} {row['n']:4d} {row['k']:4d}  refused"
                f" ({row['refusal']})"
            )
        else:
            delta2 = row["next_to_minimal"]
            lines.append(
                f"{row['d']:2d} {row['n']:4d} {row['k']:4d}"
                f" {row['min_distance']:6d} {row['min_distance_formula']:14d}"
                f" {delta2 if delta2 is not None else '-':>7}"
            )
    lines.append(f"elapsed: {elapsed:.3f}s")
    _emit(args, payload, lines)
    return 2 if refused else 0


class _ArgumentParser(argparse.ArgumentParser):
    """Argument errors exit with code 1; 2 is reserved for budget refusals."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser():
    parser = _ArgumentParser(
        prog="evalcodes",
        description="Weight hierarchies of evaluation codes over prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p, spaces=True):
        p.add_argument(
            "--order",
            choices=["lex", "grlex", "grevlex"],
            default=None,
            help="monomial order override (default: problem file, then grevlex)",
        )
        p.add_argument("--json", action="store_true", help="machine readable output")
        if spaces:
            p.add_argument(
                "--budget",
                type=int,
                default=DEFAULT_BUDGET,
                help=f"enumeration element budget (default {DEFAULT_BUDGET})",
            )
            p.add_argument(
                "--threads",
                type=int,
                default=None,
                help="worker threads (default: available parallelism)",
            )

    p = sub.add_parser(
        "vanishing-ideal",
        help="reduced basis and footprint of the ideal of a point set",
    )
    p.add_argument("problem", help="problem file path or fixture name")
    common(p, spaces=False)
    p.set_defaults(func=cmd_vanishing_ideal)

    p = sub.add_parser(
        "rghw", help="relative generalized Hamming weights and footprint bounds"
    )
    p.add_argument("problem", help="problem file path or fixture name")
    p.add_argument(
        "--validate",
        action="store_true",
        help="cross check through the basis degree route and the definition oracle",
    )
    common(p)
    p.set_defaults(func=cmd_rghw)

    p = sub.add_parser(
        "toric-table",
        help="dimension and distance table of hypersimplex toric codes",
    )
    p.add_argument("q", type=int, help="prime field size")
    p.add_argument("s", type=int, help="number of variables")
    common(p)
    p.set_defaults(func=cmd_toric_table)

    p = sub.add_parser("weights", help="weight distribution of an evaluation code")
    p.add_argument("problem", help="problem file path or fixture name")
    common(p)
    p.set_defaults(func=cmd_weights)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
