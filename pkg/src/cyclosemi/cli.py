"""Command line interface: ``cyclosemi analyze|census|verify|poly``.

Exit codes: 0 success, 1 counterexample found, 2 usage error,
3 arithmetic overflow.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .arith import totient
from .cyclotomy import (
    cyclotomic_factorization,
    default_exponent_bound,
    exponent_sequence_from_factors,
    exponent_sequence_truncated,
    semigroup_polynomial,
)
from .enumeration import CONJECTURES, cyclotomic_census, default_jobs
from .errors import CoefficientOverflowError, DomainError
from .polynomials import cyclotomic, is_palindromic
from .semigroup import NumericalSemigroup, betti_elements, from_generators, is_symmetric
from .structure import classify_low_length, is_complete_intersection, tree_to_json

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_ARITHMETIC = 3

CONJECTURE_NAMES = {"1": "C1", "length": "C-length", "msg": "C-msg", "maximalsD": "C-maximalsD"}


@dataclass
class AnalysisReport:
    semigroup: dict
    embedding_dimension: int
    symmetric: bool
    polynomial: list[int]
    cyclotomic: bool
    factors: list[dict]
    remainder: list[int]
    length: int | None
    betti: list[int]
    ci: bool
    gluing_tree: dict | None
    exponent_sequence: dict
    classification: str | None

    def to_json(self) -> dict:
        return asdict(self)


def analyze(S: NumericalSemigroup, exp_bound: int | None = None) -> AnalysisReport:
    P = semigroup_polynomial(S)
    fac = cyclotomic_factorization(P)
    tree = is_complete_intersection(S)
    if fac.cyclotomic:
        seq = exponent_sequence_from_factors(fac.factors)
    else:
        seq = exponent_sequence_truncated(S, exp_bound or default_exponent_bound(S))
    length = fac.length
    report = AnalysisReport(
        semigroup=S.to_json(),
        embedding_dimension=S.embedding_dimension,
        symmetric=is_symmetric(S),
        polynomial=P.to_json(),
        cyclotomic=fac.cyclotomic,
        factors=[{"d": d, "mult": m} for d, m in fac.factors],
        remainder=fac.remainder.to_json(),
        length=length,
        betti=betti_elements(S),
        ci=tree is not None,
        gluing_tree=tree_to_json(tree) if tree is not None else None,
        exponent_sequence=seq.to_json(),
        classification=str(classify_low_length(S)) if length in (1, 2) else None,
    )
    # internal consistency of the report
    assert is_palindromic(P) == report.symmetric
    cyc_degree = sum(m * totient(d) for d, m in fac.factors)
    assert cyc_degree + fac.remainder.degree == max(S.frobenius + 1, 0)
    return report


def _pretty_report(r: AnalysisReport) -> str:
    sg = r.semigroup
    lines = [
        f"semigroup       <{', '.join(map(str, sg['min_gens']))}>",
        f"frobenius       {sg['frobenius']}",
        f"genus           {sg['genus']}",
        f"embedding dim   {r.embedding_dimension}",
        f"symmetric       {r.symmetric}",
        f"P_S             {r.polynomial}",
        f"cyclotomic      {r.cyclotomic}",
        "factors         " + (" ".join(f"Phi_{f['d']}^{f['mult']}" for f in r.factors) or "-"),
    ]
    if not r.cyclotomic:
        lines.append(f"remainder       {r.remainder}")
    lines += [
        f"length          {r.length if r.length is not None else '-'}",
        f"betti           {r.betti}",
        f"complete int.   {r.ci}",
        f"exponents       {r.exponent_sequence['entries']}"
        + ("" if r.exponent_sequence["exact"] else f" (truncated at {r.exponent_sequence['truncation_bound']})"),
    ]
    if r.classification:
        lines.append(f"classification  {r.classification}")
    return "\n".join(lines)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_analyze(args) -> int:
    S = from_generators(args.generators)
    report = analyze(S, args.exp_bound)
    if args.pretty:
        print(_pretty_report(report))
    else:
        print(_dump(report.to_json()))
    return EXIT_OK


def _writable(path: Path) -> None:
    # fail before a long run rather than after it
    with open(path, "a"):
        pass


def cmd_census(args) -> int:
    csv_path = Path(args.out) if args.out else None
    summary_path = csv_path.with_suffix(".summary.json") if csv_path else None
    for path in (csv_path, summary_path, Path(args.checkpoint) if args.checkpoint else None):
        if path is not None:
            _writable(path)
    report = cyclotomic_census(
        args.frobenius_max,
        jobs=args.jobs,
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
        resume=args.resume,
    )
    if csv_path:
        report.write_csv(csv_path)
        report.write_summary(summary_path)
    if args.json:
        print(_dump(report.summary()))
    else:
        print(report.table())
    return EXIT_OK


def cmd_verify(args) -> int:
    which = list(CONJECTURES) if args.conjecture == "all" else [CONJECTURE_NAMES[args.conjecture]]
    report = cyclotomic_census(
        args.frobenius_max,
        jobs=args.jobs,
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
        resume=args.resume,
    )
    results = report.conjecture_results(which)
    failed = False
    for name, res in results.items():
        if res["verified"]:
            print(f"{name}: VERIFIED ({res['checked']} checked, F <= {args.frobenius_max})")
        else:
            failed = True
            print(f"{name}: COUNTEREXAMPLES ({len(res['counterexamples'])} of {res['checked']} checked)")
            print(_dump({"conjecture": name, "counterexamples": res["counterexamples"]}))
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_poly(args) -> int:
    if args.cyclotomic is not None:
        if args.cyclotomic < 1:
            raise DomainError("cyclotomic index must be >= 1")
        poly = cyclotomic(args.cyclotomic)
    else:
        poly = semigroup_polynomial(from_generators(args.semigroup_poly))
    print(_dump(poly.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclosemi", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for the semigroup generated by GENERATORS")
    p.add_argument("generators", nargs="+", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="human readable output")
    p.add_argument("--exp-bound", type=int, default=None, help="truncation bound for non-cyclotomic exponent sequences")
    p.set_defaults(func=cmd_analyze)

    def census_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--frobenius-max", type=int, required=True)
        p.add_argument("--checkpoint", default=None, help="JSON-lines file, one line per finished Frobenius number")
        p.add_argument("--resume", action="store_true", help="skip Frobenius numbers already in the checkpoint")
        p.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default $CYCLOSEMI_JOBS or 1)")

    p = sub.add_parser("census", help="cyclotomic semigroups by polynomial length")
    census_options(p)
    p.add_argument("--out", default=None, help="CSV path; a .summary.json is written next to it")
    p.add_argument("--json", action="store_true", help="print the summary JSON instead of the table")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check conjectures over the census")
    census_options(p)
    p.add_argument("--conjecture", required=True, choices=[*CONJECTURE_NAMES, "all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("poly", help="print polynomial coefficients as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cyclotomic", type=int, metavar="N")
    src.add_argument("--semigroup-poly", type=int, nargs="+", metavar="GEN")
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "frobenius_max", 1) < 1:
        print("error: --frobenius-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CoefficientOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARITHMETIC
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
