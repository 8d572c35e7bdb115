"""Command-line front-end: ``analyze``, ``oracle``, ``gen`` and ``spectrum``.

Reports go to stdout, log records to stderr.  Exit codes are 0 on success,
1 on usage errors, 2 on input errors, 3 when a resource guard would be
exceeded and 4 when two computations of the same quantity disagree.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence, Union

from ..algebra.gf2_core import BitVec
from ..algebra.set_model import (
    BoolMultiset,
    VectorSet,
    is_affine,
    is_vector_space,
    rank_of,
)
from ..analysis.analysis import coset_structure, fixing_set, quotient
from ..analysis.closed_form import closed_form_checks
from ..analysis.spectrum import spectrum_analysis, spectrum_table
from ..analysis.structure import BalanceStructure
from ..config.settings import (
    ENUMERATE_MEMBERS_LIMIT,
    LOG_FILE,
    OUTPUT_DIR,
    RANK_GUARD,
    SPECTRUM_GUARD,
)
from ..utils.errors import BalanceError, ConsistencyError, GuardError, InputError
from ..utils.logging_utils import configure_logging
from ..utils.testkit import Family, FamilySpec, generate, oracle_analyze
from .parsing import format_multiset, format_set, parse_multiset_file, parse_set_file
from .reports import (
    AnalysisReport,
    BalancingReport,
    CheckReport,
    ConstantSetReport,
    FixingSetReport,
    QuotientReport,
    write_coset_table,
    write_frame,
)

logger = logging.getLogger(__name__)

Analyzed = Union[VectorSet, BoolMultiset]


class UsageError(Exception):
    """Raised by :class:`ArgumentParser` instead of exiting with status 2."""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


# Analysis -------------------------------------------------------------------


def choose_structure(
    obj: Analyzed, method: str, max_rank: int, max_n: int
) -> BalanceStructure:
    """Run the coset or spectrum method; ``auto`` prefers the coset sweep."""
    if method == "auto":
        r = rank_of(obj.support)
        if r <= max_rank:
            method = "coset"
        elif obj.width <= max_n:
            logger.info("rank %d exceeds --max-rank %d; using the spectrum", r, max_rank)
            method = "spectrum"
        else:
            raise GuardError(
                "rank", max_rank, r, flag="--max-rank",
                hint=f"width {obj.width} also exceeds --max-spectrum-n {max_n}",
            )
    if method == "coset":
        return coset_structure(obj, max_rank)
    if method == "spectrum":
        return spectrum_analysis(obj, max_n)
    raise InputError(f"unknown method {method!r}")


def _classification(support: VectorSet) -> str:
    if is_vector_space(support):
        return "vector_space"
    if is_affine(support):
        return "affine_space"
    return "general"


def _strings(vectors: Sequence[BitVec]) -> List[str]:
    return [str(v) for v in vectors]


def build_report(
    obj: Analyzed,
    structure: BalanceStructure,
    enumerate_members: bool = False,
    show_indices: bool = False,
    max_rank: int = RANK_GUARD,
) -> AnalysisReport:
    """Assemble the report for ``obj`` around an already computed ``structure``."""
    support = obj.support
    b = structure.balancing_number
    fully_balanced = structure.is_fully_balanced
    enumerated = None
    if enumerate_members:
        enumerated = _strings(structure.enumerate_members(ENUMERATE_MEMBERS_LIMIT))

    fixing_report = quotient_report = None
    if isinstance(obj, BoolMultiset):
        structural = is_affine(support) and obj.is_constant
        predicted = 0 if obj.total % 2 else b
        checks = [CheckReport("parity", predicted, b, predicted == b)]
    else:
        structural = is_affine(obj)
        fixing = fixing_set(obj)
        fixing_report = FixingSetReport(fixing.dimension, _strings(fixing.basis))
        if fixing.dimension > 0:
            view = quotient(obj, fixing)
            quotient_report = QuotientReport(view.f, _strings(view.representatives.members))
        checks = [
            CheckReport(c.name, c.predicted, c.actual, c.matches)
            for c in closed_form_checks(obj, structure, max_rank, fixing)
        ]
    if fully_balanced != structural:
        raise ConsistencyError(
            f"b = {b} at rank {structure.rank} disagrees with the structural classification"
        )

    report = AnalysisReport(
        n=obj.width,
        cardinality=len(support),
        total_multiplicity=obj.total,
        rank=structure.rank,
        classification=_classification(support),
        constant_set=ConstantSetReport(
            structure.constant_space.dimension, _strings(structure.constant_space.basis)
        ),
        balancing=BalancingReport(
            b, _strings(structure.balancing_reps), structure.method.value, enumerated
        ),
        fixing_set=fixing_report,
        fully_balanced=fully_balanced,
        quotient=quotient_report,
        closed_form_checks=checks,
    )
    if show_indices:
        report.indices = _index_map(report)
    return report


def _index_map(report: AnalysisReport) -> dict:
    """Every vector string in ``report`` mapped to its index in ``0..2^n-1``."""
    seen: List[str] = []
    seen += report.constant_set.basis + report.balancing.coset_representatives
    seen += report.balancing.enumerated_members or []
    if report.fixing_set:
        seen += report.fixing_set.basis
    if report.quotient:
        seen += report.quotient.representatives
    return {v: int(v, 2) for v in sorted(set(seen), key=lambda v: int(v, 2))}


# Commands -------------------------------------------------------------------


def _read_input(args) -> Analyzed:
    source = sys.stdin if args.input == "-" else args.input
    if args.multiset:
        return parse_multiset_file(source)
    return parse_set_file(source)


def _stem(path: str) -> str:
    if path == "-":
        return "stdin"
    return os.path.splitext(os.path.basename(path))[0]


def _emit(report: AnalysisReport, fmt: str) -> None:
    sys.stdout.write(report.to_json() + "\n" if fmt == "json" else report.to_text())


def cmd_analyze(args) -> AnalysisReport:
    obj = _read_input(args)
    structure = choose_structure(obj, args.method, args.max_rank, args.max_spectrum_n)
    report = build_report(obj, structure, args.enumerate, args.show_indices, args.max_rank)
    if args.csv:
        write_coset_table(structure, args.csv, _stem(args.input))
    _emit(report, args.format)
    return report


def cmd_oracle(args) -> AnalysisReport:
    obj = _read_input(args)
    structure = oracle_analyze(obj)
    report = build_report(obj, structure, args.enumerate, args.show_indices, args.max_rank)
    _emit(report, args.format)
    return report


def cmd_spectrum(args) -> None:
    obj = _read_input(args)
    frame = spectrum_table(obj, args.max_spectrum_n).to_frame()
    if args.csv:
        write_frame(frame, args.csv, f"{_stem(args.input)}_spectrum.csv")
    else:
        sys.stdout.write(frame.to_string(index=False) + "\n")


def cmd_gen(args) -> str:
    spec_fields = dict(
        family=args.family, n=args.n, r=args.r, k=args.k, f=args.f,
        classes=args.classes, cardinality=args.cardinality,
        max_multiplicity=args.max_multiplicity, seed=args.seed, canonical=args.canonical,
    )
    try:
        result = generate(FamilySpec(**spec_fields))
    except InputError as exc:
        # Impossible family parameters are a usage problem
        raise UsageError(str(exc)) from exc
    text = format_multiset(result) if isinstance(result, BoolMultiset) else format_set(result)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc}") from exc
        logger.info("wrote %s witness to %s", args.family, args.output)
    else:
        sys.stdout.write(text)
    return text


# Parser ---------------------------------------------------------------------


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="set or multiset file, '-' for stdin")
    parser.add_argument(
        "--multiset", action="store_true", help="read 'BITS COUNT' lines"
    )
    parser.add_argument(
        "--max-spectrum-n", type=int, default=SPECTRUM_GUARD,
        help="largest width for the spectrum method (default %(default)s)",
    )


def _add_report(parser: argparse.ArgumentParser) -> None:
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    parser.set_defaults(format="text")
    parser.add_argument(
        "--enumerate", action="store_true",
        help=f"list every member of B(S) (at most {ENUMERATE_MEMBERS_LIMIT})",
    )
    parser.add_argument(
        "--show-indices", action="store_true", help="map each listed vector to its index"
    )
    parser.add_argument(
        "--max-rank", type=int, default=RANK_GUARD,
        help="largest rank swept by the coset method (default %(default)s)",
    )


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="balanced-sets", description="Balanced and constant sets over F2^n."
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    parser.add_argument("--log-file", default=LOG_FILE, help="also write the log here")
    commands = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    commands.required = True

    analyze = commands.add_parser("analyze", help="analyze a set or multiset")
    _add_input(analyze)
    _add_report(analyze)
    analyze.add_argument(
        "--method", choices=("auto", "coset", "spectrum"), default="auto",
        help="how B(S) is computed (default %(default)s)",
    )
    analyze.add_argument(
        "--csv", nargs="?", const=OUTPUT_DIR, default=None, metavar="DIR",
        help=f"write the coset table as CSV (default folder {OUTPUT_DIR})",
    )
    analyze.set_defaults(handler=cmd_analyze)

    oracle = commands.add_parser("oracle", help="brute-force cross-check (n <= 20)")
    _add_input(oracle)
    _add_report(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    spectrum = commands.add_parser("spectrum", help="print the balance sum of every y")
    _add_input(spectrum)
    spectrum.add_argument(
        "--csv", nargs="?", const=OUTPUT_DIR, default=None, metavar="DIR",
        help="write the table as CSV instead of printing it",
    )
    spectrum.set_defaults(handler=cmd_spectrum)

    gen = commands.add_parser("gen", help="generate a witness family")
    gen.add_argument("--family", required=True, choices=[f.value for f in Family])
    gen.add_argument("--n", type=int, required=True, help="width")
    gen.add_argument("--r", type=int, help="rank")
    gen.add_argument("--k", type=int, help="relation weight")
    gen.add_argument("--f", type=int, help="fixing dimension")
    gen.add_argument("--classes", type=int, help="cosets of the fixing space")
    gen.add_argument("--cardinality", type=int, help="support size of random families")
    gen.add_argument("--max-multiplicity", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--canonical", action="store_true", help="use e_1, e_2, ... as the basis")
    gen.add_argument("--output", help="write here instead of stdout")
    gen.set_defaults(handler=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    configure_logging(level=level, log_file=args.log_file)

    try:
        args.handler(args)
    except UsageError as exc:
        logger.error("%s", exc)
        return 1
    except BalanceError as exc:
        logger.error("%s", exc)
        return exc.exit_code
    return 0
