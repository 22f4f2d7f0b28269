"""
Command line interface: ``vknot <command> ...``.

Exit status is 0 on success, 1 on a domain error or a failed check and 2 on
a usage error.
"""

import argparse
import json
import logging
import sys

from .._version import __version__
from ..diagram import parse, serialize, symmetry_variants
from ..intersect import build, format_matrices
from ..invariants import (
    all_invariants,
    bound_report,
    identity_check,
    span_bounds,
    symmetry_distinctness,
    symmetry_identity_check,
)
from ..laurent import LaurentClass, LaurentPoly
from ..moves import apply_move, random_walk
from ..utils import check_diagram
from ._catalog import (
    TABLE_FORMATS,
    compute_table,
    distinguish,
    load_catalog,
    load_fixture_catalog,
    write_table,
)

logger = logging.getLogger(__name__)

CLASSICAL_FIXTURES = (
    "unknot",
    "trefoil",
    "mirror-trefoil",
    "figure-eight",
    "cinquefoil",
)


def _compute(args, out):
    d = parse(args.code)
    record = all_invariants(d).to_record(code=serialize(d))
    if args.format == "json":
        out.write(json.dumps(record) + "\n")
        return 0

    for key, value in record.items():
        if key != "name":
            out.write(f"{key}: {value}\n")
    if d.n:
        out.write("\n" + format_matrices(build(d)) + "\n")
    return 0


def _table(args, out):
    catalog = load_catalog(args.catalog) if args.catalog else load_fixture_catalog()
    logger.info("computing invariants of %d knots", len(catalog))
    records = compute_table(catalog, n_jobs=args.n_jobs, progress_bar=args.verbose > 0)
    write_table(records, args.format, out)
    return 1 if any("error" in record for record in records) else 0


def _distinguish(args, out):
    report = distinguish(all_invariants(args.code1), all_invariants(args.code2))
    out.write(f"{report}\n")
    return 0


def _symmetries(args, out):
    variants = symmetry_variants(parse(args.code))
    for key, variant in variants.items():
        s = all_invariants(variant)
        out.write(
            f"{key:5} W={s.W}  I={s.I}  II={s.II}  III={s.III.canonical()}\n"
        )
    out.write(f"{symmetry_distinctness(all_invariants(variants['K']))}\n")
    return 0


def _bounds(args, out):
    s = all_invariants(args.code)
    out.write(f"{bound_report(s, include_reverse=args.include_reverse)}\n")
    crossing, virtual = span_bounds(s)
    out.write(f"span of W: c >= {crossing}; vc >= {virtual}\n")
    return 0


def _verify(args, out):
    d = check_diagram(args.code)
    reference = all_invariants(d)
    _, log = random_walk(d, args.steps, args.seed, args.max_chords)

    violations = 0
    current = d
    for step, spec in enumerate(log):
        current = apply_move(current, spec)
        out.write(f"{spec}\n")
        report = distinguish(reference, all_invariants(current))
        if report.distinguished:
            violations += 1
            logger.error("step %d (%s) changed invariants: %s", step, spec, report)

    if violations:
        sys.stderr.write(f"vknot: {violations} of {len(log)} moves changed invariants\n")
        return 1
    logger.info("%d moves, invariants unchanged", len(log))
    return 0


def _selftest(args, out):
    catalog = load_fixture_catalog()
    failed = 0
    zero = LaurentPoly()
    for record in catalog:
        checks = {
            "identities": identity_check(record.code).holds,
            "symmetry identities": symmetry_identity_check(record.code).holds,
        }
        if record.name in CLASSICAL_FIXTURES:
            s = record.invariants
            checks["classical vanishing"] = (
                s.W == zero
                and s.I == zero
                and s.II == zero
                and s.III == LaurentClass(zero, s.Wbar)
            )
        for name, ok in checks.items():
            failed += not ok
            out.write(f"{'ok  ' if ok else 'FAIL'} {record.name}: {name}\n")

    walk = argparse.Namespace(
        code=catalog["trefoil"].code, steps=200, seed=args.seed, max_chords=None
    )
    ok = _verify(walk, _Discard()) == 0
    failed += not ok
    out.write(f"{'ok  ' if ok else 'FAIL'} trefoil: move invariance\n")
    return 1 if failed else 0


class _Discard:
    def write(self, text):
        pass


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vknot",
        description="Intersection polynomials of virtual knots from Gauss codes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress messages, -vv for every move",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="invariants of one diagram")
    compute.add_argument("code", help="Gauss code, e.g. O1+U2+O3+U1+O2+U3+")
    compute.add_argument("--format", choices=("text", "json"), default="text")
    compute.set_defaults(handler=_compute)

    table = commands.add_parser("table", help="invariants of a catalog")
    table.add_argument(
        "catalog", nargs="?", help="name<TAB>code file; the fixtures by default"
    )
    table.add_argument("--format", choices=TABLE_FORMATS, default="json")
    table.add_argument("--n-jobs", type=int, default=None)
    table.set_defaults(handler=_table)

    compare = commands.add_parser("distinguish", help="compare two diagrams")
    compare.add_argument("code1")
    compare.add_argument("code2")
    compare.set_defaults(handler=_distinguish)

    symmetries = commands.add_parser("symmetries", help="the eight variants")
    symmetries.add_argument("code")
    symmetries.set_defaults(handler=_symmetries)

    bounds = commands.add_parser("bounds", help="crossing number estimates")
    bounds.add_argument("code")
    bounds.add_argument("--include-reverse", action="store_true")
    bounds.set_defaults(handler=_bounds)

    verify = commands.add_parser("verify", help="random move invariance check")
    verify.add_argument("code")
    verify.add_argument("--steps", type=int, default=100)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--max-chords", type=int, default=None)
    verify.set_defaults(handler=_verify)

    selftest = commands.add_parser("selftest", help="run the built-in checks")
    selftest.add_argument("--seed", type=int, default=0)
    selftest.set_defaults(handler=_selftest)
    return parser


def main(argv=None) -> int:
    """
    Run the command line interface.

    Parameters
    ----------
    argv : list of str, default=None
        Arguments without the program name; ``sys.argv[1:]`` when None.

    Returns
    -------
    int
        Exit status.
    """
    args = _parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(name)s: %(message)s")

    try:
        return args.handler(args, sys.stdout)
    except (ValueError, OSError) as error:
        sys.stderr.write(f"vknot: error: {error}\n")
        return 1
