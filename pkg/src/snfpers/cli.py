"""
Command-line front end.

Subcommands::

    snfpers snd      --input a.mat [--ring z]
    snfpers homology --input k.cpx [--ring z] [--dim N]
    snfpers barcode  --input k.flt [--field q] [--max-dim N] [--reps]
    snfpers betti    --input k.flt [--field q] --dim N --t T [--p P]

Every subcommand takes ``--format {text,json}``, ``--verify``, ``--strict``
and ``-v``/``-vv``.  ``--input -`` (the default) reads standard input.

Exit status: 0 on success, 1 for invalid input, 2 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from typing import Any

from snfpers import __version__
from snfpers.barcode import barcode, p_persistent_betti, persistent_homology
from snfpers.errors import InvariantViolation
from snfpers.formats import (
    barcode_to_dict,
    format_barcode_text,
    parse_complex,
    parse_filtration,
    parse_matrix,
)
from snfpers.matrices import GradedMatrix, Matrix, graded_snd, snd, verify_snd
from snfpers.persmod_oracle import check_interval_decomposition, from_filtration, inclusion_rank
from snfpers.rings import EuclideanRing, get_field, get_ring
from snfpers.simplicial import euler_characteristic, homology, homology_all

_logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args: argparse.Namespace, text_lines: list[str], payload: dict[str, Any]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _rows(ring: EuclideanRing, m: Matrix) -> list[list[str]]:
    return [[ring.format(e) for e in row] for row in m.rows()]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_snd(args: argparse.Namespace) -> int:
    ring = get_ring(args.ring) if args.ring else None
    parsed = parse_matrix(_read_input(args.input), ring)
    if isinstance(parsed, GradedMatrix):
        graded = graded_snd(parsed, check_steps=args.verify)
        res, a = graded.snd, parsed.base
        degrees = {"row_degrees": list(graded.new_row_degrees),
                   "col_degrees": list(graded.new_col_degrees)}
    else:
        res, a = snd(parsed), parsed
        degrees = {}
    ring = a.ring
    verified = verify_snd(a, res)
    _logger.info("snd %dx%d over %s: rank %d", a.nrows, a.ncols, ring.label, res.rank)
    if args.verify and not verified:
        raise InvariantViolation("the computed decomposition failed verification")

    lines = [
        f"ring: {ring.label}",
        f"rank: {res.rank}",
        "diagonal: " + " ".join(ring.format(d) for d in res.diagonal),
        "D:",
        *(" ".join(row) for row in _rows(ring, res.d)),
    ]
    lines += [f"{k.replace('_', ' ')}: {' '.join(map(str, v))}" for k, v in degrees.items()]
    lines.append(f"verified: {'true' if verified else 'false'}")
    _emit(args, lines, {
        "ring": ring.label,
        "rank": res.rank,
        "diagonal": [ring.format(d) for d in res.diagonal],
        "u": _rows(ring, res.u),
        "d": _rows(ring, res.d),
        "v": _rows(ring, res.v),
        **degrees,
        "verified": verified,
    })
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    ring = get_ring(args.ring)
    k = parse_complex(_read_input(args.input))
    if args.dim is None:
        groups = homology_all(k, ring)
        if args.verify:
            alt = sum((-1) ** h.dim * h.free_rank for h in groups)
            if alt != euler_characteristic(k):
                raise InvariantViolation(
                    f"alternating free ranks {alt} differ from the Euler characteristic "
                    f"{euler_characteristic(k)}"
                )
    else:
        if args.dim < 0:
            raise ValueError(f"--dim must be a natural number, got {args.dim}")
        groups = [homology(k, args.dim, ring)]
    _emit(
        args,
        [f"H_{h.dim}: {h.describe(ring)}" for h in groups],
        {
            "ring": ring.label,
            "homology": [
                {
                    "dim": h.dim,
                    "free_rank": h.free_rank,
                    "torsion": [ring.format(d) for d in h.invariant_factors],
                }
                for h in groups
            ],
        },
    )
    return 0


def cmd_barcode(args: argparse.Namespace) -> int:
    field = get_field(args.field)
    filt = parse_filtration(_read_input(args.input), strict=args.strict)
    bc = barcode(filt, field, max_dim=args.max_dim, verify=args.verify)
    if args.verify:
        for n in range(bc.max_dim + 1):
            module = from_filtration(filt, n, field)
            if not check_interval_decomposition(module, bc.intervals(n)):
                raise InvariantViolation(f"dim {n} bars disagree with the rank oracle")
        _logger.info("barcode agrees with the rank oracle in dims 0..%d", bc.max_dim)
    if args.format == "json":
        print(json.dumps(barcode_to_dict(bc), indent=2))
    else:
        print(format_barcode_text(bc, reps=args.reps), end="")
    return 0


def cmd_betti(args: argparse.Namespace) -> int:
    field = get_field(args.field)
    if args.dim < 0:
        raise ValueError(f"--dim must be a natural number, got {args.dim}")
    filt = parse_filtration(_read_input(args.input), strict=args.strict)
    bars = persistent_homology(filt, args.dim, field)
    value = p_persistent_betti(bars, args.t, args.p)
    if args.verify:
        expected = inclusion_rank(filt, args.dim, field, args.t, args.t + args.p)
        if value != expected:
            raise InvariantViolation(
                f"bars give {value} but the inclusion H_{args.dim}(K_{args.t}) -> "
                f"H_{args.dim}(K_{args.t + args.p}) has rank {expected}"
            )
    _emit(args, [str(value)], {
        "field": field.label, "dim": args.dim, "t": args.t, "p": args.p, "betti": value,
    })
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", default="-",
                        help="input file, '-' for standard input (default)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verify", action="store_true",
                        help="run the independent cross-checks; failures exit with status 2")
    common.add_argument("--strict", action="store_true",
                        help="reject simplices listed twice with different births")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logging on stderr")

    parser = argparse.ArgumentParser(
        prog="snfpers",
        description="Smith Normal Decompositions, simplicial homology and persistence barcodes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snd", parents=[common], help="Smith Normal Decomposition of a matrix")
    p.add_argument("--ring", default=None,
                   help="expected ring: z, q, z<p>, qx or z<p>x (default: the header's)")
    p.set_defaults(func=cmd_snd)

    p = sub.add_parser("homology", parents=[common], help="homology of a simplicial complex")
    p.add_argument("--ring", default="z", help="coefficient ring (default z)")
    p.add_argument("--dim", type=int, default=None, help="only this dimension")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("barcode", parents=[common], help="persistence barcode of a filtration")
    p.add_argument("--field", default="q", help="coefficient field: q or z<p> (default q)")
    p.add_argument("--max-dim", type=int, default=None,
                   help="highest homology dimension (default: the complex's dimension)")
    p.add_argument("--reps", action="store_true", help="print cycle representatives")
    p.set_defaults(func=cmd_barcode)

    p = sub.add_parser("betti", parents=[common], help="p-persistent Betti number")
    p.add_argument("--field", default="q", help="coefficient field: q or z<p> (default q)")
    p.add_argument("--dim", type=int, default=0, help="homology dimension (default 0)")
    p.add_argument("--t", type=int, required=True, help="filtration index")
    p.add_argument("--p", type=int, default=0, help="persistence (default 0)")
    p.set_defaults(func=cmd_betti)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format=_LOG_FORMAT, stream=sys.stderr)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
