"""Command line surface: batch evaluation of bounds, table emission,
packing construction, contact/separability/volume reports and the
cluster search, with reproducible seeds.

Exit codes: 0 success, 2 usage or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

_BOUND_KINDS = {
    "c2": ("exact", "C2"),
    "c2-parallelogram": ("exact", "C2_PARALLELOGRAM"),
    "cz2": ("exact", "CZ2"),
    "csep2": ("exact", "CSEP2"),
    "cstar2": ("exact", "CSTAR2"),
    "c3-general": ("upper", "C3_GENERAL"),
    "c3-fcc": ("upper", "C3_FCC"),
    "csep3": ("upper", "CSEP3"),
    "czd": ("upper", "CZD"),
    "csepd": ("upper", "CSEPD"),
    "universal-translates": ("upper", "UNIVERSAL_TRANSLATES"),
    "kissing-based": ("upper", "KISSING_BASED"),
    "ks-noncongruent": ("upper", "KS_NONCONGRUENT"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contactlab",
        description="Contact numbers of sphere packings: formulas, bounds, "
                    "constructions, separability and cluster search.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="evaluate a bound or exact formula")
    p.add_argument("--kind", required=True, choices=sorted(_BOUND_KINDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=3,
                   help="dimension for d-parametric bounds (default 3)")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("table1", help="CSV table of 3-space contact bounds")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("construct", help="build a named packing")
    p.add_argument("name", choices=("hex", "fcc-bipyramid", "quasi-square",
                                    "quasi-cube"))
    p.add_argument("--n", type=int, help="ball/cell count")
    p.add_argument("--k", type=int, help="layer parameter for fcc-bipyramid")
    p.add_argument("--out", help="packing JSON output path (default stdout)")

    p = sub.add_parser("graph", help="contact graph of a packing file")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("separable", help="total separability report")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("enumerate", help="max-contact cluster search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("volume", help="Monte Carlo outer parallel volume")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lam", type=float, required=True,
                   help="outer radius as a fraction of the ball radius")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(doc: dict, out=None) -> None:
    text = json.dumps(doc, indent=1, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_bounds(args) -> int:
    from . import bounds
    family, kind = _BOUND_KINDS[args.kind]
    if family == "exact":
        report = bounds.exact_formula(kind, args.n)
    else:
        report = bounds.upper_bound(kind, args.n, args.d)
    if args.format == "csv":
        print("kind,n,d,value_real,value_int,direction")
        print(f"{args.kind},{report.n},{report.d},{report.value_real!r},"
              f"{report.value_int},{report.direction}")
    else:
        _emit(report.to_json())
    return 0


def _cmd_table1(args) -> int:
    from . import bounds
    if args.n_to > 10 ** 6:
        raise ValueError("table range capped at n_to <= 10^6")
    csv = bounds.table1_csv(bounds.table1(args.n_from, args.n_to))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def _cmd_construct(args) -> int:
    from . import bounds, constructors, digital
    from .geometry import contact_graph

    if args.name == "hex":
        if args.n is None:
            raise ValueError("construct hex requires --n")
        packing = constructors.hex_spiral(args.n)
        bound = ("c2", bounds.exact_formula("C2", max(args.n, 2)).value_int)
    elif args.name == "fcc-bipyramid":
        if args.k is None:
            raise ValueError("construct fcc-bipyramid requires --k")
        packing = constructors.fcc_bipyramid(args.k)
        bound = ("fcc-lower", bounds.fcc_octahedral_lower(args.k).contacts)
    elif args.name == "quasi-square":
        if args.n is None:
            raise ValueError("construct quasi-square requires --n")
        packing = digital.to_digital_packing(digital.quasi_square(args.n))
        packing.construction = {"name": "quasi-square", "params": {"n": args.n}}
        bound = ("cz2", bounds.exact_formula("CZ2", max(args.n, 2)).value_int)
    else:
        if args.n is None:
            raise ValueError("construct quasi-cube requires --n")
        packing = digital.to_digital_packing(digital.quasi_cube(args.n))
        packing.construction = {"name": "quasi-cube", "params": {"n": args.n}}
        bound = ("czd", bounds.upper_bound("CZD", max(args.n, 2), 3).value_int)
    contacts = contact_graph(packing).contact_count
    if args.out:
        packing.save(args.out)
        print(f"n={packing.n} contacts={contacts} {bound[0]}={bound[1]}")
    else:
        _emit(packing.to_json())
        print(f"n={packing.n} contacts={contacts} {bound[0]}={bound[1]}",
              file=sys.stderr)
    return 0


def _load_packing(path):
    from .geometry import Packing
    return Packing.load(path)


def _cmd_graph(args) -> int:
    from .geometry import contact_graph
    _emit(contact_graph(_load_packing(args.infile)).to_json())
    return 0


def _cmd_separable(args) -> int:
    from .separability import total_separability
    _emit(total_separability(_load_packing(args.infile)).to_json())
    return 0


def _cmd_enumerate(args) -> int:
    from .cluster import SolverConfig, max_contact_search
    cfg = SolverConfig(restarts=args.restarts, seed=args.seed,
                       workers=args.workers)
    _emit(max_contact_search(args.n, cfg).to_json())
    return 0


def _cmd_volume(args) -> int:
    from .geometry import parallel_volume_estimate
    packing = _load_packing(args.infile)
    est = parallel_volume_estimate(packing, args.lam, args.samples, args.seed)
    _emit({"estimate": est.estimate, "stderr": est.stderr,
           "samples": args.samples, "seed": args.seed, "lam": args.lam})
    return 0


_HANDLERS = {
    "bounds": _cmd_bounds,
    "table1": _cmd_table1,
    "construct": _cmd_construct,
    "graph": _cmd_graph,
    "separable": _cmd_separable,
    "enumerate": _cmd_enumerate,
    "volume": _cmd_volume,
}


def main(argv=None) -> int:
    level = os.environ.get("CONTACTLAB_LOG")
    if level:
        logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
