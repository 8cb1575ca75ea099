"""Command-line front end.

One subcommand per station: ``singularity`` for trajectory rows,
``link`` for link profiles, ``lattice`` for discriminant packages,
``product`` for Kunneth/Brauer torsion of Enriques x curve, ``transport``
for kernels of relation maps, and ``table`` for the full trajectory
table.  Output is Markdown by default; ``--format json`` and
``--format csv`` are available everywhere, ``--out`` writes to a file.

Exit codes: 0 on success, 1 on computation refusals (gate failures,
capability limits), 2 on usage errors.
"""

import argparse
import json
import sys

from . import serialize
from .abgroup import FGAbGroup, FinAbHom
from .errors import (
    CapabilityError,
    ParameterError,
    TorsionTrajError,
    ValidationError,
)
from .intmat import IntMatrix
from .lattice import discriminant_package
from .links import LensSpace, PlumbingBoundary, Seifert, link_profile
from .products import GateRefusal, brauer_comparison, builtin_profile, product_cohomology, product_profile
from .serialize import TABLE_HEADERS
from .trajectory import (
    SingularityModel,
    TransportProblem,
    trajectory_row,
    trajectory_table,
    transport_kernel,
)

USAGE_EXIT = 2
REFUSAL_EXIT = 1


def _load_json(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _kv_markdown(pairs):
    return serialize.markdown_table(("Field", "Value"), pairs)


def _model_from_args(args):
    which = args.which
    if which == "a1":
        return SingularityModel.ak(1)
    if which == "ak":
        if args.k is None:
            raise ParameterError("ak requires --k")
        return SingularityModel.ak(args.k)
    if which == "d4":
        return SingularityModel.d4()
    if which == "e8":
        return SingularityModel.e8()
    if which == "brieskorn":
        a, b, c = (args.params + [2, 3, 11])[:3] if args.params else (2, 3, 11)
        return SingularityModel.brieskorn(a, b, c)
    if which == "quotient":
        if len(args.params) != 2:
            raise ParameterError("quotient requires N Q (with Q = 1)")
        return SingularityModel.cyclic_quotient(args.params[0], args.params[1])
    if which == "odp":
        return SingularityModel.odp()
    raise ParameterError(f"unknown singularity {which!r}")


def cmd_singularity(args):
    row = trajectory_row(_model_from_args(args))
    if args.format == "json":
        return serialize.to_json_text(serialize.row_to_json(row))
    cells = serialize.row_cells(row)
    if args.format == "csv":
        return serialize.csv_table(TABLE_HEADERS, [cells])
    return serialize.markdown_table(TABLE_HEADERS, [cells])


def _link_model_from_args(args):
    if args.link_kind == "lens":
        if len(args.params) != 2:
            raise ParameterError("lens requires two integers P Q")
        return LensSpace(args.params[0], args.params[1])
    if args.link_kind == "seifert":
        if args.b is None or not args.arms:
            raise ParameterError("seifert requires --b and --arms \"a1,b1;a2,b2;...\"")
        arms = []
        for chunk in args.arms.split(";"):
            alpha, beta = chunk.split(",")
            arms.append((int(alpha), int(beta)))
        return Seifert(args.b, tuple(arms))
    if args.link_kind == "plumbing":
        if not args.gram:
            raise ParameterError("plumbing requires --gram FILE")
        return PlumbingBoundary(serialize.lattice_from_json(_load_json(args.gram)))
    raise ParameterError(f"unknown link kind {args.link_kind!r}")


def cmd_link(args):
    profile = link_profile(_link_model_from_args(args))
    if args.format == "json":
        return serialize.to_json_text(serialize.profile_to_json(profile))
    rows = [(str(k), str(g)) for k, g in sorted(profile.cohomology.items())]
    if args.format == "csv":
        return serialize.csv_table(("degree", "group"), rows)
    return f"Profile: {profile.name}\n\n" + serialize.markdown_table(("degree", "group"), rows)


def cmd_lattice(args):
    lat = serialize.lattice_from_json(_load_json(args.gram))
    pkg = discriminant_package(lat)
    if args.format == "json":
        return serialize.to_json_text(serialize.package_to_json(pkg))
    rows = [
        ("discriminant group", str(pkg.group)),
        ("form", serialize.form_display(pkg.form)),
        ("|det(gram)|", str(abs(lat.determinant()))),
    ]
    if args.format == "csv":
        return serialize.csv_table(("field", "value"), rows)
    return _kv_markdown(rows)


def cmd_product(args):
    surface = builtin_profile("enriques")
    curve = builtin_profile("curve", genus=args.genus)
    report = product_cohomology(surface, curve, args.degree)
    full = product_profile(surface, curve)
    brauer = brauer_comparison(full)
    if isinstance(brauer, GateRefusal) and args.format != "json":
        raise CapabilityError(str(brauer))
    if args.format == "json":
        data = serialize.report_to_json(report)
        data["h02"] = full.h0q(2)
        data["brauer"] = (
            serialize.group_to_json(brauer)
            if not isinstance(brauer, GateRefusal)
            else {"refused": brauer.failed_hypothesis}
        )
        return serialize.to_json_text(data)
    rows = [
        (f"H^{args.degree} total", str(report.total)),
        (f"H^{args.degree} torsion", str(report.total_torsion)),
        ("h^(0,2)", str(full.h0q(2))),
        ("Brauer group", str(brauer)),
    ]
    for a, b, g in report.summands:
        rows.append((f"H^{a} (x) H^{b}", str(g)))
    for a, b, g in report.tor_terms:
        rows.append((f"Tor(H^{a}, H^{b})", str(g)))
    if args.format == "csv":
        return serialize.csv_table(("field", "value"), rows)
    return _kv_markdown(rows)


def cmd_transport(args):
    packages = [serialize.group_from_json(g) for g in _load_json(args.packages)]
    relation_data = _load_json(args.relations)
    source = FGAbGroup.trivial().direct_sum(*packages)
    target = serialize.group_from_json(relation_data["target"])
    matrix = IntMatrix(relation_data["matrix"])
    relation = FinAbHom(source, target, matrix)
    kernel = transport_kernel(TransportProblem(tuple(packages), relation))
    if args.format == "json":
        return serialize.to_json_text({"kernel": serialize.group_to_json(kernel)})
    rows = [("kernel", str(kernel))]
    if args.format == "csv":
        return serialize.csv_table(("field", "value"), rows)
    return _kv_markdown(rows)


def cmd_table(args):
    if args.what != "trajectory":
        raise ParameterError("only 'table trajectory' is available")
    rows = trajectory_table()
    if args.format == "json":
        return serialize.to_json_text([serialize.row_to_json(r) for r in rows])
    cells = [serialize.row_cells(r) for r in rows]
    if args.format == "csv":
        return serialize.csv_table(TABLE_HEADERS, cells)
    return serialize.markdown_table(TABLE_HEADERS, cells)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="torsiontraj",
        description="Exact torsion invariants of surface singularities",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("md", "json", "csv"), default="md")
    common.add_argument("--out", help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    sing = add_parser("singularity", help="trajectory row of a local model")
    sing.add_argument("which", choices=("a1", "ak", "d4", "e8", "brieskorn", "quotient", "odp"))
    sing.add_argument("params", nargs="*", type=int)
    sing.add_argument("--k", type=int, help="index k for the A_k family")
    sing.set_defaults(func=cmd_singularity)

    link = add_parser("link", help="cohomology profile of a link")
    link.add_argument("link_kind", choices=("lens", "seifert", "plumbing"))
    link.add_argument("params", nargs="*", type=int)
    link.add_argument("--b", type=int, help="Seifert base Euler term")
    link.add_argument("--arms", help='Seifert arms as "a1,b1;a2,b2;..."')
    link.add_argument("--gram", help="JSON file with a lattice literal")
    link.set_defaults(func=cmd_link)

    lattice_cmd = add_parser("lattice", help="discriminant package of a gram matrix")
    lattice_cmd.add_argument("--gram", required=True, help="JSON file with a lattice literal")
    lattice_cmd.set_defaults(func=cmd_lattice)

    product = add_parser("product", help="Kunneth torsion of Enriques x curve")
    product.add_argument("surface", choices=("enriques",))
    product.add_argument("--genus", type=int, required=True)
    product.add_argument("--degree", type=int, default=4)
    product.set_defaults(func=cmd_product)

    transport = add_parser("transport", help="kernel of a transport relation map")
    transport.add_argument("--packages", required=True, help="JSON list of group literals")
    transport.add_argument("--relations", required=True,
                           help='JSON {"target": group, "matrix": [[...]]}')
    transport.set_defaults(func=cmd_transport)

    table = add_parser("table", help="the full trajectory table")
    table.add_argument("what", choices=("trajectory",))
    table.add_argument("--all", action="store_true", help="include every built-in row")
    table.set_defaults(func=cmd_table)

    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code not in (0, None) else 0
    try:
        text = args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (ParameterError, ValidationError, json.JSONDecodeError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (CapabilityError, TorsionTrajError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUSAL_EXIT
    _emit(args, text)
    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
