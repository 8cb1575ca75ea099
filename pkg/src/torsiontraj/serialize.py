"""Rendering and parsing: JSON schemas, Markdown tables, CSV.

JSON conventions: rationals are "num/den" strings with the canonical
[0, 1) representative; groups are {"free_rank": n, "invariant_factors":
[...]}; matrices are {"matrix": [[...]]}.  Emission uses sorted keys and
two-space indentation so that parse-then-re-render is byte-identical.
"""

import csv
import io
import json
from fractions import Fraction

from .abgroup import FGAbGroup
from .errors import ValidationError
from .intmat import IntMatrix, RatMatrix
from .lattice import DiscriminantPackage, IntersectionLattice, geometric_rep
from .links import SpaceProfile
from .trajectory import MarkerRow

TABLE_HEADERS = ("Example", "E", "q", "Local", "Supp.", "Global image", "Br/res.", "Q")


def fraction_str(value):
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text):
    num, _, den = str(text).partition("/")
    return Fraction(int(num), int(den) if den else 1)


def fraction_display(value):
    """Markdown form: canonical value with the geometric-sign alias."""
    f = Fraction(value)
    geo = geometric_rep(f)
    canonical = str(f)
    if geo != f:
        return f"{canonical} (= {geo})"
    return canonical


def group_to_json(group):
    return {"free_rank": group.free_rank, "invariant_factors": list(group.invariant_factors)}


def group_from_json(data):
    return FGAbGroup(int(data["free_rank"]), tuple(data["invariant_factors"]))


def matrix_to_json(matrix):
    return {"matrix": matrix.to_lists()}


def int_matrix_from_json(data):
    if "matrix" not in data:
        raise ValidationError('matrix literal must have a "matrix" key')
    return IntMatrix(data["matrix"])


def rat_matrix_to_json(matrix):
    return {"matrix": [[fraction_str(x) for x in row] for row in matrix.to_lists()]}


def lattice_to_json(lat):
    data = {"gram": lat.gram.to_lists()}
    if lat.labels is not None:
        data["labels"] = list(lat.labels)
    return data


def lattice_from_json(data):
    # a bare matrix literal is accepted wherever a lattice is expected
    gram = data.get("gram", data.get("matrix"))
    if gram is None:
        raise ValidationError('lattice literal must have a "gram" (or "matrix") key')
    return IntersectionLattice(IntMatrix(gram), data.get("labels"))


def package_to_json(pkg):
    data = {"group": group_to_json(pkg.group)}
    if pkg.form is not None:
        data["form"] = rat_matrix_to_json(pkg.form)["matrix"]
    if pkg.generators is not None:
        data["generators"] = rat_matrix_to_json(pkg.generators)["matrix"]
    return data


def package_from_json(data):
    group = group_from_json(data["group"])
    form = None
    if "form" in data:
        form = RatMatrix([[parse_fraction(x) for x in row] for row in data["form"]])
    generators = None
    if "generators" in data:
        generators = RatMatrix([[parse_fraction(x) for x in row] for row in data["generators"]])
    return DiscriminantPackage(group, form, generators)


def profile_to_json(profile):
    data = {
        "name": profile.name,
        "cohomology": {str(k): group_to_json(g) for k, g in profile.cohomology.items()},
    }
    if profile.hodge_h0q is not None:
        data["hodge_h0q"] = {str(k): v for k, v in profile.hodge_h0q.items()}
    return data


def profile_from_json(data):
    hodge = data.get("hodge_h0q")
    return SpaceProfile(
        data["name"],
        {int(k): group_from_json(g) for k, g in data["cohomology"].items()},
        {int(k): int(v) for k, v in hodge.items()} if hodge is not None else None,
    )


def degree_table_to_json(table):
    return {str(k): group_to_json(g) for k, g in sorted(table.items())}


def report_to_json(report):
    return {
        "degree": report.degree,
        "summands": [
            {"a": a, "b": b, "kind": "tensor", "group": group_to_json(g)}
            for a, b, g in report.summands
        ],
        "tor_terms": [
            {"a": a, "b": b, "kind": "tor", "group": group_to_json(g)}
            for a, b, g in report.tor_terms
        ],
        "total": group_to_json(report.total),
        "total_torsion": group_to_json(report.total_torsion),
    }


def form_display(form):
    """Markdown rendering of a pairing matrix; scalars drop the brackets."""
    if form is None:
        return "none"
    if form.rows == 1:
        return fraction_display(form.entry(0, 0))
    rows = []
    for row in form.to_lists():
        rows.append("[" + ", ".join(str(x) for x in row) + "]")
    return "[" + ", ".join(rows) + "]"


def _station_text(row):
    checks = row.realizations
    present = len(checks.stations)
    if row.package is None:
        return "torsion stations vanish; free vanishing cycle exists"
    if row.package.group.is_trivial():
        return "all vanish"
    if checks.agree and "not-applicable" in checks.notes.values():
        return f"{present} agree; monodromy n/a"
    if checks.agree:
        return "six agree"
    return "stations disagree"


def row_cells(row):
    """The eight table columns of a trajectory or marker row."""
    if isinstance(row, MarkerRow):
        return (
            row.example,
            row.e_text,
            row.q_text,
            row.local_text,
            row.support_text,
            row.global_image_note,
            row.brauer_text,
            str(row.rational_death),
        )
    group = row.group()
    if group is None:
        e_text = "0 (no finite torsion)"
        q_text = "none"
    elif group.is_trivial():
        e_text = "0"
        q_text = "0"
    else:
        e_text = str(group)
        q_text = form_display(row.package.form)
    support = f"deg. {row.support_degree}" if row.support_degree is not None else "none"
    brauer = {
        "local-undefined": "not local in isolated germ",
        "global-benchmark": "global Brauer/unramified benchmark",
    }.get(row.brauer_residue_status, row.brauer_residue_status)
    global_image = row.global_image_note
    if row.shadow_note:
        global_image = f"{global_image}; {row.shadow_note}"
    return (
        row.example,
        e_text,
        q_text,
        _station_text(row),
        support,
        global_image,
        brauer,
        str(row.rational_death),
    )


def row_to_json(row):
    if isinstance(row, MarkerRow):
        return {
            "example": row.example,
            "kind": "marker",
            "E": row.e_text,
            "q": row.q_text,
            "local": row.local_text,
            "support": row.support_text,
            "global_image": row.global_image_note,
            "brauer_residue_status": row.brauer_residue_status,
            "rational_death": row.rational_death,
        }
    data = {
        "example": row.example,
        "kind": "computed",
        "package": package_to_json(row.package) if row.package is not None else None,
        "realizations": {
            "stations": {k: group_to_json(g) for k, g in row.realizations.stations.items()},
            "notes": dict(row.realizations.notes),
            "agree": row.realizations.agree,
        },
        "support_degree": row.support_degree,
        "transport_note": row.transport_note,
        "global_image": row.global_image_note,
        "brauer_residue_status": row.brauer_residue_status,
        "rational_death": row.rational_death,
    }
    if row.shadow_note:
        data["shadow_note"] = row.shadow_note
    return data


def to_json_text(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def markdown_table(headers, rows):
    lines = ["| " + " | ".join(headers) + " |",
             "| " + " | ".join("---" for _ in headers) + " |"]
    for cells in rows:
        lines.append("| " + " | ".join(str(c) for c in cells) + " |")
    return "\n".join(lines) + "\n"


def csv_table(headers, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    for cells in rows:
        writer.writerow(list(cells))
    return buffer.getvalue()
