"""JSON round-trips, Markdown and CSV rendering."""

import json
from fractions import Fraction

from torsiontraj import serialize
from torsiontraj.abgroup import FGAbGroup
from torsiontraj.lattice import cartan_matrix, discriminant_package
from torsiontraj.links import lens_profile
from torsiontraj.products import builtin_profile, product_cohomology
from torsiontraj.trajectory import SingularityModel, trajectory_row, trajectory_table


def test_fraction_strings():
    assert serialize.fraction_str(Fraction(3, 4)) == "3/4"
    assert serialize.fraction_str(0) == "0/1"
    assert serialize.parse_fraction("3/4") == Fraction(3, 4)
    assert serialize.parse_fraction("2") == 2
    assert serialize.fraction_display(Fraction(3, 4)) == "3/4 (= -1/4)"
    assert serialize.fraction_display(Fraction(0)) == "0"


def test_group_roundtrip():
    for group in (FGAbGroup.trivial(), FGAbGroup(2, (2, 4)), FGAbGroup.cyclic(5)):
        assert serialize.group_from_json(serialize.group_to_json(group)) == group


def test_lattice_and_package_roundtrip():
    lat = cartan_matrix("D", 4)
    data = serialize.lattice_to_json(lat)
    assert serialize.lattice_from_json(data) == lat
    pkg = discriminant_package(lat)
    again = serialize.package_from_json(serialize.package_to_json(pkg))
    assert again.group == pkg.group
    assert again.form == pkg.form
    assert again.generators == pkg.generators


def test_profile_roundtrip():
    for profile in (lens_profile(4, 1), builtin_profile("enriques")):
        data = serialize.profile_to_json(profile)
        again = serialize.profile_from_json(data)
        assert again == profile


def test_json_emission_is_stable():
    row = trajectory_row(SingularityModel.ak(3))
    text = serialize.to_json_text(serialize.row_to_json(row))
    # parsing and re-rendering is byte-identical
    assert serialize.to_json_text(json.loads(text)) == text


def test_report_json():
    report = product_cohomology(
        builtin_profile("enriques"), builtin_profile("curve", genus=2), 4
    )
    data = serialize.report_to_json(report)
    kinds = {entry["kind"] for entry in data["summands"]}
    assert kinds == {"tensor"}
    assert data["total_torsion"] == {"free_rank": 0, "invariant_factors": [2, 2, 2, 2, 2]}


def test_markdown_headers():
    rows = trajectory_table()
    text = serialize.markdown_table(
        serialize.TABLE_HEADERS, [serialize.row_cells(r) for r in rows]
    )
    header = text.splitlines()[0]
    assert header == "| Example | E | q | Local | Supp. | Global image | Br/res. | Q |"
    assert len(text.splitlines()) == 2 + 9


def test_csv_rendering():
    rows = trajectory_table()
    text = serialize.csv_table(
        serialize.TABLE_HEADERS, [serialize.row_cells(r) for r in rows]
    )
    lines = text.splitlines()
    assert lines[0].startswith("Example,E,q,")
    assert len(lines) == 10


def test_row_cells_values():
    cells = serialize.row_cells(trajectory_row(SingularityModel.ak(1)))
    assert cells[0] == "A_1 surface"
    assert cells[1] == "Z/2"
    assert cells[2] == "1/2 (= -1/2)"
    assert cells[3] == "six agree"
    assert cells[4] == "deg. 2"
    assert cells[7] == "0"

    coble = serialize.row_cells(trajectory_row(SingularityModel.cyclic_quotient(4)))
    assert coble[2] == "3/4 (= -1/4)"
    assert "monodromy n/a" in coble[3]
