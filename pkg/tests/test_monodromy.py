"""Coxeter elements, variation cokernels, Milnor numbers."""

import itertools

import pytest

from torsiontraj.abgroup import FGAbGroup
from torsiontraj.errors import ParameterError
from torsiontraj.intmat import IntMatrix, char_poly, snf
from torsiontraj.monodromy import (
    coxeter_element,
    milnor_number,
    odp_package,
    simple_reflection,
    variation_cokernel,
)

D4_COXETER = IntMatrix([[2, -1, -1, -1], [1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1]])


def positive_cartan(family, parameter=None):
    from torsiontraj.lattice import cartan_matrix

    if family == "A":
        return -1 * cartan_matrix("A", parameter).gram
    if family == "D4":
        return -1 * cartan_matrix("D", 4).gram
    return -1 * cartan_matrix("E8").gram


def test_coxeter_a1():
    assert coxeter_element("A", 1).to_lists() == [[-1]]


def test_coxeter_d4_matrix():
    assert coxeter_element("D4") == D4_COXETER


def test_coxeter_ak_char_poly():
    for k in range(1, 13):
        # t^k + t^{k-1} + ... + 1
        assert char_poly(coxeter_element("A", k)) == (1,) * (k + 1)


def test_variation_a1():
    result = variation_cokernel(IntMatrix([[-1]]))
    assert result.variation.to_lists() == [[-2]]
    assert result.cokernel == FGAbGroup.cyclic(2)
    assert result.det_abs == 2


def test_variation_d4():
    result = variation_cokernel(coxeter_element("D4"))
    assert snf(result.variation).d.diagonal() == (1, 1, 2, 2)
    assert result.cokernel == FGAbGroup.from_orders([2, 2])
    assert result.det_abs == 4


def test_variation_identity():
    result = variation_cokernel(IntMatrix.identity(1))
    assert result.cokernel == FGAbGroup.free(1)
    assert result.torsion().is_trivial()
    assert result.det_abs is None


def test_variation_e8():
    result = variation_cokernel(coxeter_element("E8"))
    assert result.det_abs == 1
    assert result.torsion().is_trivial()


def test_ak_variation_family():
    for k in range(1, 13):
        result = variation_cokernel(coxeter_element("A", k))
        assert result.det_abs == k + 1
        assert snf(result.variation).d.diagonal() == (1,) * (k - 1) + (k + 1,)
        assert result.cokernel == FGAbGroup.cyclic(k + 1)


def test_coxeter_preserves_cartan_form():
    cases = [("A", 4, None), ("A", 7, None), ("D4", None, None), ("E8", None, None)]
    for family, parameter, _ in cases:
        cartan = positive_cartan(family, parameter)
        n = cartan.rows
        for order in ([list(range(n))] + [list(reversed(range(n)))]):
            t = coxeter_element(family, parameter, node_order=order)
            assert t.transpose() @ cartan @ t == cartan


def test_coxeter_char_poly_order_invariant():
    reference = char_poly(coxeter_element("D4"))
    for order in itertools.permutations(range(4)):
        t = coxeter_element("D4", node_order=order)
        assert char_poly(t) == reference
        assert snf(t - IntMatrix.identity(4)).d.diagonal() == (1, 1, 2, 2)


def test_coxeter_validation():
    with pytest.raises(ParameterError):
        coxeter_element("A")
    with pytest.raises(ParameterError):
        coxeter_element("D4", node_order=[0, 1, 2])
    with pytest.raises(ParameterError):
        coxeter_element("B", 2)


def test_simple_reflection_involution():
    cartan = positive_cartan("D4")
    for i in range(4):
        s = simple_reflection(cartan, i)
        assert s @ s == IntMatrix.identity(4)


def test_milnor_numbers():
    assert milnor_number("BP", (2, 3, 11)) == 20
    assert milnor_number("D4") == 4
    assert milnor_number("BP", (2, 2, 2)) == 1
    assert milnor_number("A", 7) == 7
    assert milnor_number("E8") == 8
    with pytest.raises(ParameterError):
        milnor_number("BP", (1, 2, 3))
    with pytest.raises(ParameterError):
        milnor_number("A", 0)


def test_odp_package():
    result, link = odp_package()
    assert result.torsion().is_trivial()
    assert result.det_abs is None
    assert result.variation.to_lists() == [[0]]
    from torsiontraj.links import link_profile

    assert link_profile(link).is_torsion_free()
