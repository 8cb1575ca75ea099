"""Milnor monodromy via Coxeter elements of ADE root lattices.

The monodromy of an ADE hypersurface singularity is the Coxeter element
of the corresponding root system, realized on the simple-root basis of
the positive Cartan matrix by s_i(alpha_j) = alpha_j - A_ij alpha_i.
The variation map T - id has a finite cokernel whose torsion recovers
the local discriminant group; the ordinary double point in dimension
three instead has T = id with free cokernel.
"""

from dataclasses import dataclass

from .abgroup import FGAbGroup, group_from_cokernel
from .errors import ParameterError
from .intmat import IntMatrix, det
from .lattice import cartan_matrix
from .links import SphereProduct

MONODROMY_FAMILIES = ("A", "D4", "E8")


def _positive_cartan(family, parameter):
    if family == "A":
        lat = cartan_matrix("A", parameter)
    elif family == "D4":
        lat = cartan_matrix("D", 4)
    elif family == "E8":
        lat = cartan_matrix("E8")
    else:
        raise ParameterError(
            f"monodromy families are {MONODROMY_FAMILIES}, got {family!r}"
        )
    return -1 * lat.gram


def simple_reflection(cartan, i):
    """Matrix of s_i on the simple-root basis: alpha_j -> alpha_j - A_ij alpha_i."""
    n = cartan.rows
    rows = IntMatrix.identity(n).to_lists()
    for j in range(n):
        rows[i][j] -= cartan.entry(i, j)
    return IntMatrix(rows)


def coxeter_element(family, parameter=None, node_order=None):
    """Product of all simple reflections, in the given node order.

    The default order is the natural one: 1..k for A_k read along the
    chain, and the central node first for D_4 (the order in which the
    product s_0 s_1 s_2 s_3 is written; the rightmost factor acts first).

    >>> coxeter_element("A", 1).to_lists()
    [[-1]]
    """
    cartan = _positive_cartan(family, parameter)
    n = cartan.rows
    if node_order is None:
        node_order = range(n)
    order = list(node_order)
    if sorted(order) != list(range(n)):
        raise ParameterError(f"node order must be a permutation of 0..{n - 1}")
    result = IntMatrix.identity(n)
    for i in order:
        result = result @ simple_reflection(cartan, i)
    return result


@dataclass(frozen=True)
class VariationResult:
    """The variation map T - id with its cokernel data.

    ``det_abs`` is |det(T - id)| when the map is rationally invertible
    and None when it is singular (the zero-flag case of the ordinary
    double point).
    """

    matrix_t: IntMatrix
    variation: IntMatrix
    cokernel: FGAbGroup
    det_abs: int

    def torsion(self):
        return self.cokernel.torsion()


def variation_cokernel(t_matrix):
    """Cokernel of T - id together with the determinant refinement.

    >>> print(variation_cokernel(IntMatrix([[-1]])).cokernel)
    Z/2
    """
    if not t_matrix.is_square():
        raise ParameterError("monodromy matrix must be square")
    variation = t_matrix - IntMatrix.identity(t_matrix.rows)
    d = det(variation)
    cokernel, _ = group_from_cokernel(variation)
    return VariationResult(t_matrix, variation, cokernel, abs(d) if d != 0 else None)


def milnor_number(family, parameter=None):
    """Milnor number: k for A_k, 4 for D_4, 8 for E_8, and
    (a-1)(b-1)(c-1) for the Brieskorn-Pham singularity x^a + y^b + z^c.

    >>> milnor_number("BP", (2, 3, 11))
    20
    """
    if family == "A":
        if parameter is None or parameter < 1:
            raise ParameterError("A_k requires k >= 1")
        return parameter
    if family == "D4":
        return 4
    if family == "E8":
        return 8
    if family == "BP":
        try:
            a, b, c = parameter
        except (TypeError, ValueError):
            raise ParameterError("Brieskorn-Pham exponents must be a triple") from None
        if min(a, b, c) < 2:
            raise ParameterError("Brieskorn-Pham exponents must be >= 2")
        return (a - 1) * (b - 1) * (c - 1)
    raise ParameterError(f"unknown singularity family {family!r}")


def odp_package():
    """The threefold ordinary double point: T = id on Z, so the
    variation map is zero, the cokernel is free of rank one, and the
    link is S^2 x S^3."""
    t = IntMatrix.identity(1)
    result = variation_cokernel(t)
    assert result.det_abs is None and result.cokernel == FGAbGroup.free(1)
    return result, SphereProduct()
