"""Intersection lattices of resolutions and their discriminant packages.

Lattices come from three generator families: the negative definite ADE
Cartan matrices, Hirzebruch-Jung chains of a cyclic quotient, and
star-shaped plumbings.  The discriminant package of a nonsingular lattice
is the finite group coker(gram) together with the Q/Z-valued pairing
induced by the inverse gram matrix; the canonical representative of a
pairing value lives in [0, 1), with the geometric-sign representative in
(-1, 0] available for display.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

from .abgroup import FGAbGroup, element_order, group_from_cokernel
from .errors import CapabilityError, ParameterError, SingularMatrixError, ValidationError
from .intmat import IntMatrix, RatMatrix, det, rat_inverse

FORMS_ISOMORPHIC_BOUND = 64


@dataclass(frozen=True)
class IntersectionLattice:
    """A symmetric integer Gram matrix in the geometric (negative definite)
    convention, with optional curve labels."""

    gram: IntMatrix
    labels: tuple = None

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValidationError("gram matrix must be symmetric")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.gram.rows:
                raise ValidationError("label count must match rank")
            object.__setattr__(self, "labels", labels)

    @property
    def rank(self):
        return self.gram.rows

    def determinant(self):
        return det(self.gram)

    def is_negative_definite(self):
        """Leading principal minors alternate in sign, starting negative."""
        for k in range(1, self.rank + 1):
            minor = det(IntMatrix([row[:k] for row in self.gram.to_lists()[:k]]))
            if minor * (-1) ** k <= 0:
                return False
        return True


def cartan_matrix(family, parameter=None):
    """Negative definite geometric intersection matrix of an ADE family.

    ``family`` is one of "A" (parameter k >= 1), "D" (parameter n >= 4)
    or "E8".  D_n is ordered with the central node first, then its three
    neighbours, then the remaining chain; for D_4 this is the order
    (C0, C1, C2, C3).

    >>> cartan_matrix("A", 1).gram.to_lists()
    [[-2]]
    """
    if family == "A":
        k = parameter
        if k is None or k < 1:
            raise ParameterError("A_k requires k >= 1")
        gram = [[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(k)]
                for i in range(k)]
        labels = tuple(f"C{i}" for i in range(1, k + 1))
    elif family == "D":
        n = parameter
        if n is None or n < 4:
            raise ParameterError("D_n requires n >= 4")
        edges = [(0, 1), (0, 2), (0, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        gram = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in edges:
            gram[a][b] = gram[b][a] = 1
        labels = tuple(f"C{i}" for i in range(n))
    elif family == "E8":
        if parameter not in (None, 8):
            raise ParameterError("E8 takes no parameter")
        # Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
        edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        gram = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
        for a, b in edges:
            gram[a - 1][b - 1] = gram[b - 1][a - 1] = 1
        labels = tuple(f"C{i}" for i in range(1, 9))
    else:
        raise ParameterError(f"unknown Cartan family {family!r}")
    return IntersectionLattice(IntMatrix(gram), labels)


def hj_expansion(n, q):
    """Hirzebruch-Jung continued fraction n/q = b1 - 1/(b2 - 1/(...)).

    All b_i >= 2, and the recomposition reproduces n/q exactly.

    >>> hj_expansion(4, 1)
    [4]
    >>> hj_expansion(7, 3)
    [3, 2, 2]
    """
    from math import gcd

    if not (n > q >= 1):
        raise ParameterError("need n > q >= 1")
    if gcd(n, q) != 1:
        raise ParameterError("need gcd(n, q) = 1")
    weights = []
    while q > 0:
        b = -(-n // q)  # ceil(n / q)
        weights.append(b)
        n, q = q, b * q - n
    assert all(b >= 2 for b in weights)
    return weights


def hj_recompose(weights):
    """Evaluate b1 - 1/(b2 - 1/(...)) exactly."""
    value = Fraction(weights[-1])
    for b in reversed(weights[:-1]):
        value = b - 1 / value
    return value


def chain_matrix(weights):
    """Tridiagonal chain plumbing with weights -b_i on the diagonal.

    >>> chain_matrix([4]).gram.to_lists()
    [[-4]]
    """
    weights = list(weights)
    if not weights:
        raise ParameterError("chain needs at least one vertex")
    if any(b < 2 for b in weights):
        raise ParameterError("chain weights must be >= 2")
    r = len(weights)
    gram = [[-weights[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(r)]
            for i in range(r)]
    return IntersectionLattice(IntMatrix(gram), tuple(f"C{i}" for i in range(1, r + 1)))


def star_matrix(central_weight, arm_weights):
    """Star plumbing: one central vertex joined to single-vertex arms.

    >>> star_matrix(1, [2, 3, 11]).gram.to_lists()[0]
    [-1, 1, 1, 1]
    """
    arms = list(arm_weights)
    if central_weight < 1 or any(a < 1 for a in arms):
        raise ParameterError("weights must be >= 1")
    size = 1 + len(arms)
    gram = [[0] * size for _ in range(size)]
    gram[0][0] = -central_weight
    for i, a in enumerate(arms, start=1):
        gram[i][i] = -a
        gram[0][i] = gram[i][0] = 1
    labels = ("C0",) + tuple(f"C{i}" for i in range(1, size))
    return IntersectionLattice(IntMatrix(gram), labels)


def _mod1(x):
    return Fraction(x) - (Fraction(x).numerator // Fraction(x).denominator)


def geometric_rep(value):
    """The (-1, 0] representative of a Q/Z value stored in [0, 1)."""
    value = _mod1(value)
    return value - 1 if value > 0 else value


@dataclass(frozen=True)
class DiscriminantPackage:
    """A finite group with generator representatives and its Q/Z pairing.

    ``form`` is the symmetric Gram matrix of the pairing on the chosen
    generators, entries reduced into [0, 1).  ``generators`` holds
    dual-lattice coset representatives in lattice coordinates (columns);
    it is None for packages built abstractly rather than from a lattice.
    """

    group: FGAbGroup
    form: RatMatrix = None
    generators: RatMatrix = None

    def __post_init__(self):
        if not self.group.is_finite():
            raise ValidationError("discriminant packages are torsion-only")
        k = len(self.group.invariant_factors)
        if k == 0:
            return
        if self.form is None:
            raise ValidationError("nontrivial package needs a form matrix")
        if (self.form.rows, self.form.cols) != (k, k):
            raise ValidationError("form size must match the generator count")
        if not self.form.is_symmetric():
            raise ValidationError("form must be symmetric")
        for i in range(k):
            for j in range(k):
                e = self.form.entry(i, j)
                if not (0 <= e < 1):
                    raise ValidationError("form entries must lie in [0, 1)")
        for i, d in enumerate(self.group.invariant_factors):
            for j in range(k):
                if _mod1(d * self.form.entry(i, j)) != 0:
                    raise ValidationError(
                        f"form is incompatible with generator order {d} at ({i},{j})"
                    )

    def orders(self):
        return self.group.invariant_factors

    def form_value(self, coords_a, coords_b):
        """Pairing of two elements given by generator coordinates."""
        total = Fraction(0)
        for i, a in enumerate(coords_a):
            for j, b in enumerate(coords_b):
                total += a * b * self.form.entry(i, j)
        return _mod1(total)

    def elements(self):
        """All coordinate tuples of the underlying group."""
        return itertools.product(*(range(d) for d in self.orders()))

    def is_nondegenerate(self):
        """Whether x -> q(x, -) is injective (brute force, |E| <= 10^4)."""
        if self.group.torsion_order() > 10_000:
            raise CapabilityError("nondegeneracy check is brute force, order must be <= 10^4")
        k = len(self.orders())
        for coords in self.elements():
            if all(c == 0 for c in coords):
                continue
            unit_rows = [self.form_value(coords, tuple(int(t == j) for t in range(k)))
                         for j in range(k)]
            if all(v == 0 for v in unit_rows):
                return False
        return True


def trivial_package():
    return DiscriminantPackage(FGAbGroup.trivial(), None, None)


def abstract_package(group, form_entries):
    """Package from explicit data, e.g. (Z/8, [[1/8]]); no lattice behind it."""
    entries = [[_mod1(Fraction(x)) for x in row] for row in form_entries]
    return DiscriminantPackage(group, RatMatrix(entries), None)


def coset_order(inverse, column):
    """Order of an integer coset representative in coker(gram).

    The class of x has order lcm of the denominators of gram^-1 x.
    """
    image = inverse.apply(column)
    return lcm(*(f.denominator for f in image)) if image else 1


def discriminant_package(lat, generators=None):
    """Discriminant package (group, pairing) of a nonsingular lattice.

    The group is coker(gram).  Default generator classes come from the
    unimodular factor U of the Smith normal form, paired with the
    nontrivial invariant factors.  ``generators`` may instead supply
    integer coset representatives (an IntMatrix whose columns match the
    nontrivial invariant factors in order); the induced form does not
    depend on the choice of representative within a coset.

    Form entries are g_i^T gram^-1 g_j reduced into [0, 1).

    >>> pkg = discriminant_package(chain_matrix([4]))
    >>> print(pkg.group)
    Z/4
    >>> print(pkg.form)
    [[3/4]]
    """
    gram = lat.gram
    d = det(gram)
    if d == 0:
        raise SingularMatrixError("lattice gram matrix is singular", determinant=0)
    inverse = rat_inverse(gram)
    group, snf_generators = group_from_cokernel(gram)
    if group.is_trivial():
        return trivial_package()

    if generators is None:
        columns = [col for order, col in snf_generators]
        expected = [order for order, col in snf_generators]
    else:
        columns = generators.columns()
        expected = list(group.invariant_factors)
        if len(columns) != len(expected):
            raise ValidationError(
                f"need {len(expected)} generator columns, got {len(columns)}"
            )
        for col, d_i in zip(columns, expected):
            actual = coset_order(inverse, col)
            if actual != d_i:
                raise ValidationError(
                    f"generator has order {actual}, expected invariant factor {d_i}"
                )
        if _subgroup_order(gram, columns) != group.torsion_order():
            raise ValidationError("supplied columns do not generate the cokernel")

    # q(g_i, g_j) = g_i^T gram^-1 g_j, evaluated as (gram^-1 g_i) . g_j.
    duals = [inverse.apply(col) for col in columns]
    form = RatMatrix(
        [[_mod1(sum(a * b for a, b in zip(duals[i], columns[j])))
          for j in range(len(columns))]
         for i in range(len(columns))]
    )
    return DiscriminantPackage(group, form, RatMatrix.from_columns(duals))


def _subgroup_order(gram, columns):
    """Order of the subgroup of coker(gram) generated by the given classes."""
    span = IntMatrix.from_columns(list(columns)).hstack(gram)
    quotient, _ = group_from_cokernel(span)
    return abs(det(gram)) // quotient.torsion_order()


def _pairing_table(pkg):
    """All pairing values of a package, as {(x, y): value} over elements."""
    elements = list(pkg.elements())
    k = len(pkg.orders())
    unit_values = {}
    for x in elements:
        unit_values[x] = [
            pkg.form_value(x, tuple(int(t == j) for t in range(k))) for j in range(k)
        ]
    table = {}
    for x in elements:
        row = unit_values[x]
        for y in elements:
            table[x, y] = _mod1(sum(c * v for c, v in zip(y, row)))
    return elements, table


def forms_isomorphic(p1, p2):
    """Whether two packages are isomorphic as groups with Q/Z pairings.

    Brute force: after isomorphism-invariant screens (group type, the
    multiset of (order, self-pairing) data, the multiset of all pairing
    values), enumerate generator-image assignments consistent with
    element orders and pairing values, pruning on the order of the span
    of each partial assignment.  Only supported up to group order 64.
    """
    for p in (p1, p2):
        if p.group.torsion_order() > FORMS_ISOMORPHIC_BOUND:
            raise CapabilityError(
                f"forms_isomorphic is brute force; group order must be <= {FORMS_ISOMORPHIC_BOUND}"
            )
    if p1.group != p2.group:
        return False
    if p1.group.is_trivial():
        return True

    factors = p1.group.invariant_factors
    k = len(factors)

    elements1, table1 = _pairing_table(p1)
    elements2, table2 = _pairing_table(p2)

    profile1 = sorted(
        (element_order(x, factors), table1[x, x]) for x in elements1
    )
    profile2 = sorted(
        (element_order(x, factors), table2[x, x]) for x in elements2
    )
    if profile1 != profile2:
        return False
    if sorted(table1.values()) != sorted(table2.values()):
        return False

    by_order = {}
    for coords in elements2:
        by_order.setdefault(element_order(coords, factors), []).append(coords)

    unit = [tuple(int(t == j) for t in range(k)) for j in range(k)]
    wanted = [[table1[unit[i], unit[j]] for j in range(k)] for i in range(k)]

    def extend(i, chosen, span):
        if i == k:
            return True
        span_target = prod(factors[: i + 1])
        for cand in by_order.get(factors[i], ()):
            if table2[cand, cand] != wanted[i][i]:
                continue
            if any(table2[chosen[j], cand] != wanted[j][i] for j in range(i)):
                continue
            # an injective map sends the first i+1 generators onto a
            # subgroup of order d_1 * ... * d_{i+1}; prune otherwise
            new_span = _extend_span(span, cand, factors)
            if len(new_span) != span_target:
                continue
            if extend(i + 1, chosen + [cand], new_span):
                return True
        return False

    zero = tuple([0] * k)
    return extend(0, [], {zero})


def _extend_span(span, generator, factors):
    """The subgroup generated by an existing span and one more element."""
    seen = set(span)
    frontier = list(span)
    while frontier:
        current = frontier.pop()
        nxt = tuple((a + b) % d for a, b, d in zip(current, generator, factors))
        if nxt not in seen:
            seen.add(nxt)
            frontier.append(nxt)
    return seen
