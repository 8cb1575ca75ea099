"""Cohomology profiles of singularity links.

A profile is a finitely supported map degree -> group; degrees outside
the support are the zero group.  Built-in links: lens spaces L(p, q),
Seifert fibered spaces over S^2 with finite first homology, boundaries of
negative definite plumbings, and S^2 x S^3 (the threefold node link).

All groups are obtained through the universal coefficient theorem from
homology, so torsion lands one degree up from where it is born.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .abgroup import (
    FGAbGroup,
    ext1_to_Z,
    ext_into_cyclic,
    group_from_cokernel,
    hom_into_cyclic,
    hom_to_Z,
)
from .errors import CapabilityError, ParameterError
from .intmat import IntMatrix
from .lattice import IntersectionLattice


@dataclass(frozen=True)
class SpaceProfile:
    """Per-degree integral cohomology, plus an optional h^{0,q} column."""

    name: str
    cohomology: dict
    hodge_h0q: dict = None

    def __post_init__(self):
        clean = {int(k): g for k, g in self.cohomology.items() if not g.is_trivial()}
        object.__setattr__(self, "cohomology", clean)
        if self.hodge_h0q is not None:
            hodge = {int(k): int(v) for k, v in self.hodge_h0q.items() if v}
            object.__setattr__(self, "hodge_h0q", hodge)

    def group(self, degree):
        return self.cohomology.get(degree, FGAbGroup.trivial())

    def degrees(self):
        return sorted(self.cohomology)

    def max_degree(self):
        return max(self.cohomology, default=0)

    def torsion(self, degree):
        return self.group(degree).torsion()

    def is_torsion_free(self):
        return all(g.is_free() for g in self.cohomology.values())

    def h0q(self, q):
        if self.hodge_h0q is None:
            raise CapabilityError(f"profile {self.name!r} carries no Hodge data")
        return self.hodge_h0q.get(q, 0)


# -- link models ------------------------------------------------------------

@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or gcd(self.p, self.q) != 1:
            raise ParameterError("lens space needs p >= 2 and gcd(p, q) = 1")


@dataclass(frozen=True)
class Seifert:
    """Seifert data (b; (alpha_1, beta_1), ..., (alpha_n, beta_n)) over S^2."""

    b: int
    arms: tuple

    def __post_init__(self):
        arms = tuple((int(a), int(b)) for a, b in self.arms)
        if any(a < 2 for a, _ in arms):
            raise ParameterError("Seifert multiplicities must be >= 2")
        object.__setattr__(self, "arms", arms)


@dataclass(frozen=True)
class SphereProduct:
    """S^2 x S^3, the link of the threefold ordinary double point."""

    dims: tuple = (2, 3)

    def __post_init__(self):
        if tuple(self.dims) != (2, 3):
            raise ParameterError("only the S^2 x S^3 product is supported")


@dataclass(frozen=True)
class PlumbingBoundary:
    lattice: IntersectionLattice


# -- universal coefficient conversions ---------------------------------------

def uct_cohomology_from_homology(homology):
    """H^k = Hom(H_k, Z) + Ext^1(H_{k-1}, Z), degreewise.

    The sequence splits abstractly, which is all that matters at the
    level of isomorphism classes.
    """
    degrees = set(homology)
    out = {}
    for k in degrees | {d + 1 for d in degrees}:
        h_k = homology.get(k, FGAbGroup.trivial())
        h_prev = homology.get(k - 1, FGAbGroup.trivial())
        group = hom_to_Z(h_k).direct_sum(ext1_to_Z(h_prev))
        if not group.is_trivial():
            out[k] = group
    return out


def mod_n_cohomology(homology, n):
    """H^r(X, Z/n) = Hom(H_r, Z/n) + Ext(H_{r-1}, Z/n) from integral homology."""
    if n < 2:
        raise ParameterError("coefficient modulus must be >= 2")
    degrees = set(homology)
    out = {}
    for r in degrees | {d + 1 for d in degrees}:
        h_r = homology.get(r, FGAbGroup.trivial())
        h_prev = homology.get(r - 1, FGAbGroup.trivial())
        group = hom_into_cyclic(h_r, n).direct_sum(ext_into_cyclic(h_prev, n))
        if not group.is_trivial():
            out[r] = group
    return out


# -- lens spaces --------------------------------------------------------------

def lens_homology(p, q):
    """H_*(L(p, q)): (Z, Z/p, 0, Z); independent of q."""
    LensSpace(p, q)
    return {0: FGAbGroup.free(1), 1: FGAbGroup.cyclic(p), 3: FGAbGroup.free(1)}


def lens_profile(p, q):
    """Integral cohomology of L(p, q): H^2 = Z/p via Ext, the rest free.

    >>> print(lens_profile(2, 1).group(2))
    Z/2
    """
    cohomology = uct_cohomology_from_homology(lens_homology(p, q))
    return SpaceProfile(f"L({p},{q})", cohomology)


# -- Seifert fibered spaces ---------------------------------------------------

def seifert_h1_order(b, arms):
    """|H_1| of the Seifert space (b; (a_i, b_i)) when finite, else None.

    The order is |a_1 ... a_n (b + sum b_i/a_i)|; a zero value means H_1
    is infinite and is reported as None.

    >>> seifert_h1_order(-1, [(2, 1), (3, 1), (11, 1)])
    5
    >>> seifert_h1_order(-1, [(2, 1), (2, 1)]) is None
    True
    """
    data = Seifert(b, tuple(arms))
    total = Fraction(data.b)
    product = 1
    for alpha, beta in data.arms:
        total += Fraction(beta, alpha)
        product *= alpha
    value = product * total
    assert value.denominator == 1
    return abs(int(value)) if value != 0 else None


def seifert_homology(b, arms):
    """H_1 from the standard presentation: alpha_i x_i + beta_i h = 0 and
    x_1 + ... + x_n = b h."""
    data = Seifert(b, tuple(arms))
    n = len(data.arms)
    columns = []
    for i, (alpha, beta) in enumerate(data.arms):
        col = [0] * (n + 1)
        col[i] = alpha
        col[n] = beta
        columns.append(col)
    columns.append([1] * n + [-data.b])
    h1, _ = group_from_cokernel(IntMatrix.from_columns(columns))
    return h1


# -- profile assembly ---------------------------------------------------------

def link_profile(model):
    """Cohomology profile of a link model.

    Plumbing boundaries are closed oriented 3-manifolds with
    H_1 = coker(gram); Seifert spaces are accepted only when H_1 is
    finite.

    >>> link_profile(SphereProduct()).is_torsion_free()
    True
    """
    if isinstance(model, LensSpace):
        return lens_profile(model.p, model.q)
    if isinstance(model, SphereProduct):
        groups = {0: FGAbGroup.free(1), 2: FGAbGroup.free(1),
                  3: FGAbGroup.free(1), 5: FGAbGroup.free(1)}
        return SpaceProfile("S^2 x S^3", groups)
    if isinstance(model, Seifert):
        order = seifert_h1_order(model.b, model.arms)
        if order is None:
            raise CapabilityError("Seifert space has infinite H_1; profile not constructed")
        h1 = seifert_homology(model.b, model.arms)
        assert h1.torsion_order() == order and h1.is_finite()
        arms = ",".join(f"({a},{b})" for a, b in model.arms)
        return SpaceProfile(
            f"Seifert({model.b};{arms})",
            uct_cohomology_from_homology(_closed3_homology(h1)),
        )
    if isinstance(model, PlumbingBoundary):
        h1, _ = group_from_cokernel(model.lattice.gram)
        return SpaceProfile(
            f"plumbing boundary (rank {model.lattice.rank})",
            uct_cohomology_from_homology(_closed3_homology(h1)),
        )
    raise ParameterError(f"unknown link model {model!r}")


def _closed3_homology(h1):
    """Homology of a closed oriented 3-manifold from its H_1.

    H_2 is free of the same rank as H_1 by Poincare duality, H_0 and H_3
    are Z.
    """
    return {
        0: FGAbGroup.free(1),
        1: h1,
        2: FGAbGroup.free(h1.free_rank),
        3: FGAbGroup.free(1),
    }


def stalk_profile(link, n):
    """Stalk table of the open-cone model: degree m holds H^{m+n}(link).

    >>> table = stalk_profile(lens_profile(2, 1), 2)
    >>> print(table[0])
    Z/2
    """
    if n < 0:
        raise ParameterError("complex dimension must be >= 0")
    return {deg - n: group for deg, group in link.cohomology.items()}
