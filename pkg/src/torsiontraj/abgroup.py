"""Finitely generated abelian groups and their homological algebra.

A group is stored canonically as a free rank plus the invariant-factor
chain d_1 | d_2 | ... (each >= 2).  Equality is equality of that data,
i.e. groups are compared up to isomorphism.  A primary (prime-power)
decomposition is available as a derived view.

Homomorphisms between finite groups are integer matrices of generator
images; kernels, images and cokernels are computed by reducing combined
presentations with the Smith normal form.
"""

from dataclasses import dataclass
from math import gcd, lcm, prod

from .errors import DimensionError, ValidationError
from .intmat import IntMatrix, kernel_basis, rat_inverse, snf


def _factorize(n):
    """Prime factorization {p: e} by trial division; fine at our sizes."""
    result = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            result[p] = result.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        result[n] = result.get(n, 0) + 1
    return result


def _invariant_factors(orders):
    """Canonical invariant-factor chain of a direct sum of cyclic groups.

    >>> _invariant_factors([2, 3])
    (6,)
    >>> _invariant_factors([4, 6, 2])
    (2, 2, 12)
    """
    exponents = {}
    for d in orders:
        if d < 1:
            raise ValidationError(f"cyclic order must be positive, got {d}")
        for p, e in _factorize(d).items():
            exponents.setdefault(p, []).append(e)
    width = max((len(v) for v in exponents.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for p, exps in exponents.items():
            exps_sorted = sorted(exps, reverse=True)
            if i < len(exps_sorted):
                f *= p ** exps_sorted[i]
        factors.append(f)
    # Largest factor first so far; the stored convention is ascending.
    return tuple(sorted(factors))


@dataclass(frozen=True)
class FGAbGroup:
    """A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k.

    >>> FGAbGroup.from_orders([2, 3]) == FGAbGroup.from_orders([6])
    True
    >>> print(FGAbGroup(1, (2, 4)))
    Z + Z/2 + Z/4
    """

    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValidationError("free rank must be nonnegative")
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise ValidationError("invariant factors must be >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValidationError(f"invariant factors must form a divisibility chain, got {factors}")

    @classmethod
    def from_orders(cls, orders, free_rank=0):
        """Normalize an arbitrary list of cyclic orders (1s are dropped)."""
        return cls(free_rank, _invariant_factors([d for d in orders if d != 1]))

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n):
        return cls.from_orders([n])

    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    def is_free(self):
        return not self.invariant_factors

    def is_finite(self):
        return self.free_rank == 0

    def torsion_order(self):
        """Order of the torsion subgroup (1 when torsion-free)."""
        return prod(self.invariant_factors) if self.invariant_factors else 1

    def torsion(self):
        return FGAbGroup(0, self.invariant_factors)

    def free_part(self):
        return FGAbGroup(self.free_rank, ())

    def exponent(self):
        """Smallest n >= 1 with nG torsion-free on the torsion part."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def prime_support(self):
        """Primes dividing the torsion order."""
        support = set()
        for d in self.invariant_factors:
            support |= set(_factorize(d))
        return frozenset(support)

    def primary_decomposition(self):
        """Derived view: sorted tuple of prime-power cyclic orders."""
        powers = []
        for d in self.invariant_factors:
            powers.extend(p ** e for p, e in _factorize(d).items())
        return tuple(sorted(powers))

    def direct_sum(self, *others):
        orders = list(self.invariant_factors)
        rank = self.free_rank
        for g in others:
            orders.extend(g.invariant_factors)
            rank += g.free_rank
        return FGAbGroup.from_orders(orders, rank)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        factors = self.invariant_factors
        while i < len(factors):
            j = i
            while j < len(factors) and factors[j] == factors[i]:
                j += 1
            count = j - i
            parts.append(f"Z/{factors[i]}" if count == 1 else f"(Z/{factors[i]})^{count}")
            i = j
        return " + ".join(parts) if parts else "0"


def group_from_cokernel(matrix):
    """Cokernel of M : Z^cols -> Z^rows, with generator representatives.

    Returns ``(group, generators)`` where ``generators`` is a list of
    ``(order, column)`` pairs: the columns of the unimodular factor U of
    the Smith normal form whose classes generate the cokernel.  Order 0
    marks a free generator.  Trivial (order-1) columns are omitted.

    >>> g, gens = group_from_cokernel(IntMatrix([[-2]]))
    >>> print(g)
    Z/2
    """
    decomp = snf(matrix)
    diag = list(decomp.d.diagonal())
    # Rows beyond the diagonal (wide-or-tall cases) are free directions too.
    diag += [0] * (matrix.rows - len(diag))
    generators = []
    torsion = []
    for i, d in enumerate(diag):
        if d == 0:
            generators.append((0, decomp.u.column(i)))
        elif d > 1:
            torsion.append(d)
            generators.append((d, decomp.u.column(i)))
    group = FGAbGroup.from_orders(torsion, free_rank=diag.count(0))
    return group, generators


def ext1_to_Z(group):
    """Ext^1(G, Z): the torsion part of G; free summands contribute nothing."""
    return group.torsion()


def hom_to_Z(group):
    """Hom(G, Z) = Z^rank; torsion dies."""
    return FGAbGroup.free(group.free_rank)


def tensor(g, h):
    """G (x) H with Z/m (x) Z/n = Z/gcd(m, n) and Z (x) H = H.

    >>> print(tensor(FGAbGroup.cyclic(4), FGAbGroup.cyclic(2)))
    Z/2
    """
    orders = []
    for m in g.invariant_factors:
        for n in h.invariant_factors:
            orders.append(gcd(m, n))
    orders.extend(list(g.invariant_factors) * h.free_rank)
    orders.extend(list(h.invariant_factors) * g.free_rank)
    return FGAbGroup.from_orders(orders, g.free_rank * h.free_rank)


def tor(g, h):
    """Tor_1(G, H): torsion-to-torsion pairing Z/gcd; free parts vanish."""
    orders = [gcd(m, n) for m in g.invariant_factors for n in h.invariant_factors]
    return FGAbGroup.from_orders(orders)


def hom_into_cyclic(group, n):
    """Hom(G, Z/n) = (Z/n)^rank + sum Z/gcd(d_i, n)."""
    orders = [gcd(d, n) for d in group.invariant_factors]
    orders.extend([n] * group.free_rank)
    return FGAbGroup.from_orders(orders)


def ext_into_cyclic(group, n):
    """Ext^1(G, Z/n) = sum Z/gcd(d_i, n); Ext(Z, -) = 0."""
    return FGAbGroup.from_orders([gcd(d, n) for d in group.invariant_factors])


def n_torsion(group, n):
    """Kernel of multiplication by n: sum of Z/gcd(n, d_i).

    >>> print(n_torsion(FGAbGroup.cyclic(4), 2))
    Z/2
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    return FGAbGroup.from_orders([gcd(n, d) for d in group.invariant_factors])


def scale_subgroup(group, n):
    """The subgroup nG and the quotient G/nG.

    On torsion, nG = sum Z/(d_i / gcd(n, d_i)) and
    G/nG = sum Z/gcd(n, d_i) + (Z/n)^rank; n times a free summand is
    still free of the same rank.

    >>> sub, quot = scale_subgroup(FGAbGroup.cyclic(4), 2)
    >>> print(sub, "|", quot)
    Z/2 | Z/2
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    sub = FGAbGroup.from_orders(
        [d // gcd(n, d) for d in group.invariant_factors], group.free_rank
    )
    quot_orders = [gcd(n, d) for d in group.invariant_factors] + [n] * group.free_rank
    return sub, FGAbGroup.from_orders(quot_orders)


def rationalize(group):
    """dim_Q (G (x) Q): the free rank; all torsion dies."""
    return group.free_rank


@dataclass(frozen=True)
class FinAbHom:
    """A homomorphism between finite abelian groups.

    ``matrix`` holds generator images: column i lists the coordinates of
    f(s_i) in the target's generators, where s_i is the source generator
    of order ``source.invariant_factors[i]``.
    """

    source: FGAbGroup
    target: FGAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if not self.source.is_finite() or not self.target.is_finite():
            raise ValidationError("homomorphism analysis supports torsion groups only")
        n_src = len(self.source.invariant_factors)
        n_tgt = len(self.target.invariant_factors)
        if (self.matrix.rows, self.matrix.cols) != (n_tgt, n_src):
            raise DimensionError(
                f"matrix must be {n_tgt}x{n_src} for these groups, "
                f"got {self.matrix.rows}x{self.matrix.cols}"
            )
        for i, d in enumerate(self.source.invariant_factors):
            for j, t in enumerate(self.target.invariant_factors):
                if (d * self.matrix.entry(j, i)) % t:
                    raise ValidationError(
                        f"generator {i} of order {d} maps outside the target: "
                        f"entry ({j},{i}) violates order compatibility"
                    )

    @classmethod
    def identity(cls, group):
        n = len(group.invariant_factors)
        return cls(group, group, IntMatrix.identity(n))

    @classmethod
    def zero(cls, source, target):
        return cls(
            source,
            target,
            IntMatrix.zero(len(target.invariant_factors), len(source.invariant_factors)),
        )


@dataclass(frozen=True)
class HomAnalysis:
    kernel: FGAbGroup
    image: FGAbGroup
    cokernel: FGAbGroup


def hom_analyze(f):
    """Kernel, image and cokernel of a homomorphism of finite groups.

    Source and target are presented by their relation matrices
    D = diag(d_i) and R = diag(t_j); everything reduces to Smith normal
    forms of combined presentations:

    * cokernel = coker([M | R]) on the target's generators,
    * the preimage lattice P = {x : Mx in R Z^m} gives
      image = Z^n / P and kernel = P / D Z^n.

    Satisfies |kernel| * |image| = |source|.
    """
    src = f.source.invariant_factors
    tgt = f.target.invariant_factors
    n, m = len(src), len(tgt)
    if n == 0:
        return HomAnalysis(FGAbGroup.trivial(), FGAbGroup.trivial(), f.target)
    if m == 0:
        return HomAnalysis(f.source, FGAbGroup.trivial(), FGAbGroup.trivial())

    d_mat = IntMatrix([[src[i] if i == j else 0 for j in range(n)] for i in range(n)])
    r_mat = IntMatrix([[tgt[i] if i == j else 0 for j in range(m)] for i in range(m)])

    cokernel, _ = group_from_cokernel(f.matrix.hstack(r_mat))

    # Solutions of Mx = Ry, projected to x, span the preimage lattice P.
    solution_kernel = kernel_basis(f.matrix.hstack(-1 * r_mat))
    x_parts = [vec[:n] for vec in solution_kernel]
    span = IntMatrix.from_columns(x_parts + d_mat.columns())

    image, _ = group_from_cokernel(span)

    basis_decomp = snf(span)
    basis_cols = [
        tuple(basis_decomp.u.entry(i, j) * basis_decomp.d.entry(j, j) for i in range(n))
        for j in range(basis_decomp.rank())
    ]
    assert len(basis_cols) == n, "preimage lattice must have full rank"
    basis = IntMatrix.from_columns(basis_cols)
    in_basis = (rat_inverse(basis) @ d_mat).to_int_matrix()
    kernel, _ = group_from_cokernel(in_basis)

    return HomAnalysis(kernel, image, cokernel)


def element_order(coords, factors):
    """Order of an element given by coordinates in cyclic factors."""
    o = 1
    for c, d in zip(coords, factors):
        if c % d:
            o = lcm(o, d // gcd(c, d))
    return o
