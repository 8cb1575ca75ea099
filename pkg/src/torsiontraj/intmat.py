"""Exact integer and rational matrix algebra.

Everything here runs on Python's arbitrary-precision integers and
``fractions.Fraction``; no floating point is used anywhere.  The sizes in
play are small (intersection matrices up to 8x8, monodromy matrices up to
about 20x20), so clarity wins over asymptotics throughout.

The centrepiece is ``snf``, a Smith normal form returning the full
decomposition M = U * D * V with unimodular U, V.  Downstream code relies
on U for cokernel generator representatives, so the transforms are always
computed, never just the diagonal.
"""

from fractions import Fraction

from .errors import DimensionError, SingularMatrixError


class IntMatrix:
    """An immutable matrix with integer entries.

    >>> m = IntMatrix([[-2]])
    >>> m.rows, m.cols
    (1, 1)
    >>> print(IntMatrix.identity(2))
    [[1, 0], [0, 1]]
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows in matrix literal")
        self._rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns):
        return cls(list(zip(*columns)))

    @property
    def rows(self):
        return len(self._rows)

    @property
    def cols(self):
        return len(self._rows[0])

    def entry(self, i, j):
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self):
        return [list(r) for r in self._rows]

    def transpose(self):
        return IntMatrix(list(zip(*self._rows)))

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def is_diagonal(self):
        return all(
            self._rows[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self):
        return tuple(self._rows[i][i] for i in range(min(self.rows, self.cols)))

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionError("row counts differ in hstack")
        return IntMatrix([a + b for a, b in zip(self._rows, other._rows)])

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            return self.to_rational() @ other
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        )

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix([[scalar * x for x in row] for row in self._rows])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in subtraction")
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def apply(self, vector):
        """Matrix times column vector, returned as a tuple of ints."""
        if len(vector) != self.cols:
            raise DimensionError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self._rows)

    def to_rational(self):
        return RatMatrix(self._rows)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r})"

    def __str__(self):
        return str(self.to_lists())


class RatMatrix:
    """An immutable matrix with exact rational entries.

    Entries are ``fractions.Fraction`` values, hence always in lowest
    terms with positive denominator.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows in matrix literal")
        self._rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns):
        return cls(list(zip(*columns)))

    @property
    def rows(self):
        return len(self._rows)

    @property
    def cols(self):
        return len(self._rows[0])

    def entry(self, i, j):
        return self._rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self):
        return [list(r) for r in self._rows]

    def transpose(self):
        return RatMatrix(list(zip(*self._rows)))

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def is_integral(self):
        return all(x.denominator == 1 for row in self._rows for x in row)

    def to_int_matrix(self):
        if not self.is_integral():
            raise DimensionError("matrix has non-integer entries")
        return IntMatrix([[int(x) for x in row] for row in self._rows])

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionError("vector length does not match column count")
        return tuple(sum(a * Fraction(b) for a, b in zip(row, vector)) for row in self._rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rational()
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = other.columns()
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        )

    def __rmatmul__(self, other):
        if isinstance(other, IntMatrix):
            return other.to_rational() @ self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rational()
        return isinstance(other, RatMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in row] for row in self._rows]!r})"

    def __str__(self):
        return "[" + ", ".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self._rows
        ) + "]"


class SnfDecomposition:
    """Smith normal form M = U * D * V with unimodular U and V.

    The diagonal of D is nonnegative, satisfies d_i | d_{i+1}, and lists
    zeros last; it is the invariant-factor sequence of M.
    """

    __slots__ = ("u", "d", "v")

    def __init__(self, u, d, v):
        self.u = u
        self.d = d
        self.v = v

    def reconstruct(self):
        return self.u @ self.d @ self.v

    def invariant_factors(self):
        """Nonzero diagonal entries of D, in divisibility order."""
        return tuple(x for x in self.d.diagonal() if x != 0)

    def rank(self):
        return len(self.invariant_factors())

    def __repr__(self):
        return f"SnfDecomposition(d={list(self.d.diagonal())!r})"


def snf(matrix):
    """Smith normal form of an integer matrix (rectangular allowed).

    >>> snf(IntMatrix([[-2]])).d.to_lists()
    [[2]]
    >>> snf(IntMatrix([[2, 4], [6, 8]])).invariant_factors()
    (2, 4)
    """
    a = matrix.to_lists()
    nr, nc = matrix.rows, matrix.cols
    u = IntMatrix.identity(nr).to_lists()
    v = IntMatrix.identity(nc).to_lists()

    # Invariant maintained by every operation below: matrix == U @ A @ V.
    # A row operation on A is compensated by the inverse column operation
    # on U, a column operation on A by the inverse row operation on V.

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        for r in u:
            r[i] = -r[i]

    def row_add(i, j, c):
        # a[i] += c * a[j]
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        for r in u:
            r[j] -= c * r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def col_add(i, j, c):
        # column i += c * column j
        for r in a:
            r[i] += c * r[j]
        v[j] = [x - c * y for x, y in zip(v[j], v[i])]

    t = 0
    bound = min(nr, nc)
    while t < bound:
        # Smallest nonzero entry of the trailing block becomes the pivot.
        pivot = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        if a[t][t] < 0:
            row_negate(t)

        p = a[t][t]
        dirty = False
        for i in range(t + 1, nr):
            if a[i][t] != 0:
                q = a[i][t] // p
                if q:
                    row_add(i, t, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, nc):
            if a[t][j] != 0:
                q = a[t][j] // p
                if q:
                    col_add(j, t, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue

        offender = None
        for i in range(t + 1, nr):
            if any(a[i][j] % p for j in range(t + 1, nc)):
                offender = i
                break
        if offender is not None:
            # Pull the non-divisible row up so the next pass shrinks the pivot.
            row_add(t, offender, 1)
            continue
        t += 1

    return SnfDecomposition(IntMatrix(u), IntMatrix(a), IntMatrix(v))


def det(matrix):
    """Exact determinant of a square integer matrix (Bareiss elimination).

    >>> det(IntMatrix([[-1, 1, 1, 1], [1, -2, 0, 0], [1, 0, -3, 0], [1, 0, 0, -11]]))
    5
    """
    if not matrix.is_square():
        raise DimensionError("determinant requires a square matrix")
    n = matrix.rows
    a = matrix.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rat_inverse(matrix):
    """Exact inverse of a nonsingular integer matrix, as a RatMatrix.

    Raises SingularMatrixError (carrying determinant 0) when singular.
    """
    if not matrix.is_square():
        raise DimensionError("inverse requires a square matrix")
    n = matrix.rows
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix.to_lists())]
    for c in range(n):
        pivot_row = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(determinant=0)
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return RatMatrix([row[n:] for row in a])


def char_poly(matrix):
    """Characteristic polynomial det(tI - M), leading coefficient first.

    Faddeev-LeVerrier over exact rationals; the result of an integer
    matrix always has integer coefficients.

    >>> char_poly(IntMatrix([[-1]]))
    (1, 1)
    """
    if not matrix.is_square():
        raise DimensionError("characteristic polynomial requires a square matrix")
    n = matrix.rows
    a = [[Fraction(x) for x in row] for row in matrix.to_lists()]

    def mul(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            m[i][i] += coeffs[-1]
        m = mul(a, m)
        c = -sum(m[i][i] for i in range(n)) / k
        coeffs.append(c)
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


def kernel_basis(matrix):
    """Basis of the integer kernel {x : Mx = 0}, as a list of int tuples.

    Derived from the Smith normal form: with M = U D V, the kernel is
    spanned by the columns of V^-1 matching zero diagonal entries of D.
    """
    decomp = snf(matrix)
    rank = decomp.rank()
    if rank == matrix.cols:
        return []
    v_inv = rat_inverse(decomp.v).to_int_matrix()
    return [v_inv.column(j) for j in range(rank, matrix.cols)]
