"""Exact integer/rational linear algebra over the lattice Z^d.

Everything here is exact: arbitrary-precision ints for lattice data,
fractions.Fraction where division is unavoidable.  No floating point —
smoothness and decomposition certificates are integer statements and any
rounding would invalidate them.

Scalars are ints or Fractions; vectors are plain tuples; matrices are tuples
of row tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rng import SplitMix64

Num = int | Fraction  # exact scalar


def norm_num(x):
    """Collapse integral Fractions to int (canonical scalar form)."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return x


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(k, u):
    return tuple(norm_num(k * a) for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_zero(u) -> bool:
    return all(a == 0 for a in u)


def primitive(v):
    """Divide an integer vector by the gcd of its entries, keeping direction.

    (2,4) -> (1,2); (-3,6) -> (-1,2).  The zero vector has no direction.
    """
    if all(a == 0 for a in v):
        raise ValueError("no primitive direction: zero vector")
    if not all(isinstance(a, int) for a in v):
        raise TypeError("primitive() expects an integer vector")
    g = 0
    for a in v:
        g = math.gcd(g, a)
    return tuple(a // g for a in v)


def primitive_direction(v):
    """Primitive integer vector with the direction of a rational vector v."""
    if all(a == 0 for a in v):
        raise ValueError("no primitive direction: zero vector")
    scale = 1
    for a in v:
        if isinstance(a, Fraction):
            scale = scale * a.denominator // math.gcd(scale, a.denominator)
    return primitive(tuple(int(a * scale) for a in v))


def det_int(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
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


def _int_rows(rows):
    """Scale each row by its denominator lcm; preserves rank and row spans."""
    out = []
    for r in rows:
        scale = 1
        for a in r:
            if isinstance(a, Fraction):
                scale = scale * a.denominator // math.gcd(scale, a.denominator)
        out.append(tuple(int(a * scale) for a in r))
    return out


def rank(rows) -> int:
    """Exact rank of a matrix with int/Fraction entries."""
    a = [list(r) for r in _int_rows(rows)]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(a)):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][col] != 0:
                f = a[i][col]
                g = a[r][col]
                for j in range(col, ncols):
                    a[i][j] = a[i][j] * g - a[r][j] * f
        r += 1
        if r == len(a):
            break
    return r


def solve(a_rows, b):
    """Solve A x = b exactly; returns a Fraction tuple or None if singular."""
    n = len(a_rows)
    a = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pival = a[col][col]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col] / pival
                for j in range(col, n + 1):
                    a[i][j] -= f * a[col][j]
    return tuple(norm_num(a[i][n] / a[i][i]) for i in range(n))


def solve_in_span(basis, target):
    """Coordinates of target in span(basis) (vectors of length d, k <= d).

    Returns a tuple of Fractions lam with sum lam_i basis_i = target, or None
    if target is outside the span.
    """
    k = len(basis)
    d = len(target)
    # Row-reduce the transposed system [basis^T | target].
    a = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(d)]
    pivots = []
    r = 0
    for col in range(k):
        piv = None
        for i in range(r, d):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pival = a[r][col]
        for i in range(d):
            if i != r and a[i][col] != 0:
                f = a[i][col] / pival
                for j in range(col, k + 1):
                    a[i][j] -= f * a[r][j]
        pivots.append((r, col))
        r += 1
    # Rows below the pivots must have zero RHS, else target is off-span.
    for i in range(r, d):
        if a[i][k] != 0:
            return None
    lam = [Fraction(0)] * k
    for row, col in pivots:
        lam[col] = a[row][k] / a[row][col]
    return tuple(norm_num(x) for x in lam)


def kernel_vector(rows, d):
    """Some primitive integer vector orthogonal to all rows, or None.

    rows may be rational; they are scaled to integers first.  Returns None
    exactly when the rows span all of Q^d.
    """
    a = [list(r) for r in _int_rows(rows)]
    pivots = {}  # col -> row index in reduced form
    r = 0
    for col in range(d):
        piv = None
        for i in range(r, len(a)):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                g = a[r][col]
                for j in range(d):
                    a[i][j] = a[i][j] * g - a[r][j] * f
        pivots[col] = r
        r += 1
    free = [c for c in range(d) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    x = [Fraction(0)] * d
    x[c0] = Fraction(1)
    for col, row in pivots.items():
        x[col] = Fraction(-a[row][c0], a[row][col])
    return primitive_direction(tuple(x))


def integer_kernel_basis(rows, d):
    """Basis of the lattice {x in Z^d : r . x = 0 for all rows r}.

    Unimodular column operations reduce the (integer) row matrix; the
    transform columns over the zeroed-out part generate the kernel lattice,
    so lattice points map bijectively to integer coordinate tuples.
    """
    a = [list(r) for r in _int_rows(rows)]
    u = [[1 if i == j else 0 for j in range(d)] for i in range(d)]  # columns tracked

    def col_op(j1, j2, m11, m12, m21, m22):
        # (col j1, col j2) <- (m11 col j1 + m21 col j2, m12 col j1 + m22 col j2)
        for mat in (a, u):
            for row in mat:
                x, y = row[j1], row[j2]
                row[j1] = m11 * x + m21 * y
                row[j2] = m12 * x + m22 * y

    lead = 0
    for i in range(len(a)):
        # Clear row i to a single pivot in column `lead` using gcd steps.
        if lead >= d:
            break
        nz = [j for j in range(lead, d) if a[i][j] != 0]
        if not nz:
            continue
        j0 = nz[0]
        if j0 != lead:
            col_op(lead, j0, 0, 1, 1, 0)
        for j in range(lead + 1, d):
            if a[i][j] == 0:
                continue
            p, q = a[i][lead], a[i][j]
            g = math.gcd(p, q)
            x, y = _xgcd(p, q)
            # det of [[x, -q//g], [y, p//g]] is (xp + yq)/g = 1
            col_op(lead, j, x, -(q // g), y, p // g)
        lead += 1
    zero_cols = [j for j in range(lead, d)]
    # Sanity: those columns must be zero in all rows.
    for j in zero_cols:
        assert all(row[j] == 0 for row in a)
    return [tuple(u[i][j] for i in range(d)) for j in zero_cols]


def _xgcd(p, q):
    """(x, y) with x*p + y*q = gcd(p, q)."""
    old_r, r = p, q
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
        old_y, y = y, old_y - qt * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return old_x, old_y


def unimodular_with_last_row(n):
    """Integer matrix A with |det A| = 1 whose last row is the primitive vector n.

    Column-reduces n to e_d by unimodular operations tracked in V (so that
    n V = e_d) and returns V^{-1}, whose last row is then n.
    """
    d = len(n)
    if primitive(n) != tuple(n):
        raise ValueError("last row must be primitive")
    a = list(n)
    v = [[1 if i == j else 0 for j in range(d)] for i in range(d)]

    def col_op(j1, j2, m11, m12, m21, m22):
        for row in v:
            x, y = row[j1], row[j2]
            row[j1] = m11 * x + m21 * y
            row[j2] = m12 * x + m22 * y
        x, y = a[j1], a[j2]
        a[j1] = m11 * x + m21 * y
        a[j2] = m12 * x + m22 * y

    for j in range(d - 1):
        if a[j] == 0:
            continue
        p, q = a[d - 1], a[j]
        g = math.gcd(p, q)
        x, y = _xgcd(p, q)
        col_op(d - 1, j, x, -(q // g), y, p // g)
    if a[d - 1] == -1:  # flip the last column's sign; det flips, still ±1
        a[d - 1] = 1
        for row in v:
            row[d - 1] = -row[d - 1]
    assert a == [0] * (d - 1) + [1]
    out = mat_inverse_int(tuple(tuple(r) for r in v))
    assert out[d - 1] == tuple(n)
    return out


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(dot(row, v) for row in a)


def mat_identity(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_inverse_int(a):
    """Inverse of an integer matrix with det ±1 (stays integral)."""
    n = len(a)
    dv = det_int(a)
    if dv not in (1, -1):
        raise ValueError("matrix is not unimodular")
    inv = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        col = solve(a, e)
        inv.append(col)
    # solve() returned columns of the inverse; transpose and cast to int.
    out = tuple(tuple(int(inv[j][i]) for j in range(n)) for i in range(n))
    assert mat_mul(a, out) == mat_identity(n)
    return out


def lattice_basis_check(vectors) -> bool:
    """True iff the d given integer d-vectors form a basis of Z^d (|det| = 1)."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("no vectors given")
    d = len(vectors[0])
    if len(vectors) != d or any(len(v) != d for v in vectors):
        raise ValueError(f"need exactly {d} vectors of dimension {d}")
    if not all(isinstance(a, int) for v in vectors for a in v):
        raise ValueError("lattice basis check needs integer vectors")
    return abs(det_int(vectors)) == 1


@dataclass(frozen=True)
class UnimodularMap:
    """Affine lattice automorphism x -> M x + t with |det M| = 1."""

    matrix: tuple  # d rows, each a tuple of ints
    translation: tuple  # length-d int tuple

    def __post_init__(self):
        d = len(self.matrix)
        if any(len(r) != d for r in self.matrix) or len(self.translation) != d:
            raise ValueError("matrix/translation dimensions disagree")
        entries = [a for r in self.matrix for a in r] + list(self.translation)
        if not all(isinstance(a, int) for a in entries):
            raise ValueError("lattice maps need integer entries")
        if abs(det_int(self.matrix)) != 1:
            raise ValueError("matrix determinant is not ±1")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @staticmethod
    def identity(d: int) -> "UnimodularMap":
        return UnimodularMap(mat_identity(d), (0,) * d)

    @staticmethod
    def translation_by(t) -> "UnimodularMap":
        return UnimodularMap(mat_identity(len(t)), tuple(t))

    def apply(self, point):
        return tuple(norm_num(dot(row, point) + c) for row, c in zip(self.matrix, self.translation))

    def apply_vector(self, v):
        """Image of a direction vector (translation ignored)."""
        return mat_vec(self.matrix, v)

    def inverse(self) -> "UnimodularMap":
        minv = mat_inverse_int(self.matrix)
        return UnimodularMap(minv, vec_neg(mat_vec(minv, self.translation)))

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """Map doing `other` first, then self."""
        return UnimodularMap(
            mat_mul(self.matrix, other.matrix),
            vec_add(mat_vec(self.matrix, other.translation), self.translation),
        )


def random_unimodular(d: int, seed: int, bound: int) -> UnimodularMap:
    """Deterministic unimodular matrix: product of `bound` random shears.

    Each shear adds k times one row to another with k in {-2,-1,1,2}, so
    every entry of the result is at most 3**bound in absolute value and the
    determinant stays ±1.  Identical (d, seed, bound) give identical maps.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    rng = SplitMix64(seed)
    m = [list(r) for r in mat_identity(d)]
    if d > 1:
        for _ in range(max(0, bound)):
            i = rng.randint(0, d - 1)
            j = rng.randint(0, d - 2)
            if j >= i:
                j += 1
            k = rng.choice((-2, -1, 1, 2))
            for col in range(d):
                m[i][col] += k * m[j][col]
    return UnimodularMap(tuple(tuple(r) for r in m), (0,) * d)
