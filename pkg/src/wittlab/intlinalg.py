"""Exact linear algebra over the integers.

Dense matrices with arbitrary-precision entries, Hermite and Smith
normal forms with transformation matrices, integer kernels, and a
canonical solver for A*x = b over Z.  Everything is deterministic:
pivot selection always takes the smallest nonzero absolute value,
breaking ties in row-major order.
"""

from __future__ import annotations

from math import gcd


class IntMatrix:
    """An immutable-by-convention integer matrix.

    >>> a = IntMatrix([[1, 2], [3, 4]])
    >>> (a * a).rows
    [[7, 10], [15, 22]]
    """

    __slots__ = ("m", "n", "rows")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != self.n:
                raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_cols(cls, cols, m=None):
        if not cols:
            return cls.zeros(m or 0, 0)
        m = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(m)])

    def col(self, j):
        return [r[j] for r in self.rows]

    def cols(self):
        return [self.col(j) for j in range(self.n)]

    def transpose(self):
        return IntMatrix([[self.rows[i][j] for i in range(self.m)] for j in range(self.n)])

    def apply(self, vec):
        """Matrix times column vector, returned as a list.

        Accumulates column by column over the nonzero vector entries,
        so sparse vectors (relation columns, basis vectors) stay cheap
        even when the matrix is large.
        """
        if len(vec) != self.n:
            raise ValueError("dimension mismatch")
        out = [0] * self.m
        for j, x in enumerate(vec):
            if x:
                for i, row in enumerate(self.rows):
                    out[i] += row[j] * x
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[x * other for x in r] for r in self.rows])
        if self.n != other.m:
            raise ValueError("dimension mismatch")
        bt = other.transpose().rows
        return IntMatrix([[sum(x * y for x, y in zip(r, c)) for c in bt] for r in self.rows])

    __rmul__ = lambda self, k: self.__mul__(k)

    def __add__(self, other):
        return IntMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return IntMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return IntMatrix([[-x for x in r] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        return f"IntMatrix({self.rows!r})"

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def hstack(self, other):
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        return IntMatrix([r + s for r, s in zip(self.rows, other.rows)])

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.m != self.n:
            raise ValueError("not square")
        n = self.n
        a = [list(r) for r in self.rows]
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


class SmithDecomposition:
    """Holds U, D, V with U*A*V = D, U and V unimodular, D diagonal
    with d_1 | d_2 | ... and nonnegative entries.  ``V`` may be None
    when the caller only asked for the row transform."""

    __slots__ = ("U", "D", "V", "diag", "rank")

    def __init__(self, U, D, V):
        self.U = U
        self.D = D
        self.V = V
        self.diag = [D.rows[i][i] for i in range(min(D.m, D.n))]
        self.rank = sum(1 for d in self.diag if d != 0)


def _find_pivot(b, t, m, n):
    # smallest nonzero |entry| in the trailing submatrix, row-major ties
    best = None
    bi = bj = -1
    for i in range(t, m):
        row = b[i]
        for j in range(t, n):
            v = row[j]
            if v != 0:
                a = v if v > 0 else -v
                if best is None or a < best:
                    best, bi, bj = a, i, j
                    if a == 1:
                        return bi, bj
    return (bi, bj) if best is not None else None


def smith_normal_form(a: IntMatrix, need_v: bool = True) -> SmithDecomposition:
    """Smith normal form with transforms.

    >>> d = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    >>> d.diag
    [2, 4]
    >>> (d.U * IntMatrix([[2, 4], [6, 8]]) * d.V).rows == d.D.rows
    True
    """
    m, n = a.m, a.n
    b = [list(r) for r in a.rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if need_v else None

    def swap_rows(i, j):
        if i != j:
            b[i], b[j] = b[j], b[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in b:
                row[i], row[j] = row[j], row[i]
            if v is not None:
                for row in v:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        bd, bs = b[dst], b[src]
        for k in range(n):
            bd[k] += q * bs[k]
        ud, us = u[dst], u[src]
        for k in range(m):
            ud[k] += q * us[k]

    def add_col(dst, src, q):
        for row in b:
            row[dst] += q * row[src]
        if v is not None:
            for row in v:
                row[dst] += q * row[src]

    t = 0
    limit = min(m, n)
    while t < limit:
        loc = _find_pivot(b, t, m, n)
        if loc is None:
            break
        swap_rows(t, loc[0])
        swap_cols(t, loc[1])
        # clear row and column t; pivot magnitude strictly drops on each retry
        while True:
            for i in range(t + 1, m):
                if b[i][t] != 0:
                    q = b[i][t] // b[t][t]
                    add_row(i, t, -q)
            col_dirty = any(b[i][t] != 0 for i in range(t + 1, m))
            if col_dirty:
                loc = _find_pivot(b, t, m, n)
                swap_rows(t, loc[0])
                swap_cols(t, loc[1])
                continue
            for j in range(t + 1, n):
                if b[t][j] != 0:
                    q = b[t][j] // b[t][t]
                    add_col(j, t, -q)
            if any(b[t][j] != 0 for j in range(t + 1, n)):
                loc = _find_pivot(b, t, m, n)
                swap_rows(t, loc[0])
                swap_cols(t, loc[1])
                continue
            # pivot must divide every remaining entry
            piv = b[t][t]
            offender = None
            for i in range(t + 1, m):
                row = b[i]
                for j in range(t + 1, n):
                    if row[j] % piv != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if b[t][t] < 0:
            b[t] = [-x for x in b[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithDecomposition(
        IntMatrix(u), IntMatrix(b), IntMatrix(v) if need_v else None
    )


def kernel_basis(a: IntMatrix):
    """Basis of the integer kernel {x : A x = 0}, as a list of columns."""
    s = smith_normal_form(a)
    out = []
    for i in range(a.n):
        if i >= len(s.diag) or s.diag[i] == 0:
            out.append(s.V.col(i))
    return out


def solve_integer_linear(a: IntMatrix, b):
    """Canonical integer solution of A x = b, or None.

    The solution is expressed through the Smith basis of A with every
    free coordinate set to zero, so it is unique and deterministic.

    >>> solve_integer_linear(IntMatrix([[2, 0], [0, 3]]), [4, 9])
    [2, 3]
    >>> solve_integer_linear(IntMatrix([[2]]), [3]) is None
    True
    """
    s = smith_normal_form(a)
    c = s.U.apply(list(b))
    z = [0] * a.n
    for i in range(a.m):
        d = s.diag[i] if i < len(s.diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            z[i] = c[i] // d
    return s.V.apply(z)


def hermite_column_form(cols, m):
    """Canonical column Hermite form of the lattice spanned by ``cols``.

    Returns a list of echelon columns (length ``m`` each): pivots are
    positive, appear in strictly increasing rows, and every entry of a
    pivot row in the later columns is reduced into [0, pivot).  Two
    generating sets span the same lattice iff their forms are equal.
    """
    work = [list(c) for c in cols if any(x != 0 for x in c)]
    done = []
    row = 0
    while row < m and work:
        # gcd-combine all columns with a nonzero entry in this row
        while True:
            live = [c for c in work if c[row] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda c: abs(c[row]))
            base = live[0]
            for c in live[1:]:
                q = c[row] // base[row]
                for k in range(row, m):
                    c[k] -= q * base[k]
        pivot = None
        rest = []
        for c in work:
            if c[row] != 0 and pivot is None:
                pivot = c
            else:
                rest.append(c)
        if pivot is not None:
            if pivot[row] < 0:
                for k in range(row, m):
                    pivot[k] = -pivot[k]
            for c in done:
                q = c[row] // pivot[row]
                if q:
                    for k in range(row, m):
                        c[k] -= q * pivot[k]
            done.append(pivot)
            work = [c for c in rest if any(x != 0 for x in c)]
        row += 1
    return done


def lattice_eq(cols_a, cols_b, m):
    """Do two column sets span the same sublattice of Z^m?"""
    return hermite_column_form(cols_a, m) == hermite_column_form(cols_b, m)


def lattice_contains(cols, vec, m):
    """Is ``vec`` in the lattice spanned by ``cols``?"""
    h = hermite_column_form(cols, m)
    v = list(vec)
    for c in h:
        row = next(i for i in range(m) if c[i] != 0)
        if v[row] % c[row] != 0:
            return False
        q = v[row] // c[row]
        for k in range(m):
            v[k] -= q * c[k]
    return all(x == 0 for x in v)


def lattice_le(cols_a, cols_b, m):
    """Is span(cols_a) contained in span(cols_b)?"""
    h = hermite_column_form(cols_b, m)
    for c in cols_a:
        if not _reduces_to_zero(c, h, m):
            return False
    return True


def _reduces_to_zero(vec, hnf_cols, m):
    v = list(vec)
    for c in hnf_cols:
        row = next(i for i in range(m) if c[i] != 0)
        if v[row] % c[row] != 0:
            return False
        q = v[row] // c[row]
        for k in range(m):
            v[k] -= q * c[k]
    return all(x == 0 for x in v)


def gcd_list(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
