"""Exact linear algebra over the integers and rationals.

Matrices are lists of row lists, vectors are tuples.  Everything here is
arbitrary precision: integer matrices stay integer, rational results use
`fractions.Fraction`.  No floating point.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a, b):
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(v, m):
    """Row vector times matrix."""
    if not m:
        return ()
    cols = len(m[0])
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(cols))


def mat_vec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def rank(m):
    """Rank of a matrix with integer or Fraction entries."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def det(m):
    """Exact determinant (Bareiss fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m):
    """Exact inverse as Fraction matrix; raises on singular input."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def int_inverse(m):
    """Inverse of a unimodular integer matrix, returned with int entries."""
    inv = inverse(m)
    out = []
    for row in inv:
        r = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            r.append(int(x))
        out.append(r)
    return out


def rat_solve_right(m, c):
    """Solve M y = c over the rationals; None if inconsistent.

    Returns one particular solution as a tuple of Fractions.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(c[i])] for i, row in enumerate(m)]
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    y = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        y[col] = a[i][cols]
    return tuple(y)


def _col_hnf(m):
    """Column Hermite-style reduction M U = H; returns (H, U).

    H has a staircase of pivot columns followed by zero columns, U is
    unimodular.  Only used for integer solving/kernels, so no effort is
    made to fully normalize off-pivot entries.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [list(row) for row in m]
    u = identity(cols)

    def col_op(j, k, f):
        # column_j += f * column_k
        for i in range(rows):
            h[i][j] += f * h[i][k]
        for i in range(cols):
            u[i][j] += f * u[i][k]

    def col_swap(j, k):
        for i in range(rows):
            h[i][j], h[i][k] = h[i][k], h[i][j]
        for i in range(cols):
            u[i][j], u[i][k] = u[i][k], u[i][j]

    def col_neg(j):
        for i in range(rows):
            h[i][j] = -h[i][j]
        for i in range(cols):
            u[i][j] = -u[i][j]

    pc = 0
    for row in range(rows):
        if pc >= cols:
            break
        # euclidean reduction across columns pc..cols-1 on this row
        while True:
            nz = [j for j in range(pc, cols) if h[row][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(h[row][j]))
            if jmin != pc:
                col_swap(pc, jmin)
            if h[row][pc] < 0:
                col_neg(pc)
            done = True
            for j in range(pc + 1, cols):
                if h[row][j] != 0:
                    q = h[row][j] // h[row][pc]
                    col_op(j, pc, -q)
                    if h[row][j] != 0:
                        done = False
            if done:
                break
        if h[row][pc] != 0:
            pc += 1
    return h, u


class IntSolver:
    """Factored integer linear system M y = c, solvable for many c."""

    def __init__(self, m):
        self.rows = len(m)
        self.cols = len(m[0]) if self.rows else 0
        self.h, self.u = _col_hnf(m)
        col = 0
        for row in range(self.rows):
            if col < self.cols and self.h[row][col] != 0:
                col += 1
        self.rank = col
        self.kernel = [tuple(self.u[i][j] for i in range(self.cols))
                       for j in range(self.rank, self.cols)]

    def solve(self, c):
        """One integral solution of M y = c, or None."""
        h, u, cols = self.h, self.u, self.cols
        z = [0] * cols
        resid = list(c)
        col = 0
        for row in range(self.rows):
            if col < cols and h[row][col] != 0:
                if resid[row] % h[row][col] != 0:
                    return None
                q = resid[row] // h[row][col]
                z[col] = q
                if q:
                    for i in range(self.rows):
                        resid[i] -= q * h[i][col]
                col += 1
            elif resid[row] != 0:
                return None
        if any(x != 0 for x in resid):
            return None
        return tuple(sum(u[i][j] * z[j] for j in range(cols))
                     for i in range(cols))


def int_solve_right(m, c):
    """Solve M y = c over the integers.

    Returns (particular, kernel_basis) with integer tuples, or None when
    there is no integral solution.  kernel_basis spans {y : M y = 0}.
    """
    solver = IntSolver(m)
    part = solver.solve(c)
    if part is None:
        return None
    return part, solver.kernel


def int_kernel(m):
    """Integer basis of {y : M y = 0}."""
    res = int_solve_right(m, (0,) * len(m)) if m else ((), [])
    assert res is not None
    return res[1]
