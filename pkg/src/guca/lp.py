"""Exact rational linear programming (small scale).

A plain two-phase simplex with Bland's rule over `Fraction` entries.  The
systems solved here are tiny (tens of rows/columns), so clarity wins over
speed; there is deliberately no floating point anywhere.
"""

from fractions import Fraction


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    basis[row] = col


def simplex_min(c, a, b):
    """Minimize c.x subject to a x = b, x >= 0.

    Returns (status, x, value) where status is "optimal", "infeasible"
    or "unbounded"; x is a tuple of Fractions when optimal.
    """
    m = len(a)
    n = len(c)
    a = [[Fraction(x) for x in row] for row in a]
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]

    # phase 1: artificial variables n..n+m-1
    tab = [a[i] + [Fraction(int(j == i)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for i in range(m):
        obj = [x - y for x, y in zip(obj, tab[i])]

    def run(obj, ncols):
        while True:
            col = next((j for j in range(ncols) if obj[j] < 0), None)
            if col is None:
                return "optimal", obj
            ratios = [(tab[i][-1] / tab[i][col], basis[i], i)
                      for i in range(m) if tab[i][col] > 0]
            if not ratios:
                return "unbounded", obj
            _, _, row = min(ratios)
            _pivot(tab, basis, row, col)
            f = obj[col]
            obj = [x - f * y for x, y in zip(obj, tab[row])]

    status, obj = run(obj, n + m)
    if -obj[-1] > 0:
        return "infeasible", None, None
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    # phase 2 (column scan stays below n, so artificials cannot re-enter)
    obj = list(c) + [Fraction(0)] * m + [Fraction(0)]
    for i in range(m):
        if basis[i] < n and obj[basis[i]] != 0:
            f = obj[basis[i]]
            obj = [x - f * y for x, y in zip(obj, tab[i])]
    status, obj = run(obj, n)
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][-1]
    return "optimal", tuple(x), -obj[-1]


def nonneg_combination_exists(vectors, target):
    """Is target a nonnegative rational combination of the given vectors?"""
    if not vectors:
        return all(x == 0 for x in target)
    d = len(target)
    a = [[vectors[j][i] for j in range(len(vectors))] for i in range(d)]
    status, _, _ = simplex_min([Fraction(0)] * len(vectors), a, list(target))
    return status == "optimal"


def cone_is_trivial(ineqs, dim):
    """Does {t in R^dim : M t >= 0} contain only the origin?

    `ineqs` are the rows of M.  Decided exactly by maximizing +-t_i over
    the cone intersected with t_i <= 1.
    """
    if dim == 0:
        return True
    for i in range(dim):
        for sign in (1, -1):
            # variables: u (dim), v (dim), slacks s (len ineqs), w (1)
            n = 2 * dim + len(ineqs) + 1
            a = []
            b = []
            for row in ineqs:
                a.append(list(row) + [-x for x in row]
                         + [0] * len(ineqs) + [0])
            for k in range(len(ineqs)):
                a[k][2 * dim + k] = -1
                b.append(0)
            bound = [0] * n
            bound[i] = sign
            bound[dim + i] = -sign
            bound[-1] = 1
            a.append(bound)
            b.append(1)
            c = [0] * n
            c[i] = -sign
            c[dim + i] = sign
            status, _, value = simplex_min(c, a, b)
            if status == "unbounded" or (status == "optimal" and -value > 0):
                return False
    return True
