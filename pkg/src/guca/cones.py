"""Exact rational cone systems and lattice-point enumeration of fibers.

A `ConeSystem` is a list of integer inequality rows a with a . g >= 0
(plus optional equality rows).  Fibers are cut out by g . sigma = target
for a weight matrix sigma; enumeration substitutes an integer solution of
the equalities, checks that the recession cone is trivial, and scans the
remaining free coordinates with Fourier-Motzkin interval bounds.
"""

from fractions import Fraction
from math import ceil, floor, gcd

from . import linalg, lp


class UnboundedFiberError(ValueError):
    pass


class ConeSystem:
    def __init__(self, dim, ineqs, eqs=(), labels=None):
        self.dim = dim
        self.ineqs = []
        seen = set()
        for row in ineqs:
            row = _normalize_ray(tuple(row))
            if len(row) != dim:
                raise ValueError("inequality length mismatch")
            if row not in seen:
                seen.add(row)
                self.ineqs.append(row)
        self.eqs = [tuple(r) for r in eqs]
        self.labels = list(labels) if labels else None

    def contains(self, g):
        return all(linalg.dot(a, g) >= 0 for a in self.ineqs) and \
            all(linalg.dot(a, g) == 0 for a in self.eqs)

    def facet_rows(self):
        """Irredundant subset of the inequality rows (exact Farkas test)."""
        rows = list(self.ineqs)
        keep = []
        for i, row in enumerate(rows):
            others = [r for j, r in enumerate(rows) if j != i]
            # row is redundant iff it is a nonneg combination of the others
            if not lp.nonneg_combination_exists(others, row):
                keep.append(row)
        return keep

    def to_json(self):
        return {"dim": self.dim,
                "ineqs": [list(r) for r in self.ineqs],
                "eqs": [list(r) for r in self.eqs],
                "labels": self.labels}

    @classmethod
    def from_json(cls, data):
        return cls(data["dim"], data["ineqs"], data.get("eqs", ()),
                   labels=data.get("labels"))


def _normalize_ray(row):
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g > 1:
        row = tuple(x // g for x in row)
    return row


def _fm_levels(rows, k):
    """Fourier-Motzkin elimination; rows are (coeffs, rhs): coeffs.t >= rhs.

    Returns levels[i] = rows in variables t_1..t_i with nonzero t_i
    coefficient (used to bound t_i), and levels[0] = constant rows.
    """
    def norm(coeffs, rhs):
        g = 0
        for x in coeffs:
            g = gcd(g, abs(x))
        if g > 1:
            q, r = divmod(rhs, g)
            coeffs = tuple(x // g for x in coeffs)
            rhs = q + (1 if r else 0)
        return coeffs, rhs

    levels = [None] * (k + 1)
    cur = {norm(tuple(c), r) for c, r in rows}
    for i in range(k, 0, -1):
        here = []
        below = set()
        pos = []
        neg = []
        for coeffs, rhs in cur:
            c = coeffs[i - 1]
            if c == 0:
                below.add((coeffs, rhs))
            else:
                here.append((coeffs, rhs))
                (pos if c > 0 else neg).append((coeffs, rhs))
        for cp, rp in pos:
            for cn, rn in neg:
                a, b = cp[i - 1], -cn[i - 1]
                comb = tuple(b * x + a * y for x, y in zip(cp, cn))
                below.add(norm(comb[:i - 1] + (0,) * (k - i + 1),
                               b * rp + a * rn))
        levels[i] = here
        cur = below
    levels[0] = sorted(cur)
    return levels


def _scan(levels, k):
    if any(r > 0 for c, r in levels[0]):
        return
    prefix = [0] * k

    def rec(level):
        if level > k:
            yield tuple(prefix)
            return
        lo, hi = None, None
        for coeffs, rhs in levels[level]:
            c = coeffs[level - 1]
            s = rhs - sum(coeffs[j] * prefix[j] for j in range(level - 1))
            bound = Fraction(s, c)
            if c > 0:
                b = ceil(bound)
                lo = b if lo is None else max(lo, b)
            else:
                b = floor(bound)
                hi = b if hi is None else min(hi, b)
        if lo is None or hi is None:
            raise UnboundedFiberError("free coordinate during scan")
        for t in range(lo, hi + 1):
            prefix[level - 1] = t
            yield from rec(level + 1)

    yield from rec(1)


class FiberEnumerator:
    """Reusable enumerator for fibers of one cone over one weight matrix.

    The integer factorization of the equality system and the recession
    cone check are independent of the target weight, so sweeping many
    fibers of the same grading costs one setup.
    """

    def __init__(self, cone, sigma_rows):
        if len(sigma_rows) != cone.dim:
            raise ValueError("weight matrix does not match cone dimension")
        self.cone = cone
        self.q = cone.dim
        self.wdim = len(sigma_rows[0]) if sigma_rows else 0
        m = linalg.transpose([list(r) for r in sigma_rows])
        for eq in cone.eqs:
            m.append(list(eq))
        self.solver = linalg.IntSolver(m)
        self.kernel = self.solver.kernel
        self.k = len(self.kernel)
        self.proj_rows = [(tuple(linalg.dot(a, col) for col in self.kernel), a)
                          for a in cone.ineqs]
        if self.k:
            dirs = {coeffs for coeffs, _ in self.proj_rows}
            self.bounded = lp.cone_is_trivial(sorted(dirs), self.k)
        else:
            self.bounded = True

    def points(self, target):
        if not self.bounded:
            raise UnboundedFiberError("fiber polytope is unbounded")
        c = list(target) + [0] * len(self.cone.eqs)
        g0 = self.solver.solve(c)
        if g0 is None:
            return []
        if self.k == 0:
            return [tuple(g0)] if self.cone.contains(g0) else []
        rows = [(coeffs, -linalg.dot(a, g0)) for coeffs, a in self.proj_rows]
        levels = _fm_levels(rows, self.k)
        nt = linalg.transpose([list(v) for v in self.kernel])
        points = []
        for t in _scan(levels, self.k):
            g = list(g0)
            for j in range(self.q):
                g[j] += sum(nt[j][i] * t[i] for i in range(self.k))
            points.append(tuple(g))
        points.sort()
        return points

    def count(self, target):
        return len(self.points(target))


def lattice_points(cone, sigma_rows, target):
    """Integer points of {A g >= 0, g . sigma = target}; (count, points).

    sigma_rows is the weight matrix (one row per coordinate of g) and
    target a vector in the weight lattice.  Raises UnboundedFiberError
    when the recession cone is nontrivial.
    """
    pts = FiberEnumerator(cone, sigma_rows).points(target)
    return len(pts), pts
