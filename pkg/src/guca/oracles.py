"""Independent combinatorial oracles: LR tableaux, Kostka numbers,
Kostant's partition function, and the unipotent-cone correspondence.

These are deliberately brute force (direct enumeration of tableaux and
partitions) so they can check the polytope counts without sharing any
code with them.
"""

from itertools import product

from . import linalg
from .cones import lattice_points
from .lp import nonneg_combination_exists


def _is_partition(p):
    return all(a >= b for a, b in zip(p, p[1:])) and all(x >= 0 for x in p)


def _clean(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def lr_oracle(lam, mu, nu):
    """c^lam_{mu,nu} by enumerating LR skew tableaux of shape lam/mu.

    Fillings of lam/mu with content nu, weakly increasing rows, strictly
    increasing columns, whose reverse reading word is a lattice word.
    Rows are filled top to bottom and right to left, which is exactly the
    reverse reading order, so the lattice condition can be enforced on
    running content counts.
    """
    lam, mu, nu = _clean(lam), _clean(mu), _clean(nu)
    for p in (lam, mu, nu):
        if not _is_partition(p):
            raise ValueError("malformed partition")
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    rows = len(lam)
    if rows == 0:
        return 1 if not nu else 0
    mu = mu + [0] * (rows - len(mu))
    if any(m > l for m, l in zip(mu, lam)):
        return 0
    nparts = len(nu)
    grid = [[0] * lam[r] for r in range(rows)]
    count = 0

    def fill(r, c, content):
        nonlocal count
        if r == rows:
            count += 1
            return
        if c < mu[r]:
            fill(r + 1, (lam[r + 1] - 1) if r + 1 < rows else -1, content)
            return
        hi = nparts
        if c + 1 < lam[r]:
            hi = grid[r][c + 1]
        lo = 1
        if r > 0 and c < lam[r - 1] and c >= mu[r - 1]:
            lo = grid[r - 1][c] + 1
        for val in range(lo, hi + 1):
            if content[val - 1] >= nu[val - 1]:
                continue
            if val > 1 and content[val - 2] <= content[val - 1]:
                continue
            content[val - 1] += 1
            grid[r][c] = val
            fill(r, c - 1, content)
            content[val - 1] -= 1
        grid[r][c] = 0

    fill(0, lam[0] - 1, [0] * nparts)
    return count


def kostka_oracle(lam, mu):
    """K_lam^mu: semistandard tableaux of shape lam and content mu."""
    lam = _clean(lam)
    if not _is_partition(lam):
        raise ValueError("malformed partition")
    mu = list(mu)
    if any(x < 0 for x in mu):
        raise ValueError("malformed content")
    if sum(lam) != sum(mu):
        return 0
    rows = len(lam)
    if rows == 0:
        return 1
    nvals = len(mu)
    count = 0
    current = [[] for _ in range(rows)]

    def fill(r, c, content):
        nonlocal count
        if r == rows:
            count += 1
            return
        if c == lam[r]:
            fill(r + 1, 0, content)
            return
        lo = current[r][-1] if c > 0 else 1
        for val in range(lo, nvals + 1):
            if content[val - 1] >= mu[val - 1]:
                continue
            if r > 0 and c < lam[r - 1] and current[r - 1][c] >= val:
                continue
            content[val - 1] += 1
            current[r].append(val)
            fill(r, c + 1, content)
            current[r].pop()
            content[val - 1] -= 1

    fill(0, 0, [0] * nvals)
    return count


def type_a_positive_roots(n):
    """Positive roots of A_{n-1} as rows e_i - e_j (i < j) in Z^n."""
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i] = 1
            r[j] = -1
            roots.append(tuple(r))
    return roots


def kostant_oracle(target, n, roots=None):
    """Number of ways to write target as a nonnegative sum of positive
    roots of A_{n-1}; target is in Z^n coordinates."""
    roots = [tuple(r) for r in (roots or type_a_positive_roots(n))]
    target = tuple(target)
    if sum(target) != 0:
        return 0
    bound = sum(x for x in target if x > 0)

    def prefix_ok(rest):
        # every positive-root flow has nonnegative prefix sums
        s = 0
        for x in rest:
            s += x
            if s < 0:
                return False
        return True

    count = 0

    def rec(i, rest):
        nonlocal count
        if i == len(roots):
            if all(x == 0 for x in rest):
                count += 1
            return
        root = roots[i]
        for h in range(bound + 1):
            new = tuple(x - h * y for x, y in zip(rest, root))
            if not prefix_ok(new):
                break
            rec(i + 1, new)

    if not prefix_ok(target):
        return 0
    rec(0, target)
    return count


def verify_kostant_correspondence(n, hive_builder=None, samples=20, rng=None):
    """Check the unipotent-cone story at size n.

    The cone of the twice-projected hive has exactly N = n(n-1)/2 facet
    normals; writing them as the columns of H, the rows of H^{-1} sigma
    are required to be the positive roots of A_{n-1} (that is the matrix
    identity H Phi = sigma), H must be totally unimodular, and fiber
    counts must agree with the partition-function oracle.
    """
    import random

    from .hive import build_flatflat, hive_cone

    rng = rng or random.Random(20240 + n)
    seed = (hive_builder or build_flatflat)(n)
    cone = hive_cone(seed)
    order = cone.labels
    facets = cone.facet_rows()
    nverts = len(order)
    report = {"n": n, "num_facets": len(facets), "num_vertices": nverts}
    if len(facets) != nverts:
        report["ok"] = False
        report["reason"] = "cone is not simplicial of full rank"
        return report
    h = [[row[i] for row in facets] for i in range(nverts)]  # H: q x N
    sigma_rows = seed.config.matrix(order)
    hinv = linalg.inverse(h)
    phi = linalg.mat_mul(hinv, sigma_rows)
    phi_int = []
    for row in phi:
        if any(x.denominator != 1 for x in row):
            report["ok"] = False
            report["reason"] = "H^{-1} sigma is not integral"
            return report
        phi_int.append(tuple(int(x) for x in row))
    roots = set(type_a_positive_roots(seed.rep_quiver.n))
    report["phi_rows_are_positive_roots"] = set(phi_int) == roots
    report["h_phi_equals_sigma"] = \
        linalg.mat_mul(h, [list(r) for r in phi_int]) == \
        [list(r) for r in sigma_rows]
    report["totally_unimodular"] = _totally_unimodular(h, exact=nverts <= 6,
                                                       rng=rng)
    agree = True
    for _ in range(samples):
        hs = [rng.randrange(0, 3) for _ in range(len(phi_int))]
        target = [0] * seed.rep_quiver.n
        for c, root in zip(hs, phi_int):
            for k in range(len(target)):
                target[k] += c * root[k]
        cnt, _ = lattice_points(cone, sigma_rows, tuple(target))
        oracle = kostant_oracle(tuple(target), seed.rep_quiver.n)
        if cnt != oracle:
            agree = False
            report["counterexample"] = {"target": target, "cone": cnt,
                                        "oracle": oracle}
            break
    report["fiber_counts_agree"] = agree
    zero = (0,) * seed.rep_quiver.n
    cnt0, _ = lattice_points(cone, sigma_rows, zero)
    report["zero_fiber"] = (cnt0, kostant_oracle(zero, seed.rep_quiver.n))
    report["ok"] = all([report["phi_rows_are_positive_roots"],
                        report["h_phi_equals_sigma"],
                        report["totally_unimodular"], agree,
                        report["zero_fiber"] == (1, 1)])
    return report


def _totally_unimodular(m, exact=True, rng=None, samples=300):
    from itertools import combinations

    rows = len(m)
    cols = len(m[0])
    sizes = range(1, min(rows, cols) + 1)
    if exact:
        for k in sizes:
            for ri in combinations(range(rows), k):
                for ci in combinations(range(cols), k):
                    sub = [[m[i][j] for j in ci] for i in ri]
                    if linalg.det(sub) not in (-1, 0, 1):
                        return False
        return True
    for _ in range(samples):
        k = rng.randrange(1, min(rows, cols) + 1)
        ri = sorted(rng.sample(range(rows), k))
        ci = sorted(rng.sample(range(cols), k))
        sub = [[m[i][j] for j in ci] for i in ri]
        if linalg.det(sub) not in (-1, 0, 1):
            return False
    return True
