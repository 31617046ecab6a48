"""Ice quivers with potentials and their decorated representations.

Everything acts on explicit representations: the Jacobian algebra is
realized only through truncated projective modules (paths of bounded
length modulo the cyclic-derivative relations), with stabilization checks
instead of Groebner machinery.  Characters are computed by counting
quotient-Grassmannian points over several primes and interpolating the
counting polynomial, evaluated at 1.
"""

import random
from fractions import Fraction
from itertools import product

from .laurent import LaurentPoly
from .seeds import y_variables


class TruncationError(RuntimeError):
    """Raised when dimensions keep changing at the path-length bound."""


class InterpolationError(RuntimeError):
    """Raised when finite-field point counts are not polynomial in q."""


# -- potentials ------------------------------------------------------------


class Potential:
    """Formal rational combination of oriented cycles, up to rotation."""

    def __init__(self, quiver, terms=()):
        self.quiver = quiver
        combined = {}
        for cycle, coeff in terms:
            cycle = tuple(cycle)
            self._check_cycle(quiver, cycle)
            key = min(cycle[i:] + cycle[:i] for i in range(len(cycle)))
            combined[key] = combined.get(key, Fraction(0)) + Fraction(coeff)
        self.terms = {c: k for c, k in combined.items() if k}

    @staticmethod
    def _check_cycle(quiver, cycle):
        if not cycle:
            raise ValueError("empty cycle")
        arrows = quiver.arrows
        for a in cycle:
            if not 0 <= a < len(arrows):
                raise ValueError(f"no arrow with index {a}")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if arrows[a][1] != arrows[b][0]:
                raise ValueError("terms of a potential must be oriented cycles")

    def is_zero(self):
        return not self.terms

    def delete_vertices(self, dead):
        """Send all arrows at the dead vertices to zero (restriction W_v)."""
        dead = set(dead)
        arrows = self.quiver.arrows
        kept = []
        for cycle, coeff in self.terms.items():
            if all(arrows[a][0] not in dead and arrows[a][1] not in dead
                   for a in cycle):
                kept.append((cycle, coeff))
        return kept

    def to_json(self):
        return [[list(c), k.numerator, k.denominator]
                for c, k in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, quiver, data):
        return cls(quiver, [(tuple(c), Fraction(num, den))
                            for c, num, den in data])


def cyclic_derivative(potential, arrow):
    """d/d(arrow) of the potential: paths from h(arrow) to t(arrow)."""
    out = {}
    for cycle, coeff in potential.terms.items():
        d = len(cycle)
        for k in range(d):
            if cycle[k] == arrow:
                path = cycle[k + 1:] + cycle[:k]
                out[path] = out.get(path, Fraction(0)) + coeff
    return {p: c for p, c in out.items() if c}


# -- exact linear algebra on row spaces -------------------------------------


def _rref(rows):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _reduce_vector(v, rref_rows, pivots):
    v = [Fraction(x) for x in v]
    for row, c in zip(rref_rows, pivots):
        if v[c] != 0:
            f = v[c]
            v = [x - f * y for x, y in zip(v, row)]
    return v


# -- truncated projective modules -------------------------------------------


class ProjectiveSpace:
    """Right modules e_v J for J = k(quiver)/(dW), paths truncated at L.

    basis[(v, w)] lists the quotient-basis paths from v to w.  Arrow
    action concatenates and reduces modulo the relation subspace.
    """

    MAX_PATHS = 200000

    def __init__(self, quiver, potential, L):
        self.quiver = quiver
        self.L = L
        arrows = quiver.arrows
        out_arrows = {v: [] for v in quiver.vertices}
        for i, (t, h) in enumerate(arrows):
            out_arrows[t].append(i)
        # all paths of length <= L grouped by (start, end)
        self.paths = {}
        total = 0
        for v in quiver.vertices:
            frontier = [((), v)]
            self._add_path(v, v, ())
            for _ in range(L):
                nxt = []
                for path, end in frontier:
                    for a in out_arrows[end]:
                        p2 = path + (a,)
                        h = arrows[a][1]
                        self._add_path(v, h, p2)
                        nxt.append((p2, h))
                        total += 1
                        if total > self.MAX_PATHS:
                            raise TruncationError(
                                "path count explosion at truncation bound")
                frontier = nxt
        self.index = {key: {p: i for i, p in enumerate(plist)}
                      for key, plist in self.paths.items()}
        self._relations = {}
        if potential is not None and not potential.is_zero():
            self._build_relations(potential)
        self.basis = {}
        for key, plist in self.paths.items():
            rr, piv = self._relations.get(key, ([], []))
            pivset = set(piv)
            self.basis[key] = [p for i, p in enumerate(plist)
                               if i not in pivset]

    def _add_path(self, v, w, path):
        self.paths.setdefault((v, w), []).append(path)

    def _build_relations(self, potential):
        arrows = self.quiver.arrows
        deriv = {}
        for a in range(len(arrows)):
            d = cyclic_derivative(potential, a)
            if d:
                deriv[a] = d
        raw = {}
        for a, d in deriv.items():
            src, dst = arrows[a][1], arrows[a][0]  # paths run h(a) -> t(a)
            for (v, w1), plist in self.paths.items():
                if w1 != src:
                    continue
                for p in plist:
                    for (w2, w), qlist in self.paths.items():
                        if w2 != dst:
                            continue
                        for q in qlist:
                            vec = {}
                            ok = True
                            for r, coeff in d.items():
                                full = p + r + q
                                if len(full) > self.L:
                                    ok = False
                                    break
                                vec[full] = vec.get(full, Fraction(0)) + coeff
                            if ok and vec:
                                raw.setdefault((v, w), []).append(vec)
        for key, vecs in raw.items():
            plist = self.paths[key]
            pidx = self.index[key]
            rows = []
            for vec in vecs:
                row = [Fraction(0)] * len(plist)
                for pth, coeff in vec.items():
                    row[pidx[pth]] += coeff
                rows.append(row)
            self._relations[key] = _rref(rows)

    def reduce(self, v, w, vec_by_path):
        """Express a path combination in quotient-basis coordinates."""
        key = (v, w)
        plist = self.paths.get(key, [])
        row = [Fraction(0)] * len(plist)
        pidx = self.index.get(key, {})
        for pth, coeff in vec_by_path.items():
            if len(pth) > self.L:
                continue
            row[pidx[pth]] += coeff
        rr, piv = self._relations.get(key, ([], []))
        if rr:
            row = _reduce_vector(row, rr, piv)
        basis = self.basis.get(key, [])
        return [row[pidx[p]] for p in basis]

    def dim(self, v, w):
        return len(self.basis.get((v, w), []))


class ProjectiveModule:
    """P(beta) = direct sum of copies of projectives, truncated at L.

    Elements are coordinate vectors over the basis {(copy, path)} grouped
    by target vertex w.
    """

    def __init__(self, space, beta):
        self.space = space
        self.beta = dict(beta)
        self.copies = []
        for v in space.quiver.vertices:
            for i in range(self.beta.get(v, 0)):
                self.copies.append((v, i))
        self.basis_at = {}
        for w in space.quiver.vertices:
            items = []
            for ci, (v, i) in enumerate(self.copies):
                for p in space.basis.get((v, w), []):
                    items.append((ci, p))
            self.basis_at[w] = items
        self.pos = {w: {bp: k for k, bp in enumerate(items)}
                    for w, items in self.basis_at.items()}

    def dim(self, w):
        return len(self.basis_at[w])

    def arrow_action_matrix(self, arrow):
        """Matrix of right multiplication by the arrow (row convention)."""
        t, h = self.space.quiver.arrows[arrow]
        rows = []
        for ci, p in self.basis_at[t]:
            v = self.copies[ci][0]
            coords = self.space.reduce(v, h, {p + (arrow,): Fraction(1)})
            row = [Fraction(0)] * self.dim(h)
            for bi, coeff in zip(self.space.basis.get((v, h), []), coords):
                if coeff:
                    row[self.pos[h][(ci, bi)]] = coeff
            rows.append(row)
        return rows

    def generator_vector(self, copy_index):
        """The lazy path of a copy, as a coordinate vector at its vertex."""
        v = self.copies[copy_index][0]
        vec = [Fraction(0)] * self.dim(v)
        vec[self.pos[v][(copy_index, ())]] = Fraction(1)
        return vec


# -- decorated representations ----------------------------------------------


class DecoratedRep:
    def __init__(self, quiver, dims, mats=None, decoration=None):
        self.quiver = quiver
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        self.mats = {}
        mats = mats or {}
        for i, (t, h) in enumerate(quiver.arrows):
            m = mats.get(i)
            if m is None:
                m = [[Fraction(0)] * self.dims[h] for _ in range(self.dims[t])]
            else:
                m = [[Fraction(x) for x in row] for row in m]
                if len(m) != self.dims[t] or \
                        (m and any(len(r) != self.dims[h] for r in m)):
                    raise ValueError(f"matrix shape mismatch on arrow {i}")
            self.mats[i] = m
        self.decoration = {v: int((decoration or {}).get(v, 0))
                           for v in quiver.vertices}

    def support(self):
        return {v for v, d in self.dims.items() if d}

    def is_mu_supported(self):
        return all(v not in self.quiver.frozen for v in self.support())

    def total_dim(self):
        return sum(self.dims.values())

    def path_matrix(self, path):
        arrows = self.quiver.arrows
        if not path:
            raise ValueError("empty path has no single matrix")
        m = self.mats[path[0]]
        for a in path[1:]:
            cols = self.dims[arrows[a][1]]
            b = self.mats[a]
            m = [[sum(row[k] * b[k][j] for k in range(len(b)))
                  for j in range(cols)] for row in m]
        return m

    def direct_sum(self, other):
        dims = {v: self.dims[v] + other.dims[v] for v in self.quiver.vertices}
        mats = {}
        for i, (t, h) in enumerate(self.quiver.arrows):
            m = [[Fraction(0)] * dims[h] for _ in range(dims[t])]
            for r in range(self.dims[t]):
                for c in range(self.dims[h]):
                    m[r][c] = self.mats[i][r][c]
            for r in range(other.dims[t]):
                for c in range(other.dims[h]):
                    m[self.dims[t] + r][self.dims[h] + c] = other.mats[i][r][c]
            mats[i] = m
        deco = {v: self.decoration[v] + other.decoration[v]
                for v in self.quiver.vertices}
        return DecoratedRep(self.quiver, dims, mats, deco)


def _matmul(a, b):
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    cols = len(b[0])
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(cols)] for i in range(len(a))]


def is_jacobian_rep(quiver, potential, rep):
    """Do all cyclic-derivative relations evaluate to zero on the rep?"""
    for a in range(len(quiver.arrows)):
        d = cyclic_derivative(potential, a)
        if not d:
            continue
        t, h = quiver.arrows[a]
        total = [[Fraction(0)] * rep.dims[t] for _ in range(rep.dims[h])]
        for path, coeff in d.items():
            if not path:
                raise ValueError("2-cycle potentials need nonempty derivatives")
            m = rep.path_matrix(path)
            for i in range(len(total)):
                for j in range(len(total[0]) if total else 0):
                    total[i][j] += coeff * m[i][j]
        if any(any(x for x in row) for row in total):
            return False
    return True


def nilpotency_degree(rep, cap=None):
    """Smallest l with all length-l path actions zero; None if > cap."""
    cap = cap if cap is not None else rep.total_dim() + 1
    quiver = rep.quiver
    # level holds the nonzero matrices of length-l paths, tagged by head
    level = []
    for i, (t, h) in enumerate(quiver.arrows):
        if rep.dims[t] and rep.dims[h] and any(any(r) for r in rep.mats[i]):
            level.append((h, rep.mats[i]))
    if not level:
        return 1 if rep.total_dim() else 0
    length = 1
    while level:
        if length > cap:
            return None
        nxt = []
        for head, m in level:
            for i, (t2, h2) in enumerate(quiver.arrows):
                if t2 != head or not rep.dims[h2]:
                    continue
                prod = _matmul(m, rep.mats[i])
                if any(any(x for x in row) for row in prod):
                    nxt.append((h2, prod))
        level = nxt
        length += 1
    return length


# -- g-vectors via minimal presentations -------------------------------------


def _top_basis(rep):
    """Lift vectors of top(M)_v = M_v / sum of arrow images."""
    out = {}
    for v in rep.quiver.vertices:
        d = rep.dims[v]
        if d == 0:
            out[v] = []
            continue
        rows = []
        for i, (t, h) in enumerate(rep.quiver.arrows):
            if h == v and rep.dims[t]:
                rows.extend(rep.mats[i])
        rr, piv = _rref(rows) if rows else ([], [])
        pivset = set(piv)
        lifts = []
        for c in range(d):
            if c not in pivset:
                e = [Fraction(0)] * d
                e[c] = Fraction(1)
                lifts.append(e)
        # reduce the lifts against the image to keep them independent mod rad
        out[v] = lifts
    return out


def g_vector_of_rep(quiver, potential, rep, L=None, max_L=12):
    """g-vector of the decorated representation via its minimal
    presentation P(beta_1) -> P(beta_0) -> M -> 0; g = beta_1 - beta_0
    plus the decoration.

    The projectives are truncated at one above the nilpotency degree of
    M, and the answer is recomputed one level higher as a stabilization
    check.
    """
    ell = nilpotency_degree(rep)
    if ell is None:
        raise TruncationError("representation is not nilpotent")
    start = ell + 1 if L is None else L
    result = None
    for trunc in (start, start + 1):
        if trunc > max_L + 1:
            raise TruncationError("truncation bound exceeded")
        beta1 = _presentation_beta1(quiver, potential, rep, trunc)
        if result is not None and beta1 != result:
            raise TruncationError(
                "presentation did not stabilize at the truncation bound")
        result = beta1
    beta1, beta0 = result
    g = {}
    for v in quiver.vertices:
        g[v] = beta1.get(v, 0) - beta0.get(v, 0) + rep.decoration[v]
    return tuple(g[v] for v in quiver.vertices)


def _presentation_beta1(quiver, potential, rep, L):
    space = ProjectiveSpace(quiver, potential, L)
    tops = _top_basis(rep)
    beta0 = {v: len(tops[v]) for v in quiver.vertices}
    pmod = ProjectiveModule(space, beta0)
    gens = []
    for v in quiver.vertices:
        for m in tops[v]:
            gens.append((v, m))
    # cover map on basis elements: (copy ci, path p) -> gens[ci] . p
    cover = {}
    for w in quiver.vertices:
        rows = []
        for ci, p in pmod.basis_at[w]:
            v, lift = gens[ci][0], gens[ci][1]
            if not p:
                vec = list(lift)
            else:
                vec = _vecmat(lift, rep.path_matrix(p))
            rows.append(vec if rep.dims[w] else [])
        cover[w] = rows
    # kernel of the cover at each vertex (left kernel of the row matrix)
    kernel = {}
    for w in quiver.vertices:
        rows = cover[w]
        n = pmod.dim(w)
        if n == 0:
            kernel[w] = []
            continue
        if rep.dims[w] == 0:
            kernel[w] = [_unit(n, i) for i in range(n)]
            continue
        kernel[w] = _left_kernel(rows)
    # K . rad at each vertex
    krad = {w: [] for w in quiver.vertices}
    actions = {i: pmod.arrow_action_matrix(i)
               for i in range(len(quiver.arrows))}
    for i, (t, h) in enumerate(quiver.arrows):
        for k in kernel[t]:
            img = _vecmat(k, actions[i])
            if any(img):
                krad[h].append(img)
    beta1 = {}
    for w in quiver.vertices:
        dk = len(kernel[w])
        dr = len(_rref(krad[w])[0]) if krad[w] else 0
        beta1[w] = dk - dr
    return beta1, beta0


def _vecmat(v, m):
    if not m:
        return []
    cols = len(m[0])
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(cols)]


def _unit(n, i):
    e = [Fraction(0)] * n
    e[i] = Fraction(1)
    return e


def _left_kernel(rows):
    """Basis of {x : x . rows = 0} for a list of row vectors."""
    n = len(rows)
    if n == 0:
        return []
    m = len(rows[0])
    # solve x A = 0  <=>  A^T x^T = 0: row reduce A^T and read free columns
    at = [[rows[i][j] for i in range(n)] for j in range(m)]
    rr, piv = _rref(at)
    pivset = set(piv)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for row, c in zip(rr, piv):
            x[c] = -row[free]
        basis.append(x)
    return basis


# -- quiver Grassmannians over finite fields ----------------------------------


PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _mat_mod(m, p):
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                raise ValueError(f"denominator divisible by {p}")
            r.append(x.numerator * pow(x.denominator, -1, p) % p)
        out.append(r)
    return out


def _subspaces_mod(d, s, p):
    """All s-dimensional subspaces of F_p^d as reduced-echelon rows."""
    if s < 0 or s > d:
        return
    if s == 0:
        yield []
        return
    from itertools import combinations
    for pivots in combinations(range(d), s):
        free_slots = []
        for i, piv in enumerate(pivots):
            for j in range(piv + 1, d):
                if j not in pivots:
                    free_slots.append((i, j))
        for values in product(range(p), repeat=len(free_slots)):
            rows = [[0] * d for _ in range(s)]
            for i, piv in enumerate(pivots):
                rows[i][piv] = 1
            for (i, j), val in zip(free_slots, values):
                rows[i][j] = val
            yield rows


def _row_space_contains(space_rows, vec, p):
    """Reduce vec against echelon rows mod p; true if it lands in them."""
    vec = list(vec)
    for row in space_rows:
        piv = next(i for i, x in enumerate(row) if x)
        if vec[piv]:
            f = vec[piv] * pow(row[piv], -1, p) % p
            vec = [(x - f * y) % p for x, y in zip(vec, row)]
    return not any(vec)


def count_subrep_tuples(rep, sub_dims, p):
    """Number of subrepresentation tuples of the given dimensions mod p."""
    quiver = rep.quiver
    verts = [v for v in quiver.vertices if rep.dims[v]]
    mats = {i: _mat_mod(rep.mats[i], p) for i in range(len(quiver.arrows))}
    choices = []
    for v in verts:
        subs = list(_subspaces_mod(rep.dims[v], sub_dims.get(v, 0), p))
        if not subs:
            return 0
        choices.append(subs)
    arrows_between = {}
    for i, (t, h) in enumerate(quiver.arrows):
        if rep.dims[t] and rep.dims[h]:
            arrows_between.setdefault((t, h), []).append(i)

    count = 0
    chosen = {}

    def ok_pair(t, h):
        for i in arrows_between.get((t, h), []):
            m = mats[i]
            for row in chosen[t]:
                img = [sum(row[a] * m[a][b] for a in range(len(row))) % p
                       for b in range(len(m[0]) if m else 0)]
                if any(img) and not _row_space_contains(chosen[h], img, p):
                    return False
                if any(img) and not chosen[h]:
                    return False
        return True

    def rec(idx):
        nonlocal count
        if idx == len(verts):
            count += 1
            return
        v = verts[idx]
        for sub in choices[idx]:
            chosen[v] = sub
            good = True
            for w in verts[:idx + 1]:
                if (v, w) in arrows_between and not ok_pair(v, w):
                    good = False
                    break
                if w != v and (w, v) in arrows_between and not ok_pair(w, v):
                    good = False
                    break
            if good:
                rec(idx + 1)
        chosen.pop(v, None)

    rec(0)
    return count


def euler_char_grassmannian(rep, e, primes=None):
    """Euler characteristic of the variety of e-dimensional quotient
    representations, by polynomial interpolation of F_p point counts.

    Counts subrepresentation tuples of complementary dimension over
    enough primes to exceed the ambient dimension bound, checks the
    extra counts against the interpolated polynomial, and evaluates at 1.
    """
    quiver = rep.quiver
    e = {v: int(e.get(v, 0)) for v in quiver.vertices}
    sub = {}
    for v in quiver.vertices:
        s = rep.dims[v] - e[v]
        if s < 0 or e[v] < 0:
            return 0
        sub[v] = s
    degree_bound = sum(e[v] * sub[v] for v in quiver.vertices)
    needed = max(degree_bound + 2, 5)
    primes = primes or PRIMES
    if needed > len(primes):
        raise InterpolationError("not enough primes for the degree bound")
    primes = primes[:needed]
    counts = [count_subrep_tuples(rep, sub, p) for p in primes]
    # Lagrange interpolation through the first degree_bound+1 points
    k = degree_bound + 1
    xs, ys = primes[:k], counts[:k]

    def poly_eval(x):
        total = Fraction(0)
        for i in range(k):
            term = Fraction(ys[i])
            for j in range(k):
                if i != j:
                    term *= Fraction(x - xs[j], xs[i] - xs[j])
            total += term
        return total

    for extra_x, extra_y in zip(primes[k:], counts[k:]):
        if poly_eval(extra_x) != extra_y:
            raise InterpolationError(
                "point counts are not polynomial of the expected degree")
    chi = poly_eval(1)
    if chi.denominator != 1:
        raise InterpolationError("interpolated value at 1 is not integral")
    return int(chi)


# -- characters ---------------------------------------------------------------


def cluster_character(seed, potential, rep, g=None):
    """C(M) = x^g sum_e chi(Gr^e(M)) y^e in the seed's own cluster."""
    quiver = seed.quiver
    if not rep.is_mu_supported():
        raise ValueError("character needs a mu-supported representation")
    if g is None:
        g = g_vector_of_rep(quiver, potential, rep)
    ys = y_variables(seed)
    out = LaurentPoly.zero(seed.nvars)
    ranges = [range(rep.dims[v] + 1) for v in quiver.mutable]
    for evec in product(*ranges):
        e = dict(zip(quiver.mutable, evec))
        chi = euler_char_grassmannian(rep, e)
        if chi == 0:
            continue
        mono = LaurentPoly.constant(seed.nvars, chi)
        for u, k in e.items():
            if k:
                mono = mono * ys[u] ** k
        out = out + mono
    # g comes in quiver order; exponent vectors follow the seed basis
    gb = [0] * seed.nvars
    for i, v in enumerate(quiver.vertices):
        gb[seed.basis_index[v]] = g[i]
    return LaurentPoly.monomial(gb) * out


def sample_presentation(quiver, potential, g, rng, L):
    """A random presentation in PHom(g) and its cokernel representation.

    Entries of the presentation matrix are path combinations with
    coefficients sampled from a 2^31-sized range; the cokernel is
    computed inside the truncated projective module and returned as an
    explicit representation together with its dimension vector.
    """
    space = ProjectiveSpace(quiver, potential, L)
    beta1 = {v: max(g[i], 0) for i, v in enumerate(quiver.vertices)}
    beta0 = {v: max(-g[i], 0) for i, v in enumerate(quiver.vertices)}
    pmod = ProjectiveModule(space, beta0)
    # image generators: one element of P(beta0) per copy of P(beta1)
    img_vecs = {w: [] for w in quiver.vertices}
    for v in quiver.vertices:
        for _ in range(beta1[v]):
            at_v = [Fraction(0)] * pmod.dim(v)
            for ci, (u, i) in enumerate(pmod.copies):
                for pth in space.basis.get((u, v), []):
                    coeff = rng.randrange(0, 2 ** 31)
                    if coeff:
                        at_v[pmod.pos[v][(ci, pth)]] += coeff
            img_vecs[v].append(at_v)
    # close the image under the arrow action
    actions = {i: pmod.arrow_action_matrix(i)
               for i in range(len(quiver.arrows))}
    spans = {w: _rref(img_vecs[w])[0] if img_vecs[w] else []
             for w in quiver.vertices}
    changed = True
    while changed:
        changed = False
        for i, (t, h) in enumerate(quiver.arrows):
            new_rows = []
            for k in spans[t]:
                img = _vecmat(k, actions[i])
                if any(img):
                    new_rows.append(img)
            if new_rows:
                combined, _ = _rref(spans[h] + new_rows)
                if len(combined) != len(spans[h]):
                    spans[h] = combined
                    changed = True
    # cokernel: quotient coordinates are the non-pivot basis positions
    quot_basis = {}
    rrefs = {}
    for w in quiver.vertices:
        rr, piv = _rref(spans[w]) if spans[w] else ([], [])
        rrefs[w] = (rr, piv)
        pivset = set(piv)
        quot_basis[w] = [i for i in range(pmod.dim(w)) if i not in pivset]
    dims = {w: len(quot_basis[w]) for w in quiver.vertices}
    mats = {}
    for i, (t, h) in enumerate(quiver.arrows):
        m = []
        for bi in quot_basis[t]:
            vec = _unit(pmod.dim(t), bi)
            img = _vecmat(vec, actions[i])
            rr, piv = rrefs[h]
            img = _reduce_vector(img, rr, piv) if rr else img
            m.append([img[j] for j in quot_basis[h]])
        mats[i] = m
    rep = DecoratedRep(quiver, dims, mats)
    return rep


class GenericCharacterResult:
    def __init__(self, poly, mu_supported, undetermined, votes):
        self.poly = poly
        self.mu_supported = mu_supported
        self.undetermined = undetermined
        self.votes = votes


def generic_character(seed, potential, g, trials=5, rng=None, max_L=8):
    """Character of a general presentation with the given g-vector.

    Samples `trials` presentations, computes cokernels at increasing
    truncation until the dimension vector stabilizes, takes characters,
    and majority-votes; disagreement is flagged rather than resolved.
    """
    rng = rng or random.Random(91)
    quiver = seed.quiver
    g = tuple(g)
    results = []
    for _ in range(trials):
        seed_rng = random.Random(rng.randrange(2 ** 62))
        rep = None
        prev_dims = None
        for L in range(2, max_L + 1):
            trial_rng = random.Random(seed_rng.randrange(2 ** 62))
            cand = sample_presentation(quiver, potential, g, trial_rng, L)
            if prev_dims is not None and cand.dims == prev_dims:
                rep = cand
                break
            prev_dims = cand.dims
        if rep is None:
            results.append(None)
            continue
        mu = rep.is_mu_supported()
        if not mu:
            results.append((None, False))
            continue
        poly = cluster_character(seed, potential, rep, g=_reorder_g(seed, g))
        results.append((poly, True))
    votes = {}
    for r in results:
        key = None if r is None else (r[0], r[1])
        votes[key] = votes.get(key, 0) + 1
    best, best_count = max(votes.items(), key=lambda kv: kv[1])
    undetermined = best is None or best_count * 2 <= trials
    if best is None:
        return GenericCharacterResult(None, False, True, votes)
    poly, mu = best
    return GenericCharacterResult(poly, mu, undetermined, votes)


def _reorder_g(seed, g):
    # g comes indexed by the seed basis; the character wants quiver order
    return tuple(g[seed.basis_index[v]] for v in seed.quiver.vertices)


# -- restriction and induction -----------------------------------------------


def arrow_correspondence(big, small):
    """Indices of the big quiver's arrows that survive in the small one."""
    alive = set(small.index)
    kept = [i for i, (t, h) in enumerate(big.arrows)
            if t in alive and h in alive]
    if len(kept) != len(small.arrows):
        raise ValueError("quivers are not related by vertex deletion")
    for k, (t, h) in zip(kept, small.arrows):
        if big.arrows[k] != (t, h):
            raise ValueError("arrow order mismatch between the quivers")
    return kept


def restrict_rep(big_quiver, small_rep):
    """Extension by zeros from a vertex-deleted subquiver to the big one."""
    kept = arrow_correspondence(big_quiver, small_rep.quiver)
    dims = {v: small_rep.dims.get(v, 0) for v in big_quiver.vertices}
    mats = {}
    for pos, i in enumerate(kept):
        mats[i] = small_rep.mats[pos]
    deco = {v: small_rep.decoration.get(v, 0) for v in big_quiver.vertices}
    return DecoratedRep(big_quiver, dims, mats, deco)


def induce_rep(small_quiver, big_rep):
    """Quotient by the subrepresentation generated at the deleted vertices."""
    big = big_rep.quiver
    kept = arrow_correspondence(big, small_quiver)
    dead = [v for v in big.vertices if v not in small_quiver.index]
    spans = {v: [] for v in big.vertices}
    for v in dead:
        spans[v] = [_unit(big_rep.dims[v], i) for i in range(big_rep.dims[v])]
    changed = True
    while changed:
        changed = False
        for i, (t, h) in enumerate(big.arrows):
            new_rows = [r for r in
                        (_vecmat(k, big_rep.mats[i]) for k in spans[t])
                        if any(r)]
            if new_rows:
                combined, _ = _rref(spans[h] + new_rows)
                if len(combined) != len(spans[h]):
                    spans[h] = combined
                    changed = True
    rrefs = {}
    quot = {}
    for v in big.vertices:
        rr, piv = _rref(spans[v]) if spans[v] else ([], [])
        rrefs[v] = (rr, piv)
        pivset = set(piv)
        quot[v] = [i for i in range(big_rep.dims[v]) if i not in pivset]
    dims = {v: len(quot[v]) for v in small_quiver.vertices}
    mats = {}
    for pos, i in enumerate(kept):
        t, h = big.arrows[i]
        m = []
        for bi in quot[t]:
            vec = _unit(big_rep.dims[t], bi)
            img = _vecmat(vec, big_rep.mats[i])
            rr, piv = rrefs[h]
            img = _reduce_vector(img, rr, piv) if rr else img
            m.append([img[j] for j in quot[h]])
        mats[pos] = m
    deco = {v: big_rep.decoration.get(v, 0) for v in small_quiver.vertices}
    return DecoratedRep(small_quiver, dims, mats, deco)


def enumerate_mu_supported(seed, potential, cone, sigma_rows, fiber_target,
                           trials=3, rng=None):
    """Lattice points of the fiber whose generic cokernel is mu-supported."""
    from .cones import lattice_points

    rng = rng or random.Random(17)
    _, points = lattice_points(cone, sigma_rows, fiber_target)
    out = []
    for g_quiver in points:
        g_basis = tuple(g_quiver[cone.labels.index(v)] for v in seed.basis)
        res = generic_character(seed, potential, g_basis, trials=trials,
                                rng=rng)
        if res.mu_supported and not res.undetermined:
            out.append(g_basis)
    return out
