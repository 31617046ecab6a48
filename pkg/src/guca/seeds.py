"""Seeds, weight configurations, and the projection maps between them.

A `Seed` carries an ice quiver together with one Laurent polynomial per
vertex, always expressed in the *initial* extended cluster (the seed the
object was created from).  Mutation rewrites a single entry through the
exchange relation; the division is checked to be exact.

A `WeightConfig` assigns a lattice weight to every vertex subject to
B . sigma = 0, and mutates alongside the quiver.
"""

from collections import deque

from . import linalg
from .laurent import ExactDivisionError, LaurentPoly


class WeightConfig:
    def __init__(self, lattice, sigma, check=None):
        self.lattice = lattice
        self.sigma = {v: tuple(w) for v, w in sigma.items()}
        for w in self.sigma.values():
            if len(w) != lattice.n:
                raise ValueError("weight length does not match lattice rank")
        if check is not None:
            self.require_valid(check)

    def __getitem__(self, v):
        return self.sigma[v]

    def require_valid(self, quiver):
        """Check B . sigma = 0, i.e. arrow sources and targets balance."""
        for u in quiver.mutable:
            if self._imbalance(quiver, u) != (0,) * self.lattice.n:
                raise ValueError(f"weight configuration unbalanced at {u!r}")

    def is_valid(self, quiver):
        z = (0,) * self.lattice.n
        return all(self._imbalance(quiver, u) == z for u in quiver.mutable)

    def _imbalance(self, quiver, u):
        total = (0,) * self.lattice.n
        for t, h in quiver.arrows:
            if h == u:
                total = linalg.vec_add(total, self.sigma[t])
            if t == u:
                total = linalg.vec_sub(total, self.sigma[h])
        return total

    def mutate(self, quiver, u):
        """sigma'(u) = sum_{u->w} sigma(w) - sigma(u), all else unchanged."""
        if quiver.is_frozen(u):
            raise ValueError(f"cannot mutate frozen vertex {u!r}")
        total = (0,) * self.lattice.n
        for t, h in quiver.arrows:
            if t == u:
                total = linalg.vec_add(total, self.sigma[h])
        new = dict(self.sigma)
        new[u] = linalg.vec_sub(total, self.sigma[u])
        return WeightConfig(self.lattice, new)

    def restrict(self, vertices):
        return WeightConfig(self.lattice,
                            {v: self.sigma[v] for v in vertices})

    def matrix(self, order):
        return [list(self.sigma[v]) for v in order]

    def to_json(self):
        return {v: list(w) for v, w in self.sigma.items()}


class ConfigPair:
    """An ice quiver with a weight configuration (no cluster variables).

    This is the state the vertex-removal pipeline walks on; seed mutation
    with full Laurent data is not needed there.
    """

    def __init__(self, quiver, config):
        self.quiver = quiver
        self.config = config

    def mutate(self, u):
        return ConfigPair(self.quiver.mutate(u), self.config.mutate(self.quiver, u))

    def mutate_seq(self, seq):
        s = self
        for u in seq:
            s = s.mutate(u)
        return s

    def key(self):
        return (self.quiver.canonical_key(),
                tuple(sorted(self.config.sigma.items())))


class Seed:
    def __init__(self, quiver, cluster, basis, history=()):
        self.quiver = quiver
        self.basis = list(basis)
        self.cluster = dict(cluster)
        self.history = list(history)
        self.basis_index = {v: i for i, v in enumerate(self.basis)}

    @classmethod
    def initial(cls, quiver):
        basis = list(quiver.vertices)
        n = len(basis)
        cluster = {v: LaurentPoly.variable(i, n) for i, v in enumerate(basis)}
        return cls(quiver, cluster, basis)

    @property
    def nvars(self):
        return len(self.basis)

    def x(self, v):
        return self.cluster[v]

    def exchange_parts(self, u):
        """The two monomial products of the exchange relation at u."""
        n = self.nvars
        left = LaurentPoly.one(n)
        right = LaurentPoly.one(n)
        for t, h in self.quiver.arrows:
            if h == u:
                left = left * self.cluster[t]
            elif t == u:
                right = right * self.cluster[h]
        return left, right

    def exchange_monomials_initial(self, u):
        """Exchange binomial of the *initial* seed at u, as formal monomials."""
        n = self.nvars
        lo = [0] * n
        hi = [0] * n
        for t, h in self.quiver.arrows:
            if h == u:
                lo[self.basis_index[t]] += 1
            elif t == u:
                hi[self.basis_index[h]] += 1
        return LaurentPoly.monomial(lo) + LaurentPoly.monomial(hi)

    def mutate(self, u):
        if self.quiver.is_frozen(u):
            raise ValueError(f"cannot mutate frozen vertex {u!r}")
        left, right = self.exchange_parts(u)
        try:
            new_var = (left + right).divexact(self.cluster[u])
        except ExactDivisionError as exc:
            raise ExactDivisionError(
                f"exchange relation at {u!r} did not divide exactly; "
                "this contradicts the Laurent phenomenon and indicates a bug"
            ) from exc
        cluster = dict(self.cluster)
        cluster[u] = new_var
        return Seed(self.quiver.mutate(u), cluster, self.basis,
                    self.history + [u])

    def mutate_seq(self, seq):
        s = self
        for u in seq:
            s = s.mutate(u)
        return s

    def b_matrix(self):
        return self.quiver.b_matrix()


def y_variables(seed):
    """y_u = x^{-b_u} for each mutable u, in the seed's own cluster."""
    b = seed.b_matrix()
    out = {}
    for i, u in enumerate(seed.quiver.mutable):
        exps = [0] * seed.nvars
        for j, v in enumerate(seed.quiver.vertices):
            exps[seed.basis_index[v]] = -b[i][j]
        out[u] = LaurentPoly.monomial(exps)
    return out


def g_vector(z, seed):
    """The g-vector of z = x^g F(y) with F not divisible by any y_i.

    Requires B of full rank.  Every pair of exponents of z must differ by
    an integral nonnegative combination of the rows of -B; the minimal
    shift normalizes F.  Returns None when z is not of this shape.
    """
    b = seed.b_matrix()
    p = len(b)
    if linalg.rank(b) != p:
        raise ValueError("g-vectors need a full-rank B-matrix")
    # rows of B in the seed basis order
    rows = []
    for i in range(p):
        row = [0] * seed.nvars
        for j, v in enumerate(seed.quiver.vertices):
            row[seed.basis_index[v]] = b[i][j]
        rows.append(row)
    exps = z.exponents()
    if not exps:
        return None
    e0 = exps[0]
    bt = linalg.transpose(rows)  # nvars x p
    sols = []
    for e in exps:
        d = linalg.vec_sub(e0, e)
        s = linalg.rat_solve_right(bt, d)
        if s is None or any(x.denominator != 1 for x in s):
            return None
        sols.append(tuple(int(x) for x in s))
    m0 = tuple(-min(s[i] for s in sols) for i in range(p))
    g = list(e0)
    for i in range(p):
        if m0[i]:
            for j in range(seed.nvars):
                g[j] += m0[i] * rows[i][j]
    return tuple(g)


def upper_membership(z, seed):
    """Membership in the upper bound at the seed: Laurent in the initial
    cluster and in all p adjacent clusters, polynomial in frozen variables.

    z must be given in the seed's initial cluster.  The adjacent-cluster
    test uses that z lies in L_{mu_u(x)} iff each coefficient of a
    negative power x_u^{-k} is divisible by the k-th power of the exchange
    binomial at u.
    """
    frozen_idx = [seed.basis_index[v] for v in seed.quiver.frozen]
    if not z.polynomial_in(frozen_idx):
        return False
    for u in seed.quiver.mutable:
        h = seed.exchange_monomials_initial(u)
        i = seed.basis_index[u]
        for k, c in z.coefficients_by_var(i).items():
            if k < 0:
                if c.try_divexact(h ** (-k)) is None:
                    return False
    return True


def monomial_weight(exps, config, basis):
    w = (0,) * config.lattice.n
    for i, v in enumerate(basis):
        if exps[i]:
            w = linalg.vec_add(w, linalg.vec_scale(exps[i], config[v]))
    return w


def weight_of(z, config, basis):
    """Common weight of all monomials of z; None if inhomogeneous."""
    weights = {monomial_weight(e, config, basis) for e in z.exponents()}
    if len(weights) != 1:
        return None
    return weights.pop()


def ell_e(z, seed, config, e):
    """The projection map on homogeneous Laurent elements through e.

    Multiplies by x_e^{-<eps, alpha>} and rewrites in the projected
    cluster, which amounts to forgetting the e-th exponent of every
    monomial.  The result lives in the seed basis with e removed.
    """
    eps = config[e]
    if not config.lattice.is_real_weight(eps):
        raise ValueError("sigma(e) must be a real weight")
    if not z.is_zero() and weight_of(z, config, seed.basis) is None:
        raise ValueError("ell_e needs a homogeneous input")
    i = seed.basis_index[e]
    out = {}
    for exps, c in z.terms.items():
        out[exps[:i] + exps[i + 1:]] = c
    return LaurentPoly(seed.nvars - 1, out)


def i_e_matrix(seed, config, e):
    """Matrix of e_v -> e_v - <eps, sigma(v)> e_e on g-vector spaces.

    Rows are indexed by the seed basis minus e, columns by the full basis.
    """
    eps = config[e]
    lat = config.lattice
    if not lat.is_real_weight(eps):
        raise ValueError("sigma(e) must be a real weight")
    rest = [v for v in seed.basis if v != e]
    ie = []
    col_e = seed.basis_index[e]
    for v in rest:
        row = [0] * seed.nvars
        row[seed.basis_index[v]] = 1
        row[col_e] = -lat.weight_form(eps, config[v])
        ie.append(row)
    return rest, ie


def ll_e_matrix(seed, e):
    """Matrix forgetting the e-th coordinate (left inverse of i_e)."""
    rest = [v for v in seed.basis if v != e]
    lle = []
    for v in seed.basis:
        row = [0] * len(rest)
        if v != e:
            row[rest.index(v)] = 1
        lle.append(row)
    return rest, lle


def project_config(quiver, config, e):
    """Left projection of the weight configuration through vertex e."""
    eps = config[e]
    lat = config.lattice
    if not lat.is_real_weight(eps):
        raise ValueError("sigma(e) must be a real weight")
    new_q = quiver.delete_vertices([e])
    sigma = {v: lat.project_left_weight(eps, config[v])
             for v in new_q.vertices}
    return new_q, WeightConfig(lat, sigma)


def search_zeroing_mutations(quiver, config, r_index, depth,
                             required_count=None):
    """Breadth-first search for mutation sequences killing coordinate r.

    A sequence succeeds when sigma(u)(r) = 0 for every mutable u and the
    frozen exceptions all share one sign (and number `required_count`, if
    given).  Sequences avoid immediate repeats, and a branch is cut when
    it revisits a (quiver, sigma) state of its own path, so the result is
    an exhaustive, order-independent enumeration up to the given depth.
    Returns a list of (sequence, exceptions) in breadth-first order.
    """
    start = ConfigPair(quiver, config)
    queue = deque([(start, (), frozenset([start.key()]))])
    results = []

    def check(state, seq):
        exceptions = []
        sign_pos = sign_neg = False
        for v in state.quiver.vertices:
            val = state.config[v][r_index]
            if val == 0:
                continue
            if not state.quiver.is_frozen(v):
                return
            exceptions.append(v)
            if val > 0:
                sign_pos = True
            else:
                sign_neg = True
        if sign_pos and sign_neg:
            return
        if required_count is not None and len(exceptions) != required_count:
            return
        results.append((list(seq), sorted(exceptions, key=str)))

    check(start, ())
    while queue:
        state, seq, seen = queue.popleft()
        if len(seq) >= depth:
            continue
        for u in sorted(state.quiver.mutable, key=str):
            if seq and seq[-1] == u:
                continue
            nxt = state.mutate(u)
            key = nxt.key()
            if key in seen:
                continue
            nseq = seq + (u,)
            check(nxt, nseq)
            queue.append((nxt, nseq, seen | {key}))
    return results
