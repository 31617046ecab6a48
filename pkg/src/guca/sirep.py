"""Generic representation theory of acyclic quivers.

Generic hom/ext via the subrepresentation recursion, the cone of weights
of nonzero semi-invariants, extremality and projector tests, projections
along exceptional sequences, and vertex removal with the dimension-count
bookkeeping of the removal method.
"""

from dataclasses import dataclass, field

from . import linalg, lp
from .lattice import QuiverQ
from .seeds import WeightConfig, search_zeroing_mutations


class ExtCalculator:
    """Generic hom/ext dimensions for an acyclic quiver, memoized.

    ext(a, b) = max over generic subdimensions a' of a of -<a', b>;
    a general b-dimensional representation has an a-dimensional
    subrepresentation iff a <= b and ext(a, b - a) = 0.
    """

    def __init__(self, quiver: QuiverQ):
        quiver.require_acyclic()
        self.quiver = quiver
        self.lattice = quiver.lattice()
        self._ext = {}

    def _check(self, v):
        v = tuple(v)
        if len(v) != self.quiver.n:
            raise ValueError("dimension vector length mismatch")
        if any(x < 0 for x in v):
            raise ValueError("dimension vectors must be nonnegative")
        return v

    def ext(self, alpha, beta):
        alpha = self._check(alpha)
        beta = self._check(beta)
        if not any(alpha) or not any(beta):
            return 0
        key = (alpha, beta)
        if key in self._ext:
            return self._ext[key]
        # candidates sorted by their value so embeds() runs only until the
        # maximum is certain
        cands = sorted(((-self.lattice.form(sub, beta), sub)
                        for sub in self._subdims(alpha)), reverse=True)
        best = 0
        for value, sub in cands:
            if value <= best:
                break
            if self.embeds(sub, alpha):
                best = value
        self._ext[key] = best
        return best

    def hom(self, alpha, beta):
        return self.lattice.form(alpha, beta) + self.ext(alpha, beta)

    def hom_ext(self, alpha, beta):
        e = self.ext(alpha, beta)
        return self.lattice.form(alpha, beta) + e, e

    def embeds(self, gamma, beta):
        gamma = self._check(gamma)
        beta = self._check(beta)
        if any(g > b for g, b in zip(gamma, beta)):
            return False
        diff = tuple(b - g for g, b in zip(gamma, beta))
        return self.ext(gamma, diff) == 0

    def perp(self, alpha, beta):
        """alpha is left orthogonal to beta: generic hom and ext vanish."""
        return self.hom_ext(alpha, beta) == (0, 0)

    def _subdims(self, alpha):
        # all 0 <= a' <= alpha, excluding alpha itself and 0 (both give 0)
        ranges = [range(x + 1) for x in alpha]
        from itertools import product
        for sub in product(*ranges):
            yield sub


def generic_hom_ext(quiver, alpha, beta, calc=None):
    calc = calc or ExtCalculator(quiver)
    return calc.hom_ext(alpha, beta)


def embeds_generically(quiver, gamma, beta, calc=None):
    calc = calc or ExtCalculator(quiver)
    return calc.embeds(gamma, beta)


def hom_vanishes_sample(quiver, alpha, beta, trials=3, p=32003, rng=None):
    """Certify generic Hom(alpha, beta) = 0 by finite-field sampling.

    hom is upper semicontinuous, so one random pair with no nonzero
    intertwiner proves the generic value vanishes.  True is a proof;
    False only means no certificate was found in `trials` attempts.
    """
    import random as _random

    rng = rng or _random.Random(10007)
    idx = quiver.index
    for _ in range(trials):
        # random representations of both dimension vectors
        m_mats = {a: [[rng.randrange(p) for _ in range(alpha[idx[h]])]
                      for _ in range(alpha[idx[t]])]
                  for a, (t, h) in enumerate(quiver.arrows)}
        n_mats = {a: [[rng.randrange(p) for _ in range(beta[idx[h]])]
                      for _ in range(beta[idx[t]])]
                  for a, (t, h) in enumerate(quiver.arrows)}
        offset = {}
        pos = 0
        for v in quiver.vertices:
            offset[v] = pos
            pos += alpha[idx[v]] * beta[idx[v]]
        if pos == 0:
            return True
        rows = []
        for a, (t, h) in enumerate(quiver.arrows):
            for r in range(alpha[idx[t]]):
                for c in range(beta[idx[h]]):
                    row = [0] * pos
                    for k in range(beta[idx[t]]):
                        row[offset[t] + r * beta[idx[t]] + k] = \
                            (row[offset[t] + r * beta[idx[t]] + k]
                             + n_mats[a][k][c]) % p
                    for k in range(alpha[idx[h]]):
                        row[offset[h] + k * beta[idx[h]] + c] = \
                            (row[offset[h] + k * beta[idx[h]] + c]
                             - m_mats[a][r][k]) % p
                    rows.append(row)
        if _rank_mod_p(rows, pos, p) == pos:
            return True
    return False


def _rank_mod_p(rows, ncols, p):
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p),
                   None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p
                           for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def in_sigma_cone(quiver, beta, sigma, calc=None, method="auto"):
    """Membership of sigma in the cone of weights of semi-invariants.

    "enumerate" follows the defining inequalities sigma . gamma >= 0 over
    all generic subdimensions gamma of beta (desk scale only).  "homext"
    uses the dual description: sigma corresponds to an effective
    dimension vector alpha with alpha generically orthogonal to beta.
    "sample" certifies the same orthogonality by finite-field sampling
    (sound for True; False may be a missed certificate).  All agree on
    their common domain; "auto" picks by input size.
    """
    calc = calc or ExtCalculator(quiver)
    beta = tuple(beta)
    sigma = tuple(sigma)
    if linalg.dot(sigma, beta) != 0:
        return False
    if method == "auto":
        size = 1
        for b in beta:
            size *= b + 1
        method = "enumerate" if size <= 20000 else "sample"
    if method == "enumerate":
        from itertools import product
        for gamma in product(*[range(b + 1) for b in beta]):
            if linalg.dot(sigma, gamma) < 0 and calc.embeds(gamma, beta):
                return False
        return True
    alpha = calc.lattice.dim_of_weight(sigma)
    if any(x < 0 for x in alpha):
        return False
    if method == "homext":
        return calc.perp(alpha, beta)
    if method == "sample":
        return hom_vanishes_sample(quiver, alpha, beta)
    raise ValueError(f"unknown method {method!r}")


def is_extremal(weights, eps):
    """Is eps an extremal ray of the cone generated by the given weights?

    Decided by exact feasibility: eps must not be a nonnegative rational
    combination of the generators that are not positive multiples of eps.
    """
    eps = tuple(eps)
    if all(x == 0 for x in eps):
        raise ValueError("the zero weight spans no ray")
    if not lp.nonneg_combination_exists([tuple(w) for w in weights], eps):
        raise ValueError("eps is not in the cone spanned by the weights")
    others = [tuple(w) for w in weights if not _positive_multiple(w, eps)]
    return not lp.nonneg_combination_exists(others, eps)


def _positive_multiple(w, eps):
    # w = c * eps with c > 0 (rational)
    pairs = [(a, b) for a, b in zip(w, eps) if a != 0 or b != 0]
    if not pairs:
        return True
    a0, b0 = pairs[0]
    if a0 * b0 <= 0:
        return False
    return all(a * b0 == b * a0 and a * b > 0 for a, b in pairs)


def is_projector_weight(quiver, beta, eps_weight, generators, calc=None):
    """Projector test: real weight, extremal among the generating weights."""
    calc = calc or ExtCalculator(quiver)
    lat = calc.lattice
    eps_weight = tuple(eps_weight)
    if not lat.is_real_weight(eps_weight):
        return False
    try:
        return is_extremal(generators, eps_weight)
    except ValueError:
        return False


# -- exceptional sequences ------------------------------------------------


def is_exceptional_sequence(quiver, dims, calc=None, check_hom_ext=True):
    """Realness plus one-directional orthogonality of a dim-vector list."""
    calc = calc or ExtCalculator(quiver)
    lat = calc.lattice
    dims = [tuple(d) for d in dims]
    for d in dims:
        if not lat.is_real(d):
            return False
    for i in range(len(dims)):
        for j in range(i + 1, len(dims)):
            if check_hom_ext:
                if not calc.perp(dims[i], dims[j]):
                    return False
            elif lat.form(dims[i], dims[j]) != 0:
                return False
    return True


def quiver_of_sequence(quiver, dims, names=None, calc=None,
                       check_hom_ext=True):
    """The quiver of a quiver exceptional sequence.

    Vertices are labeled by `names` (default: positional); there are
    -<eps_j, eps_i> arrows eps_j -> eps_i for i < j.  Raises when some
    <eps_j, eps_i> is positive, i.e. the sequence is not 'quiver'.
    """
    calc = calc or ExtCalculator(quiver)
    lat = calc.lattice
    dims = [tuple(d) for d in dims]
    if not is_exceptional_sequence(quiver, dims, calc,
                                   check_hom_ext=check_hom_ext):
        raise ValueError("not an exceptional sequence")
    n = len(dims)
    names = list(names) if names else [str(i) for i in range(n)]
    arrows = []
    for j in range(n):
        for i in range(j):
            m = -lat.form(dims[j], dims[i])
            if m < 0:
                raise ValueError("sequence is not a quiver sequence "
                                 f"(<e_{j}, e_{i}> > 0)")
            arrows.extend([(names[j], names[i])] * m)
    return QuiverQ(names, arrows)


class ExceptionalProjection:
    """Projection data (iota_F, pi_F) along an exceptional pair (F, E).

    F spans the directions projected out; E (the completing sequence,
    supplied by the caller or a builder) labels the vertices of the
    target quiver.  iota embeds dimension vectors/weights isometrically,
    pi is its left inverse.
    """

    def __init__(self, quiver, f_dims, e_dims, e_names=None, calc=None,
                 check_hom_ext=True):
        self.calc = calc or ExtCalculator(quiver)
        self.lattice = self.calc.lattice
        self.f_dims = [tuple(d) for d in f_dims]
        self.e_dims = [tuple(d) for d in e_dims]
        if not is_exceptional_sequence(quiver, self.f_dims + self.e_dims,
                                       self.calc,
                                       check_hom_ext=check_hom_ext):
            raise ValueError("(F, E) is not an exceptional sequence")
        self.target = quiver_of_sequence(quiver, self.e_dims, names=e_names,
                                         calc=self.calc, check_hom_ext=False)
        self.target_lattice = self.target.lattice()

    def iota_dim(self, beta_prime):
        if len(beta_prime) != len(self.e_dims):
            raise ValueError("dimension vector length mismatch")
        out = (0,) * self.lattice.n
        for c, eps in zip(beta_prime, self.e_dims):
            out = linalg.vec_add(out, linalg.vec_scale(c, eps))
        return out

    def pi_dim(self, beta):
        beta = tuple(beta)
        for eps in self.f_dims:
            c = self.lattice.form(eps, beta)
            beta = tuple(b - c * e for b, e in zip(beta, eps))
        # express the projected vector in the span of E
        m = [list(e) for e in self.e_dims]
        sol = linalg.rat_solve_right(linalg.transpose(m), beta)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError("projection does not land in the span of E")
        return tuple(int(x) for x in sol)

    def iota_weight(self, sigma_prime):
        alpha = self.target_lattice.dim_of_weight(sigma_prime)
        return self.lattice.weight_of_dim(self.iota_dim(alpha))

    def pi_weight(self, sigma):
        """sigma_F(i) = sigma . eps_i over the completing sequence."""
        sigma = tuple(sigma)
        return tuple(linalg.dot(sigma, eps) for eps in self.e_dims)


# -- vertex removal --------------------------------------------------------


def remove_vertex(quiver, beta, r):
    """Compose all paths through r; returns (new_quiver, new_beta, flag).

    flag is the flow condition: min(total dim in, total dim out) <= beta(r),
    under which removal preserves semi-invariants of weights not
    supported on r.
    """
    if r not in quiver.index:
        raise ValueError(f"unknown vertex {r!r}")
    beta = tuple(beta)
    idx = quiver.index
    ins = [(t, h) for (t, h) in quiver.arrows if h == r]
    outs = [(t, h) for (t, h) in quiver.arrows if t == r]
    flow_in = sum(beta[idx[t]] for t, _ in ins)
    flow_out = sum(beta[idx[h]] for _, h in outs)
    flag = min(flow_in, flow_out) <= beta[idx[r]]
    vertices = [v for v in quiver.vertices if v != r]
    arrows = [(t, h) for (t, h) in quiver.arrows if r not in (t, h)]
    for t, _ in ins:
        for _, h in outs:
            arrows.append((t, h))
    new_q = QuiverQ(vertices, arrows)
    new_beta = tuple(beta[idx[v]] for v in vertices)
    return new_q, new_beta, flag


def cluster_count(quiver, beta):
    """Krull dimension count |Q_0| - <beta, beta>."""
    lat = quiver.lattice()
    return quiver.n - lat.form(beta, beta)


@dataclass
class MethodResult:
    ok: bool
    r: str
    d: int = 0
    sequence: list = field(default_factory=list)
    v_set: list = field(default_factory=list)
    u_set: list = field(default_factory=list)
    ice_quiver: object = None
    config: object = None
    rep_quiver: object = None
    rep_beta: tuple = ()
    candidates: list = field(default_factory=list)
    diagnosis: str = ""


def method_pipeline(ice_quiver, config, rep_quiver, beta, r, depth=2,
                    sequence=None):
    """One vertex-removal step of the search method.

    Removes Q-vertex r: checks the flow condition, computes the expected
    number d of exceptional vertices from the Krull dimension drop, finds
    mutation sequences zeroing sigma(.)(r) on mutable vertices with
    exactly d uniform-sign frozen exceptions, then deletes the exceptions
    and freezes their mutable neighbors.  The surviving weights have zero
    r-coordinate, so the configuration is re-expressed over the lattice
    of the reduced quiver.  `sequence` forces a particular mutation word
    (it must still verify); default is the first found.
    """
    r_index = config.lattice.basis_label_index(r)
    new_q, new_beta, flag = remove_vertex(rep_quiver, beta, r)
    if not flag:
        return MethodResult(ok=False, r=r,
                            diagnosis="flow condition on beta fails at r")
    d = cluster_count(rep_quiver, beta) - cluster_count(new_q, new_beta)
    found = search_zeroing_mutations(ice_quiver, config, r_index, depth,
                                     required_count=d)
    if sequence is not None:
        chosen = next((f for f in found if f[0] == list(sequence)), None)
        if chosen is None:
            return MethodResult(
                ok=False, r=r, d=d, candidates=found,
                diagnosis="requested mutation sequence is not a success")
    elif found:
        chosen = found[0]
    else:
        return MethodResult(
            ok=False, r=r, d=d,
            diagnosis="the method fails, or the cluster structure "
                      "may not exist")
    seq, v_set = chosen
    cur_q, cur_c = ice_quiver, config
    for u in seq:
        cur_q, cur_c = cur_q.mutate(u), cur_c.mutate(cur_q, u)
    u_set = sorted(cur_q.mutable_neighbors(v_set), key=str)
    final_q = cur_q.delete_freeze(v_set, u_set)
    new_lat = new_q.lattice()
    keep = [config.lattice.basis_label_index(v) for v in new_q.vertices]
    sigma = {}
    for v in final_q.vertices:
        w = cur_c[v]
        assert w[r_index] == 0
        sigma[v] = tuple(w[i] for i in keep)
    final_c = WeightConfig(new_lat, sigma, check=final_q)
    return MethodResult(ok=True, r=r, d=d, sequence=list(seq),
                        v_set=list(v_set), u_set=u_set,
                        ice_quiver=final_q, config=final_c,
                        rep_quiver=new_q, rep_beta=new_beta,
                        candidates=found)
