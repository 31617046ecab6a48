"""Hive-family builders and their weight configurations.

The ice hive quiver of size n lives on a triangular grid; its weight
configuration takes values in the lattice of the triple flag quiver T_n.
Projected variants (flag, unipotent, sextuple) arise by deleting rows of
frozen vertices and transporting weights along exceptional sequences;
merged variants (quintuple/quadruple flags) arise from vertex removal.
"""

from dataclasses import dataclass

from .cones import ConeSystem
from .lattice import QuiverQ
from .quiver import IceQuiver
from .seeds import WeightConfig
from .sirep import (ExceptionalProjection, ExtCalculator, MethodResult,
                    method_pipeline)

DIRS = ((1, 0), (0, -1), (-1, 1))


def vid(i, j):
    return f"({i},{j})"


def parse_vid(s):
    i, j = s.strip("()").split(",")
    return int(i), int(j)


# -- the triple flag quiver ------------------------------------------------


def triple_flag(n):
    """T_n with its standard dimension vector; arms point to the center."""
    verts = [f"arm{a}:{i}" for a in (1, 2, 3) for i in range(1, n)]
    verts.append("center")
    arrows = []
    for a in (1, 2, 3):
        for i in range(1, n - 1):
            arrows.append((f"arm{a}:{i}", f"arm{a}:{i + 1}"))
        arrows.append((f"arm{a}:{n - 1}", "center"))
    q = QuiverQ(verts, arrows)
    beta = tuple([i for _ in (1, 2, 3) for i in range(1, n)] + [n])
    return q, beta


def unit_weight(n, label=None):
    q, _ = triple_flag(n)
    e = [0] * q.n
    if label is not None:
        e[q.index[label]] = 1
    return tuple(e)


def f_weight(n, i, j):
    """f_{i,j} = e_n - e_i^1 - e_j^2 - e_k^3 with k = n - i - j.

    Convention: index 0 on an arm is the zero vector and index n on any
    arm means the central coordinate.
    """
    q, _ = triple_flag(n)
    w = [0] * q.n
    c = q.index["center"]
    w[c] = 1
    for a, idx in ((1, i), (2, j), (3, n - i - j)):
        if idx == 0:
            continue
        if idx == n:
            w[c] -= 1
        else:
            w[q.index[f"arm{a}:{idx}"]] -= 1
    return tuple(w)


# -- hive grids ------------------------------------------------------------


def _grid_vertices(n):
    out = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            if (i, j) in ((0, 0), (n, 0), (0, n)):
                continue
            out.append((i, j))
    return out


def _grid_arrows(coords):
    cs = set(coords)
    arrows = []
    for (i, j) in sorted(cs):
        for di, dj in DIRS:
            t = (i + di, j + dj)
            if t in cs:
                arrows.append((vid(i, j), vid(*t)))
    return arrows


def _is_boundary(n, i, j):
    return i == 0 or j == 0 or i + j == n


@dataclass
class HiveSeed:
    family: str
    n: int
    quiver: IceQuiver
    config: WeightConfig
    rep_quiver: QuiverQ
    rep_beta: tuple
    coords: dict          # vertex id -> (i, j) in the ambient grid
    grid_n: int           # ambient grid size (2n for the sextuple family)
    projection: object = None

    def seedless_pair(self):
        return self.quiver, self.config


def build_hive(n):
    """The ice hive quiver of size n with the triple-flag grading."""
    if n < 2:
        raise ValueError("hive size must be at least 2")
    coords = _grid_vertices(n)
    frozen = [vid(i, j) for (i, j) in coords if _is_boundary(n, i, j)]
    quiver = IceQuiver([vid(*c) for c in sorted(coords)], frozen,
                       _grid_arrows(coords))
    rep_q, beta = triple_flag(n)
    lattice = rep_q.lattice()
    sigma = {vid(i, j): f_weight(n, i, j) for (i, j) in coords}
    config = WeightConfig(lattice, sigma, check=quiver)
    return HiveSeed("triangle", n, quiver, config, rep_q, beta,
                    {vid(*c): c for c in coords}, n)


# -- complete flags --------------------------------------------------------


def complete_flag_projection(n, calc=None, check_hom_ext=None):
    """Projection of (T_n, beta_n) to the flag-star quiver SF_n."""
    rep_q, _ = triple_flag(n)
    calc = calc or ExtCalculator(rep_q)
    lat = calc.lattice
    f_dims = [lat.dim_of_weight(f_weight(n, i, n - i)) for i in range(1, n)]
    e_dims = []
    e_names = []
    for i in range(n, 0, -1):
        w = [0] * rep_q.n
        w[rep_q.index["center"]] = 1
        for a, idx in ((1, i), (2, n - i + 1)):
            if idx == n:
                w[rep_q.index["center"]] -= 1
            elif idx:
                w[rep_q.index[f"arm{a}:{idx}"]] -= 1
        e_dims.append(lat.dim_of_weight(tuple(w)))
        e_names.append(f"{i}'")
    for i in range(n - 1, 0, -1):
        d = [0] * rep_q.n
        d[rep_q.index[f"arm3:{i}"]] = 1
        e_dims.append(tuple(d))
        e_names.append(str(i))
    if check_hom_ext is None:
        check_hom_ext = n <= 4
    return ExceptionalProjection(rep_q, f_dims, e_dims, e_names=e_names,
                                 calc=calc, check_hom_ext=check_hom_ext)


def _reorder_target(proj, order):
    """Target quiver of a projection with vertices listed in given order."""
    t = proj.target
    arrows = list(t.arrows)
    return QuiverQ(order, arrows)


def flag_star(n):
    """SF_n in canonical order: long arm 1..n-1, then flag vertices."""
    proj = complete_flag_projection(n)
    order = [str(i) for i in range(1, n)] + [f"{i}'" for i in range(1, n + 1)]
    return _reorder_target(proj, order), proj


def build_flat(n):
    """Delete the hypotenuse row of frozen vertices; grade over SF_n."""
    base = build_hive(n)
    target, proj = flag_star(n)
    lat = target.lattice()
    drop = {vid(i, n - i) for i in range(1, n)}
    quiver = base.quiver.delete_vertices(drop)
    perm = [proj.target.index[v] for v in target.vertices]
    sigma = {}
    for v in quiver.vertices:
        w = proj.pi_weight(base.config[v])
        sigma[v] = tuple(w[k] for k in perm)
    beta = tuple(1 if v.endswith("'") else int(v) for v in target.vertices)
    config = WeightConfig(lat, sigma, check=quiver)
    coords = {v: base.coords[v] for v in quiver.vertices}
    return HiveSeed("flat", n, quiver, config, target, beta, coords, n,
                    projection=proj)


def unipotent_projection(n, calc=None):
    """Projection of (SF_n, beta') to the one-arrow-chain quiver U_n."""
    target, _ = flag_star(n)
    calc = calc or ExtCalculator(target)
    lat = calc.lattice
    f_dims = []
    for i in range(n - 1, 0, -1):
        w = [0] * target.n
        for k in range(i + 1, n + 1):
            w[target.index[f"{k}'"]] += 1
        w[target.index[str(n - i)]] -= 1
        f_dims.append(lat.dim_of_weight(tuple(w)))
    e_dims = []
    e_names = []
    for i in range(1, n + 1):
        d = [0] * target.n
        d[target.index[f"{i}'"]] = 1
        for j in range(n - i + 1, n):
            d[target.index[str(j)]] = 1
        e_dims.append(tuple(d))
        e_names.append(f"u{i}")
    return ExceptionalProjection(target, f_dims, e_dims, e_names=e_names,
                                 calc=calc, check_hom_ext=(n <= 4))


def build_flatflat(n):
    """Delete the bottom row of the flat hive; grade over U_n."""
    flat = build_flat(n)
    proj = unipotent_projection(n)
    order = [f"u{i}" for i in range(1, n + 1)]
    target = _reorder_target(proj, order)
    lat = target.lattice()
    drop = {vid(i, 0) for i in range(1, n)}
    quiver = flat.quiver.delete_vertices(drop)
    perm = [proj.target.index[v] for v in target.vertices]
    sigma = {}
    for v in quiver.vertices:
        w = proj.pi_weight(flat.config[v])
        sigma[v] = tuple(w[k] for k in perm)
    config = WeightConfig(lat, sigma, check=quiver)
    beta = (1,) * n
    coords = {v: flat.coords[v] for v in quiver.vertices}
    return HiveSeed("flatflat", n, quiver, config, target, beta, coords, n,
                    projection=proj)


# -- sextuple flags --------------------------------------------------------


def sextuple_projection(n, calc=None):
    """Projection of (T_2n, beta_2n) to the sextuple flag star S^6_n."""
    rep_q, _ = triple_flag(2 * n)
    calc = calc or ExtCalculator(rep_q)
    lat = calc.lattice
    nn = 2 * n
    f_dims = [lat.dim_of_weight(f_weight(nn, i, j))
              for i, j in ((0, n), (n, 0), (n, n))]
    # central root: eps = ^alpha(e_2n - e_n^1 - e_n^2 - e_n^3)
    w = [0] * rep_q.n
    w[rep_q.index["center"]] = 1
    for a in (1, 2, 3):
        w[rep_q.index[f"arm{a}:{n}"]] -= 1
    e_dims = [lat.dim_of_weight(tuple(w))]
    e_names = ["center"]
    for a in (1, 2, 3):
        for i in range(nn - 1, n, -1):
            d = [0] * rep_q.n
            d[rep_q.index[f"arm{a}:{i}"]] = 1
            e_dims.append(tuple(d))
            e_names.append(f"arm{a + 3}:{i - n}")
    for a in (1, 2, 3):
        for i in range(n - 1, 0, -1):
            d = [0] * rep_q.n
            d[rep_q.index[f"arm{a}:{i}"]] = 1
            e_dims.append(tuple(d))
            e_names.append(f"arm{a}:{i}")
    return ExceptionalProjection(rep_q, f_dims, e_dims, e_names=e_names,
                                 calc=calc, check_hom_ext=(n <= 2))


def sextuple_weight(n, i, j):
    """The printed weight formula for the sextuple grading at (i, j)."""
    nn = 2 * n
    k = nn - i - j
    iq, ir = divmod(i, n)
    jq, jr = divmod(j, n)
    kq, kr = divmod(k, n)
    verts = [f"arm{a}:{t}" for a in range(1, 7) for t in range(1, n)]
    verts.append("center")
    idx = {v: t for t, v in enumerate(verts)}
    w = [0] * len(verts)
    w[idx["center"]] = 2 - iq - jq - kq
    for arm, r in ((1 + 3 * iq, ir), (2 + 3 * jq, jr), (3 + 3 * kq, kr)):
        if r:
            w[idx[f"arm{arm}:{r}"]] -= 1
    return tuple(w)


def build_triangledown(n):
    """Delete the three mid-edge frozen vertices of the 2n-hive."""
    base = build_hive(2 * n)
    proj = sextuple_projection(n)
    order = [f"arm{a}:{i}" for a in range(1, 7) for i in range(1, n)]
    order.append("center")
    target = _reorder_target(proj, order)
    lat = target.lattice()
    nn = 2 * n
    drop = {vid(0, n), vid(n, 0), vid(n, n)}
    quiver = base.quiver.delete_vertices(drop)
    sigma = {v: sextuple_weight(n, *base.coords[v]) for v in quiver.vertices}
    config = WeightConfig(lat, sigma, check=quiver)
    beta = tuple([i for _ in range(6) for i in range(1, n)] + [n])
    coords = {v: base.coords[v] for v in quiver.vertices}
    return HiveSeed("triangledown", n, quiver, config, target, beta,
                    coords, nn, projection=proj)


# -- straight paths and the cone (5.1) --------------------------------------


def ambient_lines(grid_n):
    """Maximal straight lines of the full hive grid, per direction."""
    cs = set(_grid_vertices(grid_n))
    lines = []
    for d in DIRS:
        starts = [c for c in cs if (c[0] - d[0], c[1] - d[1]) not in cs]
        for c in sorted(starts):
            run = [c]
            cur = c
            while (cur[0] + d[0], cur[1] + d[1]) in cs:
                cur = (cur[0] + d[0], cur[1] + d[1])
                run.append(cur)
            lines.append(run)
    return lines


def straight_paths(seed):
    """Maximal straight paths (>= 2 vertices) in the surviving grid."""
    cs = {seed.coords[v] for v in seed.quiver.vertices}
    paths = []
    for d in DIRS:
        starts = [c for c in cs
                  if (c[0] - d[0], c[1] - d[1]) not in cs]
        for c in sorted(starts):
            run = [c]
            cur = c
            while (cur[0] + d[0], cur[1] + d[1]) in cs:
                cur = (cur[0] + d[0], cur[1] + d[1])
                run.append(cur)
            if len(run) >= 2:
                paths.append([vid(*x) for x in run])
    return paths


def hive_cone(seed, convention="suffix"):
    """Inequalities: sum of g over every strict terminal segment of a
    maximal straight path of the ambient grid that survives in the seed,
    plus g(v) >= 0 for every surviving frozen vertex.

    Projected families (flat/flatflat/triangledown) are coordinate
    projections of the ambient hive cone, so their inequalities are the
    surviving ambient ones: a terminal segment whose deleted complement
    is nonempty contributes even though it is a full run of the
    subquiver.  Two-sided segment readings are strictly too strong (they
    cut off counts), and initial segments give the mirror convention
    ("prefix"); terminal segments are the default.
    """
    alive = {seed.coords[v] for v in seed.quiver.vertices}
    order = list(seed.quiver.vertices)
    idx = {v: i for i, v in enumerate(order)}
    rows = []

    def add(coords):
        verts = [vid(*c) for c in coords]
        if len(verts) == 1 and not seed.quiver.is_frozen(verts[0]):
            return
        row = [0] * len(order)
        for v in verts:
            row[idx[v]] = 1
        rows.append(tuple(row))

    for line in ambient_lines(seed.grid_n):
        t = len(line)
        for c in range(1, t):
            if convention == "suffix":
                seg = line[c:]
            elif convention == "prefix":
                seg = line[:t - c]
            else:
                raise ValueError(f"unknown convention {convention!r}")
            if all(x in alive for x in seg):
                add(seg)
    for v in seed.quiver.frozen:
        row = [0] * len(order)
        row[idx[v]] = 1
        rows.append(tuple(row))
    return ConeSystem(len(order), rows, labels=order)


# -- weight dictionaries ----------------------------------------------------


def lr_weight(n, lam, mu, nu):
    """Weight of T_n encoding the Littlewood-Richardson triple (lam; mu, nu).

    mu and nu enter through their column multiplicities on the first two
    arms, lam through the complement of its reflection in an n x lam_1
    box on the third arm.  Requires |lam| = |mu| + |nu|, at most n rows
    in lam and at most n-1 in mu, nu.
    """
    lam, mu, nu = [list(p) for p in (lam, mu, nu)]
    if sum(lam) != sum(mu) + sum(nu):
        raise ValueError("|lam| must equal |mu| + |nu|")
    if len([x for x in lam if x]) > n or len([x for x in mu if x]) > n - 1 \
            or len([x for x in nu if x]) > n - 1:
        raise ValueError("partitions do not fit the grid size")
    s = lam[0] if lam else 0
    lamp = lam + [0] * (n - len(lam))
    kappa = [s - lamp[n - 1 - t] for t in range(n)]
    q, _ = triple_flag(n)
    w = [0] * q.n
    w[q.index["center"]] = s

    def charge(arm, part):
        part = list(part) + [0] * (n + 1)
        for i in range(1, n):
            c = part[i - 1] - part[i]
            if c:
                w[q.index[f"arm{arm}:{i}"]] -= c

    charge(1, mu)
    charge(2, nu)
    for i in range(1, n):
        c = kappa[i - 1] - kappa[i]
        if c:
            w[q.index[f"arm3:{i}"]] -= c
    w[q.index["center"]] -= kappa[n - 1]  # height-n columns fold centrally
    return tuple(w)


def kostka_weight(n, lam, mu):
    """Weight of SF_n encoding the Kostka pair (lam, mu)."""
    lam = list(lam) + [0] * n
    if len([x for x in lam if x]) > n - 1:
        raise ValueError("lam needs at most n-1 rows")
    if len(mu) > n:
        raise ValueError("mu needs at most n parts")
    if sum(lam[:n]) != sum(mu):
        raise ValueError("|lam| must equal |mu|")
    mu = list(mu) + [0] * (n - len(mu))
    target, _ = flag_star(n)
    w = [0] * target.n
    for i in range(1, n):
        w[target.index[str(i)]] = -(lam[i - 1] - lam[i])
    for i in range(1, n + 1):
        w[target.index[f"{i}'"]] = mu[i - 1]
    return tuple(w)


def kostka_pair_of_weight(n, sigma):
    """Inverse dictionary: (lam, mu) from a weight of SF_n."""
    target, _ = flag_star(n)
    parts = []
    for i in range(n - 1, 0, -1):
        parts.extend([i] * (-sigma[target.index[str(i)]]))
    lam = _conjugate(parts)
    mu = [sigma[target.index[f"{i}'"]] for i in range(1, n + 1)]
    return lam, mu


def _conjugate(parts):
    parts = sorted((p for p in parts if p), reverse=True)
    if not parts:
        return []
    return [sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1)]


# -- partial flag mutation schedule -----------------------------------------


def row_mutables(l):
    """u_l: the mutable vertices of the l-th row of the flat hive."""
    return [vid(l - t, t) for t in range(1, l)]


def partial_flag_mutation_sequence(l, m):
    """The documented schedule u_l; u_{l+1}, u_l; ...; u_m, ..., u_l."""
    if l < 2 or m < l:
        raise ValueError("need m >= l >= 2")
    blocks = []
    for top in range(l, m + 1):
        for r in range(top, l - 1, -1):
            blocks.append(row_mutables(r))
    return blocks


# -- vertex removal drivers --------------------------------------------------


def remove_flag_vertex(state, rep_q, beta, r, depth=3, sequence=None):
    quiver, config = state
    return method_pipeline(quiver, config, rep_q, beta, r, depth=depth,
                           sequence=sequence)


def build_merge(n):
    """Quintuple-flag quiver: remove one flag from the sextuple family."""
    return _remove_flags(n, ["arm6"])


def build_square(n):
    """Quadruple-flag quiver: remove two flags from the sextuple family."""
    return _remove_flags(n, ["arm6", "arm5"])


def _remove_flags(n, arms):
    seed = build_triangledown(n)
    quiver, config = seed.quiver, seed.config
    rep_q, beta = seed.rep_quiver, seed.rep_beta
    family = "merge" if len(arms) == 1 else "square"
    for arm in arms:
        for i in range(n - 1, 0, -1):
            res = method_pipeline(quiver, config, rep_q, beta,
                                  f"{arm}:{i}", depth=3)
            if not res.ok:
                raise RuntimeError(
                    f"flag removal failed at {arm}:{i}: {res.diagnosis}")
            quiver, config = res.ice_quiver, res.config
            rep_q, beta = res.rep_quiver, res.rep_beta
    coords = {v: seed.coords[v] for v in quiver.vertices}
    return HiveSeed(family, n, quiver, config, rep_q, beta, coords,
                    seed.grid_n)


# -- the T_{3,3,5} replication ------------------------------------------------


T335_STAGES = [
    {"remove": "arm1:5", "sequence": [], "after": None},
    {"remove": "arm2:5", "sequence": [], "after": None},
    {"remove": "arm3:5", "sequence": [], "after": None},
    {"remove": "arm1:3", "sequence": [vid(3, 2), vid(3, 1)], "after": vid(3, 2)},
    {"remove": "arm1:1", "sequence": [vid(1, 3), vid(1, 2)], "after": vid(1, 3)},
    {"remove": "arm2:3", "sequence": [vid(1, 3), vid(2, 3)], "after": vid(1, 3)},
    {"remove": "arm2:1", "sequence": [vid(1, 3), vid(2, 1)], "after": vid(2, 2)},
]

T335_FINAL_WEIGHTS = {
    vid(2, 1): {"center": 3, "arm3:1": -2, "arm1:2": -1, "arm2:2": -1,
                "arm1:4": -1, "arm2:4": -1, "arm3:4": -1},
    vid(2, 3): {"center": 3, "arm1:2": -1, "arm2:2": -1, "arm3:3": -2,
                "arm1:4": -1, "arm2:4": -1},
    vid(1, 3): {"center": 2, "arm3:1": -1, "arm1:2": -1, "arm2:2": -1,
                "arm3:3": -1, "arm2:4": -1},
    vid(3, 2): {"center": 2, "arm3:1": -1, "arm1:2": -1, "arm2:2": -1,
                "arm3:3": -1, "arm1:4": -1},
    vid(2, 2): {"center": 2, "arm3:1": -1, "arm3:3": -1, "arm1:4": -1,
                "arm2:4": -1},
}


def t335_final_weight_vectors(labels):
    """The five printed final weights over the given Q-vertex labels."""
    out = {}
    for v, spec in T335_FINAL_WEIGHTS.items():
        w = [0] * len(labels)
        for label, c in spec.items():
            w[labels.index(label)] = c
        out[v] = tuple(w)
    return out


def replicate_t335_state(depth=2):
    """Run the seven-stage reduction from the 6-hive to the (3,3,5) star.

    Each stage removes one vertex of the underlying quiver: the search
    must find the scripted mutation sequence among its successes, the
    exceptional set must have size d with one sign, and the scripted
    optional mutation is applied afterwards.  Returns the transcript
    together with the live final state.
    """
    seed = build_hive(6)
    quiver, config = seed.quiver, seed.config
    rep_q, beta = seed.rep_quiver, seed.rep_beta
    stages = []
    for stage in T335_STAGES:
        res = method_pipeline(quiver, config, rep_q, beta, stage["remove"],
                              depth=depth, sequence=stage["sequence"])
        if not res.ok:
            raise RuntimeError(
                f"stage {stage['remove']} failed: {res.diagnosis}")
        quiver, config = res.ice_quiver, res.config
        rep_q, beta = res.rep_quiver, res.rep_beta
        if stage["after"] is not None:
            config = config.mutate(quiver, stage["after"])
            quiver = quiver.mutate(stage["after"])
        stages.append({
            "remove": stage["remove"],
            "sequence": res.sequence,
            "d": res.d,
            "deleted": sorted(res.v_set),
            "frozen": sorted(res.u_set),
            "optional_mutation": stage["after"],
            "mutable_count": len(quiver.mutable),
            "vertex_count": quiver.q,
        })
    weights = {v: list(config[v]) for v in sorted(quiver.vertices)}
    transcript = {
        "stages": stages,
        "final_quiver": quiver.to_json(),
        "final_weights": weights,
        "weight_labels": list(rep_q.vertices),
        "final_rep_quiver": list(rep_q.vertices),
        "final_rep_beta": list(beta),
    }
    return transcript, quiver, config, rep_q, beta


def replicate_t335(depth=2):
    """Transcript of the seven-stage reduction (see replicate_t335_state)."""
    return replicate_t335_state(depth)[0]
