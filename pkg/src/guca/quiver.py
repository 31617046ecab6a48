"""Ice quivers: mutation, B-matrices, deletion and freezing.

Vertices are hashable ids (strings throughout the package).  The vertex
list keeps mutable vertices first; arrows form a multiset stored as a
list so individual arrows can be referenced by position (potentials need
that).  Arrows between frozen vertices are kept everywhere.
"""

import warnings


class IceQuiver:
    def __init__(self, vertices, frozen, arrows, check=True):
        self.frozen = set(frozen)
        verts = list(vertices)
        self.vertices = [v for v in verts if v not in self.frozen] + \
                        [v for v in verts if v in self.frozen]
        # canonical arrow order: arrow indices (used by potentials) refer
        # to positions in this sorted list
        self.arrows = sorted(tuple(a) for a in arrows)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if check:
            self._validate()

    def _validate(self):
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        for v in self.frozen:
            if v not in self.index:
                raise ValueError(f"frozen id {v!r} is not a vertex")
        counts = self.arrow_counts()
        for (t, h), m in counts.items():
            if t == h:
                raise ValueError(f"loop at {t!r}")
            if t not in self.index or h not in self.index:
                raise ValueError(f"arrow endpoint not a vertex: {(t, h)}")
            if counts.get((h, t)) and not (t in self.frozen and h in self.frozen):
                raise ValueError(f"2-cycle between {t!r} and {h!r}")

    # -- basic views ---------------------------------------------------

    @property
    def mutable(self):
        return [v for v in self.vertices if v not in self.frozen]

    @property
    def p(self):
        return len(self.vertices) - len(self.frozen)

    @property
    def q(self):
        return len(self.vertices)

    def is_frozen(self, v):
        return v in self.frozen

    def arrow_counts(self):
        counts = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return counts

    def arrows_at(self, u):
        ins = [(t, h) for (t, h) in self.arrows if h == u]
        outs = [(t, h) for (t, h) in self.arrows if t == u]
        return ins, outs

    def neighbors(self, u):
        out = set()
        for t, h in self.arrows:
            if t == u:
                out.add(h)
            elif h == u:
                out.add(t)
        return out

    def b_matrix(self):
        """p x q matrix, rows indexed by mutable vertices in order."""
        counts = self.arrow_counts()
        rows = []
        for u in self.mutable:
            row = []
            for v in self.vertices:
                row.append(counts.get((u, v), 0) - counts.get((v, u), 0))
            rows.append(row)
        return rows

    def canonical_key(self):
        return (tuple(self.vertices), frozenset(self.frozen),
                tuple(sorted(self.arrows)))

    # -- mutation ------------------------------------------------------

    def mutate(self, u):
        """Quiver mutation at a mutable vertex (three-step rule)."""
        if u not in self.index:
            raise ValueError(f"unknown vertex {u!r}")
        if u in self.frozen:
            raise ValueError(f"cannot mutate frozen vertex {u!r}")
        counts = self.arrow_counts()
        ins = [(v, m) for (v, h), m in counts.items() if h == u]
        outs = [(w, m) for (t, w), m in counts.items() if t == u]
        new = dict(counts)
        for v, m in ins:
            del new[(v, u)]
            new[(u, v)] = new.get((u, v), 0) + m
        for w, m in outs:
            del new[(u, w)]
            new[(w, u)] = new.get((w, u), 0) + m
        for v, mv in ins:
            for w, mw in outs:
                if v in self.frozen and w in self.frozen:
                    continue
                new[(v, w)] = new.get((v, w), 0) + mv * mw
        # remove 2-cycles (never among frozen pairs, which we must keep)
        for (t, h) in list(new):
            if t in self.frozen and h in self.frozen:
                continue
            m1 = new.get((t, h), 0)
            m2 = new.get((h, t), 0)
            if m1 and m2:
                m = min(m1, m2)
                for key, mm in (((t, h), m1), ((h, t), m2)):
                    if mm == m:
                        del new[key]
                    else:
                        new[key] = mm - m
        arrows = []
        for (t, h), m in sorted(new.items()):
            arrows.extend([(t, h)] * m)
        return IceQuiver(self.vertices, self.frozen, arrows, check=False)

    def mutate_seq(self, seq):
        q = self
        for u in seq:
            q = q.mutate(u)
        return q

    # -- surgery ---------------------------------------------------------

    def delete_vertices(self, vs):
        vs = set(vs)
        verts = [v for v in self.vertices if v not in vs]
        arrows = [(t, h) for (t, h) in self.arrows if t not in vs and h not in vs]
        return IceQuiver(verts, self.frozen - vs, arrows, check=False)

    def freeze_vertices(self, vs):
        return IceQuiver(self.vertices, self.frozen | set(vs), self.arrows,
                         check=False)

    def attached_set(self, v_set):
        """Maximal set u disjoint from v_set with all its arrows into v_set."""
        v_set = set(v_set)
        out = set()
        for w in self.vertices:
            if w in v_set:
                continue
            if all((t != w or h in v_set) and (h != w or t in v_set)
                   for t, h in self.arrows):
                out.add(w)
        return out

    def mutable_neighbors(self, v_set):
        """Mutable vertices adjacent to v_set (the freeze boundary of a
        deletion: these are exactly the vertices whose exchange relations
        would change if v_set were removed while they stayed mutable)."""
        v_set = set(v_set)
        out = set()
        for t, h in self.arrows:
            if t in v_set and h not in v_set and h not in self.frozen:
                out.add(h)
            if h in v_set and t not in v_set and t not in self.frozen:
                out.add(t)
        return out

    def delete_freeze(self, v_set, u_set):
        """Delete v_set, freeze u_set."""
        v_set = set(v_set)
        u_set = set(u_set)
        if v_set & u_set:
            raise ValueError("delete and freeze sets overlap")
        hazard = self.mutable_neighbors(v_set) - u_set
        if hazard:
            warnings.warn(
                f"deleting {sorted(map(str, v_set))} leaves mutable vertices "
                f"{sorted(map(str, hazard))} with changed exchange relations",
                stacklevel=2)
        return self.freeze_vertices(u_set).delete_vertices(v_set)

    # -- serialization ---------------------------------------------------

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "frozen": sorted(self.frozen),
            "arrows": [list(a) for a in self.arrows],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["vertices"], data["frozen"],
                   [tuple(a) for a in data["arrows"]])

    def __eq__(self, other):
        return isinstance(other, IceQuiver) and \
            self.canonical_key() == other.canonical_key()

    def __repr__(self):
        return (f"IceQuiver({len(self.mutable)} mutable + "
                f"{len(self.frozen)} frozen, {len(self.arrows)} arrows)")


def mutate_b_matrix(b, u_index, p):
    """B-matrix mutation B' = phi_p^T B phi at mutable index u_index.

    `b` is p x q with the mutable block first; phi is reconstructed from
    B itself, which pins down arrow counts because 2-cycles through a
    mutable vertex are forbidden.
    """
    q = len(b[0]) if b else 0
    u = u_index
    if not (0 <= u < p):
        raise ValueError("mutation index must be mutable")
    phi = [[1 if i == j else 0 for j in range(q)] for i in range(q)]
    for v in range(q):
        if v == u:
            phi[u][v] = -1
        elif v < p:
            phi[u][v] = max(b[v][u], 0)
        else:
            phi[u][v] = max(-b[u][v], 0)
    phi_p = [row[:p] for row in phi[:p]]
    phi_p_t = [[phi_p[i][j] for i in range(p)] for j in range(p)]
    bp = [[sum(phi_p_t[i][k] * b[k][j] for k in range(p)) for j in range(q)]
          for i in range(p)]
    return [[sum(bp[i][k] * phi[k][j] for k in range(q)) for j in range(q)]
            for i in range(p)]
