"""Unimodular lattices attached to acyclic quivers.

The lattice of a quiver Q is Z^{Q_0} with the (generally nonsymmetric)
bilinear form <a, b> = a E b^T, where E is the Euler matrix
E[i][j] = delta_ij - #arrows(i -> j).  Dimension vectors and weights are
dual coordinates on the same lattice: a weight s acts on dimension
vectors by s . g = -<dim_of_weight(s), g>.
"""

from . import linalg


class QuiverQ:
    """A plain quiver: ordered vertices plus an arrow multiset."""

    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        self.arrows = [tuple(a) for a in arrows]
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        for t, h in self.arrows:
            if t == h:
                raise ValueError(f"loop at {t}")
            if t not in index or h not in index:
                raise ValueError(f"arrow endpoint not a vertex: {(t, h)}")
        self.index = index

    @property
    def n(self):
        return len(self.vertices)

    def arrow_counts(self):
        counts = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return counts

    def is_acyclic(self):
        indeg = {v: 0 for v in self.vertices}
        for _, h in self.arrows:
            indeg[h] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for t, h in self.arrows:
                if t == v:
                    indeg[h] -= 1
                    if indeg[h] == 0:
                        queue.append(h)
        return seen == self.n

    def require_acyclic(self):
        if not self.is_acyclic():
            raise ValueError("quiver must be acyclic here")

    def euler_matrix(self):
        e = linalg.identity(self.n)
        for t, h in self.arrows:
            e[self.index[t]][self.index[h]] -= 1
        return e

    def lattice(self):
        return EulerLattice(self.euler_matrix(), labels=list(self.vertices))


class EulerLattice:
    """Z^n with a unimodular bilinear form given by an Euler matrix."""

    def __init__(self, euler_matrix, labels=None):
        self.E = [list(row) for row in euler_matrix]
        self.n = len(self.E)
        d = linalg.det(self.E)
        if d not in (1, -1):
            raise ValueError(f"Euler matrix is not unimodular (det={d})")
        self.labels = list(labels) if labels else [str(i) for i in range(self.n)]
        self.Einv = linalg.int_inverse(self.E)
        self.ET_inv = linalg.transpose(self.Einv)

    def _check(self, v):
        if len(v) != self.n:
            raise ValueError("vector length does not match lattice rank")
        return tuple(v)

    def form(self, a, b):
        """Euler form <a, b> on dimension vectors."""
        a = self._check(a)
        b = self._check(b)
        return linalg.dot(linalg.vec_mat(a, self.E), b)

    def weight_form(self, s, t):
        """Induced form on weights: <s, t> = <dim(s), dim(t)>."""
        s = self._check(s)
        t = self._check(t)
        return linalg.dot(linalg.vec_mat(s, self.ET_inv), t)

    def weight_of_dim(self, a):
        """Weight s with s . g = -<a, g> for every g."""
        a = self._check(a)
        return tuple(-x for x in linalg.vec_mat(a, self.E))

    def dim_of_weight(self, s):
        s = self._check(s)
        return tuple(-x for x in linalg.vec_mat(s, self.Einv))

    def is_real(self, v):
        return self.form(v, v) == 1

    def is_real_weight(self, s):
        return self.weight_form(s, s) == 1

    def coxeter_matrix(self):
        """Matrix of tau, defined by <a, b> = -<b, tau(a)>."""
        m = linalg.mat_mul(self.E, self.ET_inv)
        return [[-x for x in row] for row in m]

    def coxeter(self, a):
        a = self._check(a)
        return linalg.vec_mat(a, self.coxeter_matrix())

    def project_left(self, eps, b):
        """l_eps(b) = b - <eps, b> eps, lands in eps^perp."""
        eps = self._check(eps)
        b = self._check(b)
        if not self.is_real(eps):
            raise ValueError("projection axis must be a real vector")
        c = self.form(eps, b)
        return tuple(x - c * y for x, y in zip(b, eps))

    def project_right(self, eps, a):
        """r_eps(a) = a - <a, eps> eps, lands in ^perp(eps)."""
        eps = self._check(eps)
        a = self._check(a)
        if not self.is_real(eps):
            raise ValueError("projection axis must be a real vector")
        c = self.form(a, eps)
        return tuple(x - c * y for x, y in zip(a, eps))

    def project_left_weight(self, eps, s):
        """Left projection in weight coordinates."""
        eps = self._check(eps)
        s = self._check(s)
        if not self.is_real_weight(eps):
            raise ValueError("projection axis must be a real weight")
        c = self.weight_form(eps, s)
        return tuple(x - c * y for x, y in zip(s, eps))

    def basis_label_index(self, label):
        return self.labels.index(label)

    def to_json(self):
        return {"rank": self.n, "labels": self.labels, "euler_matrix": self.E}

    @classmethod
    def from_json(cls, data):
        return cls(data["euler_matrix"], labels=data.get("labels"))

    def __eq__(self, other):
        return isinstance(other, EulerLattice) and self.E == other.E \
            and self.labels == other.labels
