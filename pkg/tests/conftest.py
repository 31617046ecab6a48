import random

import pytest

from guca import linalg
from guca.lattice import EulerLattice
from guca.quiver import IceQuiver
from guca.seeds import WeightConfig


def random_ice_quiver(rng, max_vertices=10, density=0.25):
    q = rng.randrange(2, max_vertices + 1)
    p = rng.randrange(1, q + 1)
    vertices = [f"v{i}" for i in range(q)]
    frozen = set(vertices[p:])
    counts = {}
    for i in range(q):
        for j in range(q):
            if i != j and rng.random() < density:
                counts[(vertices[i], vertices[j])] = rng.randrange(1, 3)
    # cancel 2-cycles unless both endpoints are frozen
    for (t, h) in list(counts):
        if (h, t) in counts and (t, h) in counts and t < h:
            if t in frozen and h in frozen:
                continue
            m = min(counts[(t, h)], counts[(h, t)])
            for key in ((t, h), (h, t)):
                counts[key] -= m
                if counts[key] == 0:
                    del counts[key]
    arrows = []
    for (t, h), m in sorted(counts.items()):
        arrows.extend([(t, h)] * m)
    return IceQuiver(vertices, frozen, arrows)


def random_weight_config(rng, quiver, dim=None):
    """A valid configuration: columns of sigma lie in the kernel of B."""
    b = quiver.b_matrix()
    p = len(b)
    q = quiver.q
    if p == 0:
        kernel = [tuple(1 if i == j else 0 for i in range(q))
                  for j in range(q)]
    else:
        kernel = linalg.IntSolver([list(r) for r in b]).kernel
    d = dim or max(2, len(kernel))
    lattice = EulerLattice(linalg.identity(d))
    cols = []
    for _ in range(d):
        col = [0] * q
        for k in kernel:
            c = rng.randrange(-2, 3)
            col = [x + c * y for x, y in zip(col, k)]
        cols.append(col)
    sigma = {v: tuple(cols[j][i] for j in range(d))
             for i, v in enumerate(quiver.vertices)}
    return WeightConfig(lattice, sigma, check=quiver)


def partitions_upto(total_max, max_len, max_part):
    out = []

    def rec(rem, mx, length, acc):
        out.append(list(acc))
        if length == 0:
            return
        for p in range(min(rem, mx), 0, -1):
            rec(rem - p, p, length - 1, acc + [p])

    for tot in range(total_max + 1):
        def gen(rem, mx, length, acc):
            if rem == 0:
                out.append(list(acc))
                return
            if length == 0:
                return
            for p in range(min(rem, mx), 0, -1):
                gen(rem - p, p, length - 1, acc + [p])
        gen(tot, max_part, max_len, [])
    # dedupe
    seen = set()
    uniq = []
    for p in out:
        t = tuple(p)
        if t not in seen:
            seen.add(t)
            uniq.append(p)
    return uniq


@pytest.fixture
def rng():
    return random.Random(20240817)
