import random

import pytest

from guca.lattice import QuiverQ
from tests.conftest import random_ice_quiver


def a2_lattice():
    return QuiverQ(["1", "2"], [("1", "2")]).lattice()


def test_euler_form_examples():
    lat = a2_lattice()
    assert lat.form((1, 0), (0, 1)) == -1
    assert lat.form((0, 0), (5, -7)) == 0
    assert lat.form((1, 1), (1, 1)) == 1


def test_weight_dim_duality():
    lat = a2_lattice()
    assert lat.weight_of_dim((1, 1)) == (-1, 0)
    assert lat.weight_of_dim((0, 0)) == (0, 0)
    rng = random.Random(3)
    for _ in range(50):
        a = tuple(rng.randrange(-9, 10) for _ in range(2))
        assert lat.dim_of_weight(lat.weight_of_dim(a)) == a
    # defining identity: weight_of_dim(a) . b = -<a, b>
    for _ in range(50):
        a = tuple(rng.randrange(-5, 6) for _ in range(2))
        b = tuple(rng.randrange(-5, 6) for _ in range(2))
        s = lat.weight_of_dim(a)
        assert sum(x * y for x, y in zip(s, b)) == -lat.form(a, b)


def test_is_real():
    lat = a2_lattice()
    assert lat.is_real((1, 0))
    assert not lat.is_real((0, 0))
    assert lat.is_real((1, 1))


def test_coxeter_identity():
    rng = random.Random(7)
    lat = a2_lattice()
    tau = lat.coxeter_matrix()
    assert all(isinstance(x, int) for row in tau for x in row)
    for _ in range(100):
        a = tuple(rng.randrange(-6, 7) for _ in range(2))
        b = tuple(rng.randrange(-6, 7) for _ in range(2))
        assert lat.form(a, b) == -lat.form(b, lat.coxeter(a))
    assert lat.coxeter((0, 0)) == (0, 0)
    # A2 simple: tau(S1) = S2
    assert lat.coxeter((1, 0)) == (0, 1)


def test_projections():
    lat = a2_lattice()
    rng = random.Random(9)
    eps = (1, 1)
    assert lat.project_left(eps, eps) == (0, 0)
    for _ in range(100):
        b = tuple(rng.randrange(-6, 7) for _ in range(2))
        lb = lat.project_left(eps, b)
        assert lat.form(eps, lb) == 0
        assert lat.project_left(eps, lb) == lb
        ra = lat.project_right(eps, b)
        assert lat.form(ra, eps) == 0
    # fixed points of l_eps are exactly eps-perp
    for _ in range(50):
        b = tuple(rng.randrange(-6, 7) for _ in range(2))
        if lat.form(eps, b) == 0:
            assert lat.project_left(eps, b) == b


def test_projection_requires_real():
    lat = a2_lattice()
    with pytest.raises(ValueError):
        lat.project_left((1, -1), (1, 0))


def test_unimodularity_random_acyclic():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randrange(2, 7)
        verts = [f"w{i}" for i in range(n)]
        arrows = []
        for i in range(n):
            for j in range(i + 1, n):
                for _ in range(rng.randrange(0, 3)):
                    arrows.append((verts[i], verts[j]))
        q = QuiverQ(verts, arrows)
        assert q.is_acyclic()
        q.lattice()  # constructor enforces |det| = 1


def test_acyclicity_detection():
    q = QuiverQ(["a", "b"], [("a", "b"), ("b", "a")])
    assert not q.is_acyclic()
    with pytest.raises(ValueError):
        q.require_acyclic()


def test_ice_quiver_invariants(rng):
    for _ in range(30):
        q = random_ice_quiver(rng)
        counts = q.arrow_counts()
        for (t, h) in counts:
            assert t != h
            if counts.get((h, t)):
                assert t in q.frozen and h in q.frozen
