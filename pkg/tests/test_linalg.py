import random
from fractions import Fraction

from guca import linalg


def test_det_and_rank():
    assert linalg.det([[2, 0], [0, 3]]) == 6
    assert linalg.det([[1, 2], [2, 4]]) == 0
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.det([]) == 1


def test_inverse_unimodular():
    m = [[1, -1], [0, 1]]
    inv = linalg.int_inverse(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(2)


def test_int_solver_random():
    rng = random.Random(1)
    for _ in range(400):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)]
        y = [rng.randrange(-4, 5) for _ in range(cols)]
        c = [sum(m[i][j] * y[j] for j in range(cols)) for i in range(rows)]
        sol = linalg.int_solve_right(m, c)
        assert sol is not None
        part, kern = sol
        assert [sum(m[i][j] * part[j] for j in range(cols))
                for i in range(rows)] == c
        for kv in kern:
            assert all(sum(m[i][j] * kv[j] for j in range(cols)) == 0
                       for i in range(rows))


def test_int_solver_detects_non_integral():
    # 2y = 1 has no integer solution
    assert linalg.int_solve_right([[2]], [1]) is None
    assert linalg.int_solve_right([[2]], [4]) is not None


def test_rat_solve():
    sol = linalg.rat_solve_right([[2, 0], [0, 4]], [1, 2])
    assert sol == (Fraction(1, 2), Fraction(1, 2))
    assert linalg.rat_solve_right([[1, 1], [1, 1]], [0, 1]) is None


def test_kernel_spans_solutions():
    m = [[1, 1, 1]]
    part, kern = linalg.int_solve_right(m, [0])
    assert len(kern) == 2
    assert part == (0, 0, 0)
