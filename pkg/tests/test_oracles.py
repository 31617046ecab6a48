import pytest

from guca.oracles import (kostant_oracle, kostka_oracle, lr_oracle,
                          type_a_positive_roots,
                          verify_kostant_correspondence)


def test_lr_known_values():
    assert lr_oracle([2], [1], [1]) == 1
    assert lr_oracle([1, 1], [1], [1]) == 1
    assert lr_oracle([3, 2, 1], [2, 1], [2, 1]) == 2
    assert lr_oracle([4, 2], [2, 1], [2, 1]) == 1
    assert lr_oracle([2, 1], [2, 1], []) == 1
    assert lr_oracle([2, 2], [2, 1], [2, 1]) == 0
    assert lr_oracle([], [], []) == 1


def test_lr_symmetry():
    for lam, mu, nu in [([3, 2, 1], [2, 1], [2, 1]),
                        ([4, 3, 2, 1], [3, 1], [3, 2, 1]),
                        ([3, 2, 2, 1], [2, 2], [2, 2])]:
        assert lr_oracle(lam, mu, nu) == lr_oracle(lam, nu, mu)


def test_lr_pieri_rule():
    # multiplying by a single row: coefficients are 0/1 on horizontal strips
    assert lr_oracle([3, 1], [2, 1], [1]) == 1
    assert lr_oracle([2, 2], [2, 1], [1]) == 1
    assert lr_oracle([2, 1, 1], [2, 1], [1]) == 1
    assert lr_oracle([3, 1], [2, 1], [1, 1]) == 0


def test_lr_malformed():
    with pytest.raises(ValueError):
        lr_oracle([1, 2], [1], [1])


def test_kostka_known_values():
    assert kostka_oracle([2, 1], [1, 1, 1]) == 2
    assert kostka_oracle([2, 1], [2, 1]) == 1
    assert kostka_oracle([3], [1, 1, 1]) == 1
    assert kostka_oracle([1, 1], [2]) == 0
    assert kostka_oracle([], []) == 1


def test_kostka_symmetric_in_content():
    assert kostka_oracle([2, 1], [1, 2]) == kostka_oracle([2, 1], [2, 1])
    assert kostka_oracle([3, 1], [1, 1, 2]) == kostka_oracle([3, 1], [2, 1, 1])


def test_kostant_known_values():
    assert kostant_oracle((1, 0, -1), 3) == 2
    assert kostant_oracle((0, 0, 0), 3) == 1
    assert kostant_oracle((1, -1, 0), 3) == 1
    assert kostant_oracle((1, 1, -1, -1), 4) == 5
    assert kostant_oracle((1, 0, 0), 3) == 0


def test_positive_roots():
    roots = type_a_positive_roots(3)
    assert len(roots) == 3
    assert (1, -1, 0) in roots and (1, 0, -1) in roots


def test_kostant_correspondence_n3():
    rep = verify_kostant_correspondence(3)
    assert rep["ok"]
    assert rep["num_facets"] == 3
    assert rep["totally_unimodular"]
    assert rep["h_phi_equals_sigma"]
    assert rep["phi_rows_are_positive_roots"]
    assert rep["zero_fiber"] == (1, 1)
