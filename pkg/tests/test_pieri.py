from itertools import product

import pytest

from plethysm.multilinear import TensorVector, hwv_space_dim, raising_op, strip_zeros, weight_of
from plethysm.partitions import conjugate, partitions
from plethysm.pieri import (
    a_kd,
    build_rT,
    build_wT,
    enumerate_pieri_tableaux,
    is_lower_unitriangular,
    pair,
    pairing_matrix,
    tableau_leq,
)


def brute_pieri_count(k, d, lam):
    """Fill the boxes of lam* by brute force and check the tableau conditions directly."""
    shape = conjugate(lam)
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    count = 0
    for values in product(range(1, d + 1), repeat=len(cells)):
        if any(values.count(v) != k for v in range(1, d + 1)):
            continue
        g = dict(zip(cells, values))
        rows_ok = all(g[(r, c)] < g[(r, c + 1)] for (r, c) in cells if (r, c + 1) in g)
        cols_ok = all(g[(r, c)] <= g[(r + 1, c)] for (r, c) in cells if (r + 1, c) in g)
        count += rows_ok and cols_ok
    return count


def all_cases(max_kd):
    for k in range(1, max_kd + 1):
        for d in range(1, max_kd // k + 1):
            for lam in partitions(k * d):
                yield k, d, lam


def test_example_unique_tableau():
    (T,) = enumerate_pieri_tableaux(3, 2, (4, 2))
    assert T.shape == (2, 2, 1, 1)
    assert T.rows() == [[1, 2], [1, 2], [1], [2]]
    assert T.to_json() == [[1, 2], [1, 2], [1], [2]]


def test_small_enumerations():
    (T,) = enumerate_pieri_tableaux(2, 1, (2,))
    assert T.rows() == [[1], [1]]
    (T,) = enumerate_pieri_tableaux(2, 2, (2, 2))
    assert T.shape == (2, 2)
    assert T.rows() == [[1, 2], [1, 2]]


def test_enumerate_rejects_size_mismatch():
    with pytest.raises(ValueError):
        enumerate_pieri_tableaux(2, 2, (3,))


def test_example_wT_matches_two_term_display():
    (T,) = enumerate_pieri_tableaux(3, 2, (4, 2))
    w = build_wT(T)
    # the two unsorted terms of the display, before wedge sorting
    displayed = TensorVector.from_raw([
        (((1, 2, 3), (4, 1, 2)), 1),
        (((1, 2, 4), (3, 1, 2)), -1),
    ])
    assert w == displayed
    assert w == TensorVector({((1, 2, 3), (1, 2, 4)): 1, ((1, 2, 4), (1, 2, 3)): -1})


def test_example_rT_and_pairing():
    (T,) = enumerate_pieri_tableaux(3, 2, (4, 2))
    assert build_rT(T) == ((1, 2, 3), (4, 1, 2))
    assert pair(build_rT(T), build_wT(T)) == 1
    assert pair(build_rT(T), TensorVector()) == 0


def test_small_rT_and_wT():
    (T,) = enumerate_pieri_tableaux(2, 2, (2, 2))
    assert build_wT(T) == TensorVector({((1, 2), (1, 2)): 1})
    assert build_rT(T) == ((1, 2), (1, 2))
    (T,) = enumerate_pieri_tableaux(4, 1, (4,))
    assert build_rT(T) == ((1, 2, 3, 4),)


def test_pair_shape_mismatch():
    with pytest.raises(ValueError):
        pair(((1, 2),), TensorVector({((1, 2), (1, 2)): 1}))


def test_later_duals_vanish_on_earlier_vectors():
    ts = enumerate_pieri_tableaux(2, 3, (4, 2))
    assert len(ts) > 1
    for i, T in enumerate(ts):
        w = build_wT(T)
        for Tp in ts[i + 1:]:
            assert pair(build_rT(Tp), w) == 0


def test_tableau_order_is_total():
    ts = enumerate_pieri_tableaux(2, 4, (3, 3, 1, 1))
    assert len(ts) > 1
    for a in ts:
        assert tableau_leq(a, a)
        for b in ts:
            if a != b:
                assert tableau_leq(a, b) != tableau_leq(b, a)
    with pytest.raises(ValueError):
        tableau_leq(ts[0], enumerate_pieri_tableaux(2, 2, (2, 2))[0])


def test_count_matches_brute_force_fillings():
    for k, d, lam in all_cases(6):
        assert a_kd(k, d, lam) == brute_pieri_count(k, d, lam), (k, d, lam)


def test_basis_is_highest_weight_and_triangular():
    for k, d, lam in all_cases(7):
        ts = enumerate_pieri_tableaux(k, d, lam)
        conj = conjugate(lam)
        for T in ts:
            w = build_wT(T)
            assert w
            assert all(strip_zeros(weight_of(key)) == conj for key in w)
            assert all(not raising_op(j, w) for j in range(1, len(conj) + 1))
        assert is_lower_unitriangular(pairing_matrix(ts))


def test_count_equals_kernel_dimension():
    for k, d, lam in all_cases(7):
        conj = conjugate(lam)
        assert a_kd(k, d, lam) == hwv_space_dim(k, d, conj, len(conj)), (k, d, lam)


def test_unitriangular_helper():
    assert is_lower_unitriangular([[1, 0], [5, 1]])
    assert not is_lower_unitriangular([[1, 2], [0, 1]])
    assert not is_lower_unitriangular([[2]])
