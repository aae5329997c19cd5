import pytest
from hypothesis import given, settings, strategies as st

from plethysm.asymptotics import (
    first_row_shape,
    is_nondecreasing,
    is_semistandard,
    restore_first_row,
    s_kd,
    stabilization_check,
    strip_first_row,
)
from plethysm.oracle import decompose
from plethysm.partitions import partitions, schur_dimension, semistandard_tableaux


@pytest.mark.parametrize(
    "lam, k, d, expected",
    [((2,), 2, 2, 1), ((1, 1), 2, 2, 0), ((1, 1), 5, 2, 0), ((2, 1), 3, 3, 2), ((), 3, 2, 1)],
)
def test_s_kd_examples(lam, k, d, expected):
    assert s_kd(lam, k, d) == expected


def test_s_kd_invalid_shape():
    with pytest.raises(ValueError):
        s_kd((3,), 1, 2)
    with pytest.raises(ValueError):
        first_row_shape((2, 2), 1, 3)


@pytest.mark.parametrize(
    "lam, d, kmax, stable",
    [((2,), 2, 5, 1), ((1, 1), 2, 4, 0), ((2, 1), 3, 6, 2)],
)
def test_stabilization_examples(lam, d, kmax, stable):
    row = stabilization_check(lam, d, kmax)
    assert row.stable == stable
    assert row.ok
    assert all(v == stable for v in row.values[max(lam[0], 1) - 1:])


def test_stabilization_rejects_bad_range():
    with pytest.raises(ValueError):
        stabilization_check((3,), 2, 2)
    with pytest.raises(ValueError):
        stabilization_check((1,), 0, 2)


def test_stabilization_sweep():
    for size in range(7):
        for lam in partitions(size):
            for d in range(1, 6):
                kmax = (lam[0] if lam else 0) + 3
                row = stabilization_check(lam, d, kmax)
                assert row.ok, row.failures
                assert row.stable == schur_dimension(lam, d - 1)
                assert is_nondecreasing(row.values), (lam, d, row.values)


def test_matches_tensor_power_oracle():
    for k in range(1, 9):
        for d in range(1, 8 // k + 1):
            table = decompose(k, d, k * d, "sym_tensor")
            for size in range(k * d + 1):
                for lam in partitions(size):
                    try:
                        shape = first_row_shape(lam, k, d)
                    except ValueError:
                        continue
                    assert s_kd(lam, k, d) == table.multiplicity(shape), (lam, k, d)


def test_strip_and_restore():
    for T in semistandard_tableaux((5, 3, 1), (3, 3, 3)):
        S = strip_first_row(T)
        assert is_semistandard(S)
        assert restore_first_row(S, 3, 3) == T


def test_is_semistandard():
    assert is_semistandard(((1, 1, 2), (2, 3)))
    assert not is_semistandard(((1, 2), (1, 3)))
    assert not is_semistandard(((2, 1),))


def test_json():
    payload = stabilization_check((2,), 2, 3).to_json()
    assert payload["values"] == {"1": 0, "2": 1, "3": 1}
    assert payload["stable"] == 1 and payload["ok"]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=3), st.integers(1, 4))
def test_stable_value_property(parts, d):
    lam = tuple(sorted(parts, reverse=True))
    k = (lam[0] if lam else 1) + 1
    try:
        value = s_kd(lam, k, d)
    except ValueError:
        # no such shape, and then lam has too many parts for C^(d-1)
        value = 0
    assert value == schur_dimension(lam, d - 1)
