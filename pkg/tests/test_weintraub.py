import json
from itertools import permutations

import pytest

from conftest import GOLDEN
from plethysm.multilinear import SymVector, TensorVector, canonical_tensor, permutation_sign, symmetrize
from plethysm.oracle import even_partitions
from plethysm.weintraub import (
    AlgorithmInvariantError,
    Frozen,
    Slot,
    certify,
    expand_P,
    identity_term,
    is_paired,
    iter_assignments,
    q_coefficient,
    run_algorithm,
    validate_input,
    verify_highest_weight,
)


def brute_P(st):
    """Sum over every tuple of slot permutations, without blocks or pruning."""
    slots = st.slot_positions()
    cols = sorted(slots)
    out = TensorVector()

    def rec(i, sigmas, sign):
        if i == len(cols):
            raw = [
                [c.value if isinstance(c, Frozen) else sigmas[c.column][c.position] for c in col]
                for col in st.columns
            ]
            key, wsign = canonical_tensor(raw)
            if wsign:
                out.add_term(key, sign * wsign)
            return
        s = cols[i]
        rows = slots[s]
        for images in permutations(rows):
            sigmas[s] = dict(zip(rows, images))
            rec(i + 1, sigmas, sign * permutation_sign(images))

    rec(0, {}, 1)
    return out


def grid(st):
    def show(cell):
        return cell.value if isinstance(cell, Frozen) else (cell.column, cell.position)
    return [[show(c) for c in col] for col in st.columns]


def small_cases(max_size):
    for k in (2, 4, 6):
        for size in range(k, max_size + 1, k):
            d = size // k
            for lam in even_partitions(size, d):
                yield lam, k


def test_golden_trace():
    golden = json.loads((GOLDEN / "weintraub_6662_k4_trace.json").read_text())
    cert = certify((6, 6, 6, 2), 4, expand=False)
    payload = cert.to_json(trace=True)
    for key in ("lambda", "lambda_conjugate", "k", "d", "steps", "trace", "tableau"):
        assert payload[key] == golden[key], key


def test_worked_example_grid():
    st, state = run_algorithm((6, 6, 6, 2), 4)
    assert state.steps == ["B", "C", "B", "A", "B", "B"]
    s, t, dl = 1, 2, 3
    assert grid(st) == [
        [(s, 1), (s, 2), (s, 3), (s, 4)],
        [(s, 5), (s, 6), (t, 1), (t, 2)],
        [(t, 3), (t, 4), (t, 5), (t, 6)],
        [1, 2, (dl, 3), (dl, 4)],
        [1, 2, (dl, 5), (dl, 6)],
    ]
    assert identity_term(st) == ((1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6), (1, 2, 3, 4), (1, 2, 5, 6))


def test_small_traces():
    st, state = run_algorithm((2, 2), 2)
    assert state.steps == ["A"]
    assert grid(st) == [[1, 2], [1, 2]]
    st, state = run_algorithm((4, 2), 2)
    assert state.steps == ["B", "B", "A"]
    assert grid(st) == [[(1, 1), (1, 2)], [(1, 3), (1, 4)], [1, 2]]
    st, state = run_algorithm((2,), 2)
    assert grid(st) == [[1, 2]]


def test_expand_examples():
    assert expand_P(run_algorithm((2, 2), 2)[0]) == TensorVector({((1, 2), (1, 2)): 1})
    assert expand_P(run_algorithm((2,), 2)[0]) == TensorVector({((1, 2),): 1})
    P = expand_P(run_algorithm((4, 2), 2)[0])
    assert P[((1, 2), (3, 4), (1, 2))] == 4


@pytest.mark.parametrize("lam, k", [((4, 2), 2), ((2, 2), 2), ((4, 4), 4), ((6, 2), 4), ((4, 2, 2), 2), ((2, 2, 2), 2), ((6, 6), 6), ((4, 4, 4), 4)])
def test_expand_matches_full_permutation_sum(lam, k):
    st, _ = run_algorithm(lam, k)
    assert expand_P(st) == brute_P(st)


def test_pruning_drops_only_vanishing_terms():
    st, _ = run_algorithm((4, 4, 4), 4)
    pruned = [(a.sigmas, key) for a, key, _ in iter_assignments(st, prune=True)]
    full = [(a.sigmas, key) for a, key, _ in iter_assignments(st, prune=False)]
    assert sorted(map(repr, pruned)) == sorted(map(repr, full))


@pytest.mark.parametrize("lam, k, expected", [((2, 2), 2, 1), ((4, 2), 2, 8), ((2,), 2, 1)])
def test_q_coefficient_examples(lam, k, expected):
    st, _ = run_algorithm(lam, k)
    report = q_coefficient(expand_P(st), st)
    assert report.coefficient == expected
    assert report.ok


def test_symmetrize_small():
    st, _ = run_algorithm((2, 2), 2)
    assert symmetrize(expand_P(st)) == SymVector({((1, 2), (1, 2)): 1})


def test_highest_weight_examples():
    for lam, k in [((4, 2), 2), ((2, 2), 2)]:
        st, _ = run_algorithm(lam, k)
        assert verify_highest_weight(expand_P(st), lam).ok


def test_highest_weight_detects_failure():
    bad = TensorVector({((1, 2), (1, 3), (2, 4)): 1})
    report = verify_highest_weight(bad, (4, 2))
    assert report.weight_ok
    assert not report.ok
    assert report.offending_operator == 1
    wrong_weight = verify_highest_weight(TensorVector({((1, 3), (1, 2)): 1}), (2, 2))
    assert not wrong_weight.weight_ok


def test_worked_example_certificate():
    cert = certify((6, 6, 6, 2), 4)
    assert cert.ok
    assert cert.hw.ok
    assert cert.q.coefficient > 0
    assert cert.q.all_paired and cert.q.all_positive


def test_invariants_hold_over_sweep():
    count = 0
    for lam, k in small_cases(12):
        st, state = run_algorithm(lam, k)
        assert state.steps.count("A") + state.steps.count("B") + state.steps.count("C") == len(state.steps)
        ident = identity_term(st)
        assert all(len(w) == k for w in ident)
        count += 1
    assert count > 20


def test_certify_small_sweep():
    for lam, k in small_cases(8):
        cert = certify(lam, k)
        assert cert.ok, (lam, k)


def test_is_paired():
    assert is_paired({1: 1, 2: 2, 3: 3, 4: 4})
    assert is_paired({1: 3, 2: 4, 3: 1, 4: 2})
    assert not is_paired({1: 2, 2: 1})
    assert not is_paired({1: 1, 2: 3, 3: 2})


@pytest.mark.parametrize(
    "lam, k",
    [((3, 1), 2), ((2, 2), 3), ((4, 2), 4), ((2, 2, 2), 6), ((), 2), ((2,), 0), ((2,), -2)],
)
def test_invalid_inputs(lam, k):
    with pytest.raises(ValueError):
        validate_input(lam, k)
    with pytest.raises(ValueError):
        run_algorithm(lam, k)


def test_invariant_error_is_not_value_error():
    assert issubclass(AlgorithmInvariantError, AssertionError)
    assert not issubclass(AlgorithmInvariantError, ValueError)


def test_cell_json():
    assert Frozen(2).to_json() == {"frozen": 2}
    assert Slot(1, 3).to_json() == {"slot": [1, 3]}
