"""Explicit highest weight vectors of weight lam* in S^d(Wedge^k W).

For an even partition ``lam`` of ``d*k`` (k even, at most d parts) the
filling algorithm below places the boxes of ``lam*`` into a k x d
rectangle. Cells are either frozen literals or slots ``sigma_s(p)``
driven by one permutation per column ``s`` of ``lam*``. Summing the
signed simple tensors over all slot permutations gives a vector P of
weight lam*; it is killed by the raising operators and its image in the
symmetric power is nonzero.

Columns of ``lam*`` and rectangle columns are 1-based in every public
structure, matching the basis indices e_1, e_2, ...
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence, Union

from .multilinear import (
    SimpleTensor,
    TensorVector,
    canonical_tensor,
    permutation_sign,
    raising_op,
    strip_zeros,
    symmetrize,
    weight_of,
)
from .partitions import Partition, conjugate, is_even, make_partition


class AlgorithmInvariantError(AssertionError):
    """An invariant of the filling algorithm broke; this is a bug, not bad input."""


@dataclass(frozen=True)
class Frozen:
    value: int

    def to_json(self) -> dict:
        return {"frozen": self.value}


@dataclass(frozen=True)
class Slot:
    column: int
    position: int

    def to_json(self) -> dict:
        return {"slot": [self.column, self.position]}


Cell = Union[Frozen, Slot]


@dataclass
class SymbolicTableau:
    lam: Partition
    k: int
    d: int
    # columns[c][r]: cell in row r of rectangle column c (both 0-based here)
    columns: list[list[Cell]]

    @property
    def conj(self) -> Partition:
        return conjugate(self.lam)

    def rows(self) -> list[list[Cell]]:
        return [[self.columns[c][r] for c in range(self.d)] for r in range(self.k)]

    def to_json(self) -> list[list[dict]]:
        return [[cell.to_json() for cell in row] for row in self.rows()]

    def slot_positions(self) -> dict[int, list[int]]:
        """Row indices of each lam*-column that are filled by slots, sorted."""
        out: dict[int, list[int]] = {s: [] for s in range(1, len(self.lam) + 1)}
        for col in self.columns:
            for cell in col:
                if isinstance(cell, Slot):
                    out[cell.column].append(cell.position)
        return {s: sorted(ps) for s, ps in out.items()}

    def frozen_positions(self) -> dict[int, list[int]]:
        slots = self.slot_positions()
        return {
            s: [p for p in range(1, self.lam[s - 1] + 1) if p not in set(slots[s])]
            for s in slots
        }


@dataclass
class AlgoState:
    k: int
    d: int
    lam: Partition
    kPrime: int
    dPrime: int
    crossed: list[int]
    log: list[dict] = field(default_factory=list)
    observations: list[dict] = field(default_factory=list)

    @property
    def mPrime(self) -> int:
        return self.k - self.kPrime

    @property
    def lPrime(self) -> int:
        m = self.mPrime
        return sum(1 for s, c in enumerate(self.crossed) if self.lam[s] > m and c <= m)

    @property
    def oPrime(self) -> int | None:
        for s, c in enumerate(self.crossed):
            if c < self.lam[s]:
                return s + 1
        return None

    @property
    def hPrime(self) -> int:
        o = self.oPrime
        return self.crossed[o - 1] if o else 0

    @property
    def jPrime(self) -> int:
        o = self.oPrime
        return self.lam[o - 1] - self.crossed[o - 1] if o else 0

    def snapshot(self) -> dict:
        return {
            "kPrime": self.kPrime,
            "dPrime": self.dPrime,
            "mPrime": self.mPrime,
            "lPrime": self.lPrime,
            "oPrime": self.oPrime,
            "hPrime": self.hPrime,
            "jPrime": self.jPrime,
        }

    @property
    def steps(self) -> list[str]:
        return [entry["step"] for entry in self.log]

    def trace_json(self) -> list[dict]:
        return [{"step": e["step"], "before": e["before"]} for e in self.log]


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise AlgorithmInvariantError(message)


def validate_input(lam: Sequence[int], k: int) -> tuple[Partition, int]:
    """Return ``(lam, d)`` or raise ValueError for unsupported inputs."""
    lam = make_partition(lam)
    if k <= 0 or k % 2:
        raise ValueError(f"k must be a positive even integer, got {k}")
    if not lam:
        raise ValueError("lambda must be nonempty")
    if not is_even(lam):
        raise ValueError(f"lambda must have only even parts, got {lam}")
    if sum(lam) % k:
        raise ValueError(f"k = {k} does not divide |lambda| = {sum(lam)}")
    d = sum(lam) // k
    if len(lam) > d:
        raise ValueError(f"lambda has {len(lam)} parts but d = {d}; at most d parts are allowed")
    return lam, d


def _check_state(st: AlgoState) -> None:
    _check(st.lPrime <= st.dPrime, f"l' = {st.lPrime} exceeds d' = {st.dPrime}")
    _check(st.mPrime % 2 == 0, f"m' = {st.mPrime} is odd")
    _check(all(0 <= c <= n for c, n in zip(st.crossed, st.lam)), "crossed count out of range")
    uncrossed = sum(n - c for c, n in zip(st.crossed, st.lam))
    _check(uncrossed == st.kPrime * st.dPrime, "uncrossed boxes do not match the remaining rectangle")


def run_algorithm(lam: Sequence[int], k: int) -> tuple[SymbolicTableau, AlgoState]:
    """Fill the k x d rectangle from lam* by steps A, B and C.

    Step A applies when l' = d' and freezes rows m'+1, m'+2 of the
    remaining rectangle. Otherwise the leftmost remaining rectangle column
    is filled from lam*-column o': entirely (B, when j' >= k') or by
    finishing o' and continuing in column o'+1 (C).
    """
    lam, d = validate_input(lam, k)
    state = AlgoState(k=k, d=d, lam=lam, kPrime=k, dPrime=d, crossed=[0] * len(lam))
    grid: list[list[Cell | None]] = [[None] * k for _ in range(d)]
    _check_state(state)

    while state.kPrime > 0 and state.dPrime > 0:
        before = state.snapshot()
        m, kp, dp = state.mPrime, state.kPrime, state.dPrime
        first_col = d - dp
        if state.lPrime == dp:
            _check(not state.log or state.log[-1]["step"] != "C", "step A right after step C")
            active = [s for s, c in enumerate(state.crossed) if lam[s] > m and c <= m]
            for s in active:
                _check(state.crossed[s] == m, "active column not crossed exactly to row m'")
                _check(lam[s] >= m + 2, "active column too short for step A")
                state.crossed[s] = m + 2
            for c in range(first_col, d):
                grid[c][m] = Frozen(m + 1)
                grid[c][m + 1] = Frozen(m + 2)
            state.kPrime -= 2
            step = "A"
        else:
            o = state.oPrime
            h, j = state.hPrime, state.jPrime
            col = grid[first_col]
            if j >= kp:
                for i in range(kp):
                    col[m + i] = Slot(o, h + 1 + i)
                state.crossed[o - 1] += kp
                step = "B"
            else:
                _check(o < len(lam), "step C needs a next column of lam*")
                y1 = lam[o - 1] - h
                y2 = lam[o] - m
                _check(y1 + y2 >= kp, f"y1 + y2 = {y1 + y2} < k' = {kp}")
                _check(state.crossed[o] == m, "next column not crossed exactly to row m'")
                for i in range(j):
                    col[m + i] = Slot(o, h + 1 + i)
                state.crossed[o - 1] = lam[o - 1]
                for i in range(kp - j):
                    col[m + j + i] = Slot(o + 1, m + 1 + i)
                state.crossed[o] += kp - j
                step = "C"
            state.dPrime -= 1
        state.log.append({"step": step, "before": before})
        if step == "B":
            state.observations.append({
                "step_index": len(state.log) - 1,
                "lPrime_after_B": state.lPrime,
                "at_least_k": state.lPrime >= k,
            })
        _check_state(state)

    _check(all(c == n for c, n in zip(state.crossed, lam)), "lam* not fully crossed out")
    _check(all(cell is not None for col in grid for cell in col), "rectangle not fully filled")
    st = SymbolicTableau(lam=lam, k=k, d=d, columns=grid)  # type: ignore[arg-type]
    _check_tableau(st)
    return st, state


def _check_tableau(st: SymbolicTableau) -> None:
    seen: set[tuple[int, int]] = set()
    for col in st.columns:
        for r, cell in enumerate(col):
            if isinstance(cell, Slot):
                box = (cell.column, cell.position)
                _check(box not in seen, f"box {box} used twice")
                seen.add(box)
    frozen_count = sum(isinstance(cell, Frozen) for col in st.columns for cell in col)
    _check(len(seen) + frozen_count == sum(st.lam), "cells do not biject onto the boxes of lam*")
    # frozen rows of every column come in the pairs crossed by step A
    for s, rows in st.frozen_positions().items():
        _check(len(rows) % 2 == 0, f"column {s} has an odd number of frozen rows")


# --- expansion -----------------------------------------------------------

@dataclass(frozen=True)
class Assignment:
    """One choice of slot permutations, as images of the slot rows of each lam*-column."""

    sigmas: dict[int, dict[int, int]]
    sign: int

    def is_paired(self) -> bool:
        return all(is_paired(sigma) for sigma in self.sigmas.values())


def is_paired(sigma: dict[int, int]) -> bool:
    """sigma(j) = i with i odd forces sigma(j + 1) = i + 1."""
    return all(sigma.get(j + 1) == i + 1 for j, i in sigma.items() if i % 2 == 1)


def _blocks(st: SymbolicTableau) -> list[tuple[int, int, tuple[int, ...]]]:
    """(lam*-column, rectangle column, slot positions) for every nonempty block."""
    out = []
    for s in range(1, len(st.lam) + 1):
        for c, col in enumerate(st.columns):
            ps = tuple(cell.position for cell in col if isinstance(cell, Slot) and cell.column == s)
            if ps:
                out.append((s, c, ps))
    return out


def _block_multiplier(st: SymbolicTableau) -> int:
    return math.prod(math.factorial(len(ps)) for _, _, ps in _blocks(st))


def _fill(st: SymbolicTableau, sigmas: dict[int, dict[int, int]]) -> list[list[int]]:
    return [
        [cell.value if isinstance(cell, Frozen) else sigmas[cell.column][cell.position] for cell in col]
        for col in st.columns
    ]


def iter_assignments(st: SymbolicTableau, prune: bool = True) -> Iterator[tuple[Assignment, SimpleTensor, int]]:
    """Block-increasing slot assignments with their canonical simple tensor.

    Each assignment increases on the slots a lam*-column sends into a single
    rectangle column; the full sum over permutations is the sum over these
    times the product of block factorials. With ``prune`` an assignment is
    abandoned as soon as a rectangle column repeats an index. Yields
    ``(assignment, key, wedge_sign)`` for nonvanishing terms.
    """
    blocks = _blocks(st)
    slot_rows = st.slot_positions()
    # values already present in each rectangle column, frozen ones included
    used: list[set[int]] = [
        {cell.value for cell in col if isinstance(cell, Frozen)} for col in st.columns
    ]
    pools = {s: set(rows) for s, rows in slot_rows.items()}
    sigmas: dict[int, dict[int, int]] = {s: {} for s in slot_rows}

    def rec(bi: int) -> Iterator[tuple[Assignment, SimpleTensor, int]]:
        if bi == len(blocks):
            sign = 1
            for s, rows in slot_rows.items():
                sign *= permutation_sign([sigmas[s][p] for p in rows])
            raw = _fill(st, sigmas)
            key, wsign = canonical_tensor(raw)
            if wsign:
                yield Assignment({s: dict(m) for s, m in sigmas.items()}, sign), key, wsign
            return
        s, c, ps = blocks[bi]
        pool = sorted(pools[s])
        for images in combinations(pool, len(ps)):
            if prune and any(v in used[c] for v in images):
                continue
            for p, v in zip(ps, images):
                sigmas[s][p] = v
            pools[s].difference_update(images)
            used[c].update(images)
            yield from rec(bi + 1)
            used[c].difference_update(images)
            pools[s].update(images)
            for p in ps:
                del sigmas[s][p]

    yield from rec(0)


def expand_P(st: SymbolicTableau) -> TensorVector:
    """Signed sum of the simple tensors of all slot assignments, canonicalized."""
    mult = _block_multiplier(st)
    out = TensorVector()
    for a, key, wsign in iter_assignments(st):
        out.add_term(key, mult * a.sign * wsign)
    return out


@dataclass
class HighestWeightReport:
    nonzero: bool
    weight_ok: bool
    killed: dict[int, bool]
    offending_term: SimpleTensor | None = None
    offending_operator: int | None = None

    @property
    def ok(self) -> bool:
        return self.nonzero and self.weight_ok and all(self.killed.values())

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "nonzero": self.nonzero,
            "weight_ok": self.weight_ok,
            "killed": {str(j): v for j, v in self.killed.items()},
            "offending_term": None if self.offending_term is None else [list(w) for w in self.offending_term],
            "offending_operator": self.offending_operator,
        }


def verify_highest_weight(P: TensorVector, lam: Sequence[int]) -> HighestWeightReport:
    """Check P != 0, every term has weight lam*, and X_j P = 0 for 1 <= j <= len(lam*)."""
    conj = conjugate(make_partition(lam))
    n = len(conj)
    report = HighestWeightReport(nonzero=bool(P), weight_ok=True, killed={})
    for key in P:
        if strip_zeros(weight_of(key)) != conj:
            report.weight_ok = False
            report.offending_term = key
            break
    for j in range(1, n + 1):
        image = raising_op(j, P)
        report.killed[j] = not image
        if image and report.offending_term is None:
            report.offending_term = min(image)
            report.offending_operator = j
    return report


def identity_term(st: SymbolicTableau) -> SimpleTensor:
    """The canonical simple tensor with every slot permutation the identity."""
    slots = st.slot_positions()
    sigmas = {s: {p: p for p in rows} for s, rows in slots.items()}
    key, sign = canonical_tensor(_fill(st, sigmas))
    _check(sign != 0, "identity assignment repeats an index in a rectangle column")
    return key


@dataclass
class QReport:
    multiset: SimpleTensor
    coefficient: int
    contributions: int
    all_paired: bool
    all_positive: bool

    @property
    def ok(self) -> bool:
        return self.coefficient > 0 and self.all_paired and self.all_positive

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "multiset": [list(w) for w in self.multiset],
            "coefficient": str(self.coefficient),
            "contributions": self.contributions,
            "all_paired": self.all_paired,
            "all_positive": self.all_positive,
        }


def q_coefficient(P: TensorVector, st: SymbolicTableau) -> QReport:
    """Coefficient of the symmetrized identity term in the symmetrization of P.

    Every block-increasing assignment landing on that multiset is also
    checked to be paired and to contribute with positive sign.
    """
    q = tuple(sorted(identity_term(st)))
    coeff = symmetrize(P)[q]
    contributions = 0
    all_paired = all_positive = True
    for a, key, wsign in iter_assignments(st):
        if tuple(sorted(key)) != q:
            continue
        contributions += 1
        all_paired &= a.is_paired()
        all_positive &= a.sign * wsign > 0
    return QReport(q, coeff, contributions, all_paired, all_positive)


@dataclass
class Certificate:
    lam: Partition
    k: int
    d: int
    tableau: SymbolicTableau
    state: AlgoState
    P: TensorVector | None = None
    hw: HighestWeightReport | None = None
    sym_terms: int | None = None
    q: QReport | None = None

    @property
    def ok(self) -> bool:
        if self.P is None:
            return True
        return bool(self.hw and self.hw.ok and self.sym_terms and self.q and self.q.ok)

    def to_json(self, trace: bool = False) -> dict:
        out: dict = {
            "lambda": list(self.lam),
            "lambda_conjugate": list(conjugate(self.lam)),
            "k": self.k,
            "d": self.d,
            "steps": self.state.steps,
            "tableau": self.tableau.to_json(),
            "ok": self.ok,
        }
        if trace:
            out["trace"] = self.state.trace_json()
            out["observations"] = self.state.observations
        if self.P is not None:
            out["P_terms"] = len(self.P)
            out["highest_weight"] = self.hw.to_json()
            out["symmetrized_terms"] = self.sym_terms
            out["Q"] = self.q.to_json()
        return out


def certify(lam: Sequence[int], k: int, expand: bool = True) -> Certificate:
    """Run the whole witness pipeline for ``(lam, k)``."""
    st, state = run_algorithm(lam, k)
    cert = Certificate(st.lam, k, st.d, st, state)
    if expand:
        P = expand_P(st)
        cert.P = P
        cert.hw = verify_highest_weight(P, st.lam)
        cert.sym_terms = len(symmetrize(P))
        cert.q = q_coefficient(P, st)
    return cert
