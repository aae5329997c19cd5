"""Multiplicities of S_{(kd-|lam|, lam)} in (S^k V)^{(x)d} and their stable value.

Once k >= lam[0], stripping the first row of a tableau and lowering every
entry by one is a bijection onto semistandard tableaux of shape lam with
entries in 1..d-1, so the count settles at dim S_lam C^{d-1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partitions import Partition, count_semistandard, make_partition, schur_dimension, semistandard_tableaux


def first_row_shape(lam: Sequence[int], k: int, d: int) -> Partition:
    lam = make_partition(lam)
    top = k * d - sum(lam)
    if top < 0 or (lam and top < lam[0]):
        raise ValueError(f"({top}, {', '.join(map(str, lam))}) is not a partition")
    return make_partition((top,) + lam)


def s_kd(lam: Sequence[int], k: int, d: int) -> int:
    """Semistandard tableaux of shape (kd - |lam|, lam) with k entries equal to each of 1..d."""
    shape = first_row_shape(lam, k, d)
    return count_semistandard(shape, (k,) * d)


def strip_first_row(T: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v - 1 for v in row) for row in T[1:])


def restore_first_row(S: Sequence[Sequence[int]], k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of ``strip_first_row``: shift entries up and refill row one to content (k^d)."""
    lower = [tuple(v + 1 for v in row) for row in S]
    used = [0] * (d + 1)
    for row in lower:
        for v in row:
            used[v] += 1
    first: list[int] = []
    for v in range(1, d + 1):
        first.extend([v] * (k - used[v]))
    return (tuple(first),) + tuple(lower)


def is_semistandard(T: Sequence[Sequence[int]]) -> bool:
    rows_ok = all(row[i] <= row[i + 1] for row in T for i in range(len(row) - 1))
    cols_ok = all(
        T[r][c] < T[r + 1][c] for r in range(len(T) - 1) for c in range(len(T[r + 1]))
    )
    return rows_ok and cols_ok


@dataclass
class StabilizationRow:
    lam: Partition
    d: int
    # values[i] is s_{k,d}(lam) for k = i + 1; a shape that is not a
    # partition names no module and counts as multiplicity 0
    values: list[int]
    stable: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "d": self.d,
            "values": {str(k): v for k, v in enumerate(self.values, start=1)},
            "stable": self.stable,
            "ok": self.ok,
            "failures": self.failures,
        }


def stabilization_check(lam: Sequence[int], d: int, kmax: int) -> StabilizationRow:
    lam = make_partition(lam)
    lam1 = lam[0] if lam else 0
    if kmax < lam1:
        raise ValueError(f"kmax = {kmax} is below lambda_1 = {lam1}")
    if d < 1:
        raise ValueError("d must be positive")
    stable = schur_dimension(lam, d - 1)
    values: list[int] = []
    for k in range(1, kmax + 1):
        try:
            values.append(s_kd(lam, k, d))
        except ValueError:
            values.append(0)
    row = StabilizationRow(lam, d, values, stable)

    for k in range(max(lam1, 1), kmax + 1):
        v = values[k - 1]
        if v != stable:
            row.failures.append(f"s_(k={k},d={d})({lam}) = {v} != {stable}")
            continue
        if v == 0:
            continue
        witness = next(iter(semistandard_tableaux(first_row_shape(lam, k, d), (k,) * d)))
        S = strip_first_row(witness)
        if not (is_semistandard(S) and all(1 <= v <= d - 1 for r in S for v in r)):
            row.failures.append(f"stripped witness for k={k} is not a tableau with entries <= d-1")
        elif restore_first_row(S, k, d) != witness:
            row.failures.append(f"witness for k={k} does not round-trip")
    return row


def is_nondecreasing(values: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(values, values[1:]))
