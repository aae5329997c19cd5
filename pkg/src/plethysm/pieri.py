"""Highest weight bases of (Wedge^k W)^{(x)d} indexed by Pieri tableaux.

A Pieri tableau for ``(k, d, lam)`` fills the conjugate diagram ``lam*``
with values 1..d, each exactly k times, strictly increasing along rows
and weakly increasing down columns. Column ``s`` of ``lam*`` has
``lam[s]`` boxes, so the tableau is determined by the counts
``h[s][b]`` of value ``b + 1`` in column ``s``.

Tableaux are ordered by their count sequences read column after column,
with the lexicographically LARGER sequence first: with that order the
pairing ``r_{T'}(w_T)`` vanishes whenever ``T'`` comes after ``T``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from .multilinear import TensorVector, canonical_tensor, permutation_sign
from .partitions import Partition, conjugate, make_partition


@dataclass(frozen=True)
class PieriTableau:
    k: int
    d: int
    lam: Partition
    # h[s][b]: number of entries equal to b + 1 in column s of lam*
    h: tuple[tuple[int, ...], ...]

    @cached_property
    def f(self) -> tuple[tuple[int, ...], ...]:
        """Cumulative counts: f[s][b] entries <= b in column s, with f[s][0] = 0."""
        out = []
        for col in self.h:
            acc = [0]
            for c in col:
                acc.append(acc[-1] + c)
            out.append(tuple(acc))
        return tuple(out)

    @property
    def shape(self) -> Partition:
        return conjugate(self.lam)

    @property
    def flat_h(self) -> tuple[int, ...]:
        """h read column after column."""
        return tuple(x for col in self.h for x in col)

    def columns(self) -> list[list[int]]:
        return [[b + 1 for b, c in enumerate(col) for _ in range(c)] for col in self.h]

    def rows(self) -> list[list[int]]:
        cols = self.columns()
        return [[cols[s][i] for s in range(len(cols)) if i < len(cols[s])] for i in range(len(cols[0]) if cols else 0)]

    def to_json(self) -> list[list[int]]:
        return self.rows()


def _check_size(k: int, d: int, lam: Sequence[int]) -> Partition:
    lam = make_partition(lam)
    if k < 1 or d < 1:
        raise ValueError("k and d must be positive")
    if sum(lam) != k * d:
        raise ValueError(f"|lambda| = {sum(lam)} but k*d = {k * d}")
    return lam


def _compositions(total: int, parts: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` entries with entry i <= caps[i], lex decreasing."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    tail_cap = sum(caps[1:parts])
    for first in range(min(total, caps[0]), max(0, total - tail_cap) - 1, -1):
        for rest in _compositions(total - first, parts - 1, caps[1:]):
            yield (first,) + rest


def enumerate_pieri_tableaux(k: int, d: int, lam: Sequence[int]) -> list[PieriTableau]:
    """All Pieri tableaux of shape lam* and weight (k^d), sorted by the tableau order.

    Column count vectors are generated in decreasing lexicographic order,
    so the output needs no sorting.
    """
    lam = _check_size(k, d, lam)
    out: list[PieriTableau] = []
    used = [0] * d

    def rec(s: int, prev_f: tuple[int, ...] | None, acc: list[tuple[int, ...]]) -> None:
        if s == len(lam):
            if all(u == k for u in used):
                out.append(PieriTableau(k, d, lam, tuple(acc)))
            return
        caps = [k - u for u in used]
        for col in _compositions(lam[s], d, caps):
            f = [0]
            for c in col:
                f.append(f[-1] + c)
            # row strictness against the previous column: f[b] <= prev_f[b - 1]
            if prev_f is not None and any(f[b] > prev_f[b - 1] for b in range(1, d + 1)):
                continue
            for b, c in enumerate(col):
                used[b] += c
            acc.append(col)
            rec(s + 1, tuple(f), acc)
            acc.pop()
            for b, c in enumerate(col):
                used[b] -= c

    rec(0, None, [])
    assert all(a.flat_h > b.flat_h for a, b in zip(out, out[1:]))
    return out


def tableau_leq(t1: PieriTableau, t2: PieriTableau) -> bool:
    """``t1 <= t2`` in the tableau order, i.e. h(t1) >= h(t2) lexicographically."""
    if (t1.k, t1.d, t1.lam) != (t2.k, t2.d, t2.lam):
        raise ValueError("tableaux of different shape or weight are not comparable")
    return t1.flat_h >= t2.flat_h


def _block_increasing_maps(length: int, blocks: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..length that increase on consecutive position blocks of the given sizes.

    Each is returned as the tuple of images; these are the coset
    representatives of the product of block symmetric groups.
    """
    def rec(remaining: tuple[int, ...], bi: int) -> Iterator[tuple[int, ...]]:
        if bi == len(blocks):
            yield ()
            return
        for chosen in combinations(remaining, blocks[bi]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest, bi + 1):
                yield chosen + tail

    yield from rec(tuple(range(1, length + 1)), 0)


def build_wT(T: PieriTableau) -> TensorVector:
    """The integral highest weight vector attached to ``T``.

    Summing over permutations that increase inside each block of positions
    landing in one tensor factor replaces the division by prod h!.
    """
    d = T.d
    per_column = []
    for s, col in enumerate(T.h):
        maps = []
        for gamma in _block_increasing_maps(T.lam[s], col):
            maps.append((permutation_sign(gamma), gamma))
        per_column.append(maps)

    out = TensorVector()

    def rec(s: int, sign: int, chosen: list[tuple[int, ...]]) -> None:
        if s == len(per_column):
            raw = []
            for g in range(d):
                factor: list[int] = []
                for c, gamma in enumerate(chosen):
                    f = T.f[c]
                    factor.extend(gamma[f[g]:f[g + 1]])
                raw.append(factor)
            key, wsign = canonical_tensor(raw)
            if wsign:
                out.add_term(key, sign * wsign)
            return
        for gsign, gamma in per_column[s]:
            chosen.append(gamma)
            rec(s + 1, sign * gsign, chosen)
            chosen.pop()

    rec(0, 1, [])
    return out


def build_rT(T: PieriTableau) -> tuple[tuple[int, ...], ...]:
    """Raw dual simple tensor: factor g wedges e*_{f[s][g-1]+1} .. e*_{f[s][g]} over columns s.

    Factors are returned unsorted, in the column order of the definition;
    ``pair`` applies the sorting sign.
    """
    raw = []
    for g in range(T.d):
        factor: list[int] = []
        for f in T.f:
            factor.extend(range(f[g] + 1, f[g + 1] + 1))
        raw.append(tuple(factor))
    return tuple(raw)


def pair(r: Sequence[Sequence[int]], v: TensorVector) -> int:
    """Evaluate the dual simple tensor ``r`` on ``v``.

    On sorted words the pairing is 1 when the index sets agree and 0
    otherwise; the sign from sorting ``r`` is applied.
    """
    shape = v.shape()
    if shape is not None and shape != (len(r[0]), len(r)):
        raise ValueError(f"pairing shape mismatch: dual {(len(r[0]), len(r))} vs vector {shape}")
    key, sign = canonical_tensor(r)
    if not sign:
        return 0
    return sign * v[key]


def pairing_matrix(tableaux: Sequence[PieriTableau]) -> list[list[int]]:
    """Entry [i][j] is r_{T_j}(w_{T_i}); lower unitriangular when tableaux are in order."""
    ws = [build_wT(T) for T in tableaux]
    rs = [build_rT(T) for T in tableaux]
    return [[pair(r, w) for r in rs] for w in ws]


def is_lower_unitriangular(m: Sequence[Sequence[int]]) -> bool:
    return all(
        m[i][j] == (1 if i == j else m[i][j] if j < i else 0)
        for i in range(len(m)) for j in range(len(m))
    )


def a_kd(k: int, d: int, lam: Sequence[int]) -> int:
    """Multiplicity of S_{lam*} in (Wedge^k)^{(x)d}, as a tableau count."""
    return len(enumerate_pieri_tableaux(k, d, lam))
