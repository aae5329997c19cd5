"""Brute-force decomposition of S^d(Wedge^k C^n) and S^d(S^k C^n) into Schur modules.

The character is read off weight by weight: for each dominant weight the
number of basis monomials of exactly that content is counted, then the
multiplicities are peeled off with Kostka numbers, largest weight first.
The ordered tensor powers (Wedge^k)^{(x)d} and (S^k)^{(x)d} are available
too, as ``wedge_tensor`` and ``sym_tensor``, and ``wedge_alt`` is the outer
exterior power Wedge^d(Wedge^k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Sequence

from .partitions import Partition, conjugate, count_semistandard, is_even, make_partition, partitions, schur_dimension

FUNCTORS = ("wedge", "sym", "wedge_tensor", "sym_tensor", "wedge_alt")
DEFAULT_MAX_KD = 16


class OracleConsistencyError(RuntimeError):
    """The triangular solve produced a negative multiplicity."""


def _check_args(k: int, d: int, n: int, functor: str) -> None:
    if functor not in FUNCTORS:
        raise ValueError(f"unknown functor {functor!r}; expected one of {FUNCTORS}")
    if k < 1 or d < 1 or n < 1:
        raise ValueError("k, d and n must be positive")
    if functor.startswith("wedge") and k > n:
        raise ValueError(f"Wedge^{k} C^{n} is zero: k must not exceed n")


@lru_cache(maxsize=None)
def _factors(k: int, n: int, wedge: bool) -> tuple[tuple[int, ...], ...]:
    # each basis element of Wedge^k or S^k as a content vector of length n
    gen = combinations(range(n), k) if wedge else combinations_with_replacement(range(n), k)
    out = []
    for idx in gen:
        v = [0] * n
        for i in idx:
            v[i] += 1
        out.append(tuple(v))
    return tuple(out)


def count_weight(k: int, d: int, n: int, functor: str, weight: Sequence[int]) -> int:
    """Number of basis monomials of the given content (padded to n)."""
    _check_args(k, d, n, functor)
    weight = tuple(weight) + (0,) * (n - len(weight))
    if len(weight) != n or sum(weight) != k * d:
        return 0
    factors = _factors(k, n, functor.startswith("wedge"))
    ordered = functor.endswith("tensor")
    # outer exterior power: factors strictly increasing
    step = 1 if functor == "wedge_alt" else 0

    @lru_cache(maxsize=None)
    def rec(rem: tuple[int, ...], start: int, left: int) -> int:
        if left == 0:
            return 1
        total = 0
        for i in range(0 if ordered else start, len(factors)):
            f = factors[i]
            if all(a <= b for a, b in zip(f, rem)):
                total += rec(tuple(b - a for a, b in zip(f, rem)), i + step, left - 1)
        return total

    return rec(weight, 0, d)


def dominant_weights(k: int, d: int, n: int, functor: str) -> list[Partition]:
    """Partitions that can occur as weights, in decreasing lexicographic order."""
    _check_args(k, d, n, functor)
    max_part = d if functor.startswith("wedge") else k * d
    return list(partitions(k * d, max_part=max_part, max_length=n))


def weight_multiplicities(k: int, d: int, n: int, functor: str) -> dict[Partition, int]:
    """Dominant weight -> multiplicity of that weight (zero entries omitted)."""
    out = {}
    for mu in dominant_weights(k, d, n, functor):
        c = count_weight(k, d, n, functor, mu)
        if c:
            out[mu] = c
    return out


def orbit_size(mu: Sequence[int], n: int) -> int:
    """Number of distinct rearrangements of ``mu`` padded with zeros to length n."""
    padded = list(mu) + [0] * (n - len(mu))
    out = 1
    placed = 0
    for value in set(padded):
        c = padded.count(value)
        out *= comb(placed + c, c)
        placed += c
    return out


def kostka(mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``mu`` and content ``nu``."""
    if sum(mu) != sum(nu):
        raise ValueError(f"Kostka number needs |mu| = |nu|, got {sum(mu)} and {sum(nu)}")
    return count_semistandard(mu, nu)


def ambient_dimension(k: int, d: int, n: int, functor: str) -> int:
    base = comb(n, k) if functor.startswith("wedge") else comb(n + k - 1, k)
    if functor.endswith("tensor"):
        return base ** d
    if functor == "wedge_alt":
        return comb(base, d)
    return comb(base + d - 1, d)


@dataclass
class DecompositionTable:
    functor: str
    k: int
    d: int
    n: int
    components: dict[Partition, int] = field(default_factory=dict)

    def multiplicity(self, mu: Sequence[int]) -> int:
        return self.components.get(make_partition(mu), 0)

    def dimension(self) -> int:
        return sum(m * schur_dimension(mu, self.n) for mu, m in self.components.items())

    def sorted_components(self) -> list[tuple[Partition, int]]:
        # decreasing lex order refines dominance
        return sorted(self.components.items(), reverse=True)

    def to_json(self) -> dict:
        return {
            "functor": self.functor,
            "k": self.k,
            "d": self.d,
            "n": self.n,
            "components": [
                {"partition": list(mu), "multiplicity": m} for mu, m in self.sorted_components()
            ],
        }


def decompose(k: int, d: int, n: int, functor: str = "wedge", force: bool = False) -> DecompositionTable:
    """Irreducible decomposition by a Kostka triangular solve over dominant weights."""
    _check_args(k, d, n, functor)
    if k * d > DEFAULT_MAX_KD and not force:
        raise ValueError(f"k*d = {k * d} exceeds the desk-scale bound {DEFAULT_MAX_KD}; pass force=True")
    weights = weight_multiplicities(k, d, n, functor)
    table = DecompositionTable(functor, k, d, n)
    found: list[tuple[Partition, int]] = []
    for mu in sorted(weights, reverse=True):
        m = weights[mu] - sum(mult * kostka(nu, mu) for nu, mult in found)
        if m < 0:
            raise OracleConsistencyError(f"negative multiplicity {m} for {mu} in {functor} k={k} d={d} n={n}")
        if m:
            found.append((mu, m))
            table.components[mu] = m
    return table


def dual_functor(k: int) -> str:
    """Functor matching S^d(S^k) under conjugation: S^d(Wedge^k) for even k, Wedge^d(Wedge^k) for odd k."""
    return "wedge" if k % 2 == 0 else "wedge_alt"


def duality_check(k: int, d: int, n: int) -> bool:
    """S^d(S^k) and its dual functor match under conjugation (needs n >= k*d)."""
    if n < k * d:
        raise ValueError(f"duality needs n >= k*d = {k * d}, got n = {n}")
    sym = decompose(k, d, n, "sym")
    wedge = decompose(k, d, n, dual_functor(k))
    conj = {conjugate(mu): m for mu, m in sym.components.items()}
    return conj == wedge.components


@dataclass
class ScanEntry:
    lam: Partition
    k: int
    d: int
    multiplicity: int
    witness_ok: bool
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.multiplicity >= 1 and self.witness_ok and self.error is None

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "k": self.k,
            "d": self.d,
            "multiplicity": self.multiplicity,
            "witness_ok": self.witness_ok,
            "error": self.error,
            "ok": self.ok,
        }


def even_partitions(total: int, max_length: int) -> list[Partition]:
    return [lam for lam in partitions(total, max_length=max_length) if is_even(lam)]


def weintraub_positivity_scan(kmax: int, dmax: int, extra: Sequence[tuple[int, int]] = ()) -> list[ScanEntry]:
    """Check every even lam of weight d*k with at most d parts, k even.

    The oracle supplies the multiplicity of lam* in S^d(Wedge^k C^n) with
    n = k*d, and the filling algorithm supplies an explicit witness.
    ``extra`` adds (k, d) pairs outside the box.
    """
    from .weintraub import certify

    pairs = [(k, d) for k in range(2, kmax + 1, 2) for d in range(1, dmax + 1)]
    pairs += [p for p in extra if p not in pairs]
    out = []
    for k, d in pairs:
        table = decompose(k, d, k * d, "wedge", force=True)
        for lam in even_partitions(k * d, d):
            mult = table.multiplicity(conjugate(lam))
            try:
                witness_ok = certify(lam, k).ok
                error = None
            except AssertionError as exc:
                witness_ok, error = False, str(exc)
            out.append(ScanEntry(lam, k, d, mult, witness_ok, error))
    return out
