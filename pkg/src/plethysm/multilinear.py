"""Exact sparse vectors in tensor powers of exterior powers.

A wedge word is a strictly increasing tuple of basis indices (1-based),
standing for ``e_{a_1} ^ ... ^ e_{a_k}``. A simple tensor is a tuple of d
wedge words. Vectors map simple tensors to nonzero Python integers.
Symmetrized vectors use the sorted tuple of factors as key.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Mapping, Sequence

WedgeWord = tuple[int, ...]
SimpleTensor = tuple[WedgeWord, ...]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 when ``seq`` has repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(seq)):
        x = seq[i]
        j = i - 1
        while j >= 0 and seq[j] > x:
            seq[j + 1] = seq[j]
            j -= 1
            sign = -sign
        seq[j + 1] = x
    return sign


def canonical_wedge(raw: Sequence[int]) -> tuple[WedgeWord | None, int]:
    """Sort a raw wedge of basis indices.

    Returns ``(word, sign)``; for a repeated index the wedge vanishes and
    ``(None, 0)`` is returned.
    """
    sign = permutation_sign(raw)
    if sign == 0:
        return None, 0
    return tuple(sorted(raw)), sign


def canonical_tensor(raw: Sequence[Sequence[int]]) -> tuple[SimpleTensor | None, int]:
    """Canonicalize every factor of a raw simple tensor, multiplying the signs."""
    sign = 1
    words = []
    for factor in raw:
        word, s = canonical_wedge(factor)
        if s == 0:
            return None, 0
        sign *= s
        words.append(word)
    return tuple(words), sign


class _SparseVector:
    """Shared storage for integer-coefficient sparse vectors."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        self.terms: dict = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            self.add_term(key, coeff)

    def add_term(self, key, coeff: int) -> None:
        if not coeff:
            return
        new = self.terms.get(key, 0) + coeff
        if new:
            self.terms[key] = new
        else:
            del self.terms[key]

    def iadd(self, other: "_SparseVector", scale: int = 1) -> None:
        for key, coeff in other.terms.items():
            self.add_term(key, scale * coeff)

    def __add__(self, other):
        out = type(self)(self.terms)
        out.iadd(other)
        return out

    def __sub__(self, other):
        out = type(self)(self.terms)
        out.iadd(other, -1)
        return out

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar: int):
        return type(self)({k: scalar * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, key) -> int:
        return self.terms.get(key, 0)

    def items(self):
        return self.terms.items()

    def sorted_items(self) -> list:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self.sorted_items())!r})"


class TensorVector(_SparseVector):
    """Integer combination of simple tensors in (Wedge^k W)^{(x)d}."""

    __slots__ = ()

    @classmethod
    def from_raw(cls, raw_terms: Iterable[tuple[Sequence[Sequence[int]], int]]) -> "TensorVector":
        """Build from unsorted wedge factors, applying wedge-sorting signs."""
        out = cls()
        for raw, coeff in raw_terms:
            key, sign = canonical_tensor(raw)
            if sign:
                out.add_term(key, sign * coeff)
        return out

    def shape(self) -> tuple[int, int] | None:
        """``(k, d)`` of the stored tensors, or None for the zero vector."""
        for key in self.terms:
            return len(key[0]), len(key)
        return None

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "factors": [list(w) for w in key]}
            for key, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "TensorVector":
        return cls.from_raw((f["factors"], int(f["coeff"])) for f in data)


class SymVector(_SparseVector):
    """Integer combination of multisets of wedge words, an element of S^d(Wedge^k W)."""

    __slots__ = ()

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "multiset": [list(w) for w in key]}
            for key, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SymVector":
        out = cls()
        for entry in data:
            words = []
            sign = 1
            for f in entry["multiset"]:
                w, s = canonical_wedge(f)
                sign *= s
                words.append(w)
            if sign:
                out.add_term(tuple(sorted(words)), sign * int(entry["coeff"]))
        return out


def raising_op(j: int, v: TensorVector) -> TensorVector:
    """Apply X_j (e_{j+1} -> e_j, other basis vectors -> 0) as a derivation."""
    if j < 1:
        raise ValueError("raising operators are indexed from 1")
    out = TensorVector()
    for key, coeff in v.terms.items():
        for g, word in enumerate(key):
            if j + 1 not in word or j in word:
                continue
            new_word, sign = canonical_wedge(tuple(j if a == j + 1 else a for a in word))
            out.add_term(key[:g] + (new_word,) + key[g + 1:], sign * coeff)
    return out


def weight_of(t: Sequence[Sequence[int]], n: int | None = None) -> tuple[int, ...]:
    """Content of a simple tensor: entry i-1 counts occurrences of index i."""
    counts = Counter(a for word in t for a in word)
    top = max(counts, default=0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"index {top} exceeds ambient dimension {n}")
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


def strip_zeros(weight: Sequence[int]) -> tuple[int, ...]:
    weight = tuple(weight)
    while weight and weight[-1] == 0:
        weight = weight[:-1]
    return weight


def symmetrize(v: TensorVector) -> SymVector:
    """Project to the symmetric power by sorting tensor factors."""
    out = SymVector()
    for key, coeff in v.terms.items():
        out.add_term(tuple(sorted(key)), coeff)
    return out


def weight_basis(k: int, d: int, mu: Sequence[int], n: int) -> list[SimpleTensor]:
    """All simple tensors of canonical wedge words with content ``mu`` (padded to n)."""
    target = list(mu) + [0] * (n - len(mu))
    if len(target) > n:
        raise ValueError("weight longer than ambient dimension")
    out: list[SimpleTensor] = []
    remaining = target[:]

    def rec(prefix: list[WedgeWord]) -> None:
        left = d - len(prefix)
        if left == 0:
            if not any(remaining):
                out.append(tuple(prefix))
            return
        # every index still needed must fit in the factors that remain
        if any(r > left for r in remaining):
            return
        avail = [i + 1 for i, r in enumerate(remaining) if r > 0]
        forced = [i + 1 for i, r in enumerate(remaining) if r == left]
        for word in combinations(avail, k):
            if any(f not in word for f in forced):
                continue
            for a in word:
                remaining[a - 1] -= 1
            prefix.append(word)
            rec(prefix)
            prefix.pop()
            for a in word:
                remaining[a - 1] += 1

    rec([])
    return out


def _rank_exact(rows: list[dict[int, int]]) -> int:
    """Rank over Q of sparse integer rows, by fraction-free elimination.

    Rows are dicts column -> integer. Each pivot row is kept primitive
    (content divided out) so entries stay small on these 0/1 systems.
    """
    from math import gcd

    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: x for c, x in row.items() if x}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                g = 0
                for x in row.values():
                    g = gcd(g, x)
                if row[col] < 0:
                    g = -g
                pivots[col] = {c: x // g for c, x in row.items()}
                rank += 1
                break
            a = piv[col]
            b = row[col]
            # row <- a*row - b*piv
            new = {c: a * x for c, x in row.items()} if a != 1 else dict(row)
            for c, x in piv.items():
                val = new.get(c, 0) - b * x
                if val:
                    new[c] = val
                else:
                    new.pop(c, None)
            g = 0
            for x in new.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                new = {c: x // g for c, x in new.items()}
            row = new
    return rank


def hwv_space_dim(k: int, d: int, mu: Sequence[int], n: int) -> int:
    """Dimension of the highest weight vectors of weight ``mu`` in (Wedge^k C^n)^{(x)d}.

    Builds the weight-``mu`` basis, stacks the matrices of X_1..X_{n-1}
    restricted to it, and returns basis size minus exact rank.
    """
    if sum(mu) != k * d:
        raise ValueError(f"|mu| = {sum(mu)} but k*d = {k * d}")
    if len(strip_zeros(mu)) > n:
        raise ValueError("ambient dimension smaller than the weight length")
    basis = weight_basis(k, d, mu, n)
    if not basis:
        return 0
    # pivoting on the lexicographically largest tensor first, with equations
    # grouped by target, keeps fill-in low on these 0/1 systems
    index = {t: i for i, t in enumerate(reversed(basis))}
    # one equation per (j, target simple tensor): coefficient of the target in X_j v
    equations: dict[tuple[int, SimpleTensor], dict[int, int]] = {}
    for t, col in index.items():
        for j in range(1, n):
            image = raising_op(j, TensorVector({t: 1}))
            for target, coeff in image.terms.items():
                eq = equations.setdefault((j, target), {})
                eq[col] = eq.get(col, 0) + coeff
    rows = [equations[key] for key in sorted(equations, key=lambda e: (e[1], e[0]))]
    return len(basis) - _rank_exact(rows)
