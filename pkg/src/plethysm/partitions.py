"""Integer partitions, conjugation, dominance, and Schur module dimensions.

Partitions are plain tuples of positive integers in weakly decreasing
order, with no trailing zeros. The empty tuple is the zero partition.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and strip trailing zeros.

    Raises ValueError for negative parts or increasing sequences.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse a comma separated list such as ``"6,6,6,2"``; ``""`` is the zero partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"not a comma separated integer list: {text!r}") from None
    return make_partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p > 0)


def conjugate(lam: Sequence[int]) -> Partition:
    """Transpose the Young diagram: ``conj[i] = #{j : lam[j] > i}``."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def is_even(lam: Sequence[int]) -> bool:
    return all(p % 2 == 0 for p in lam)


def dominance_leq(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """True iff ``mu`` is dominated by ``nu`` (all partial sums of mu are <= those of nu)."""
    if sum(mu) != sum(nu):
        raise ValueError(f"dominance needs equal sizes: |{tuple(mu)}| != |{tuple(nu)}|")
    sm = sn = 0
    for i in range(max(len(mu), len(nu))):
        sm += mu[i] if i < len(mu) else 0
        sn += nu[i] if i < len(nu) else 0
        if sm > sn:
            return False
    return True


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining: int, cap: int, slots: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_length)


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def schur_dimension(lam: Sequence[int], n: int) -> int:
    """Dimension of the Schur module S_lam C^n via the hook-content formula.

    Numerator and denominator are accumulated as exact integers and divided
    once at the end; a box of content -n zeroes the product when len(lam) > n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = den = 1
    hooks = hook_lengths(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= hooks[i][j]
    q, r = divmod(num, den)
    assert r == 0, "hook-content product must be integral"
    return q


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Generate the semistandard tableaux of ``shape`` with the given content.

    Rows weakly increase, columns strictly increase; value ``i + 1`` occurs
    ``content[i]`` times. Tableaux are returned as tuples of rows. Values are
    placed one at a time as horizontal strips.
    """
    shape = tuple(shape)
    if sum(shape) != sum(content):
        return
    rows: list[list[int]] = [[] for _ in shape]

    def strips(current: list[int], count: int, i: int) -> Iterator[list[int]]:
        # distribute `count` new boxes over rows i.., keeping a horizontal strip
        if count == 0:
            yield [0] * (len(current) - i)
            return
        if i == len(current):
            return
        upper_cap = shape[i] - current[i]
        if i > 0:
            upper_cap = min(upper_cap, current[i - 1] - current[i])
        for take in range(min(upper_cap, count), -1, -1):
            for rest in strips(current, count - take, i + 1):
                yield [take] + rest

    def rec(value: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if value > len(content):
            if all(len(r) == s for r, s in zip(rows, shape)):
                yield tuple(tuple(r) for r in rows)
            return
        current = [len(r) for r in rows]
        for strip in strips(current, content[value - 1], 0):
            for r, take in zip(rows, strip):
                r.extend([value] * take)
            yield from rec(value + 1)
            for r, take in zip(rows, strip):
                if take:
                    del r[-take:]

    yield from rec(1)


@lru_cache(maxsize=None)
def _count_ssyt(shape: Partition, content: tuple[int, ...]) -> int:
    # peel off the largest value as a horizontal strip
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    rest = content[:-1]
    total = 0
    padded = shape + (0,)

    def rec(i: int, remaining: int, inner: list[int]) -> None:
        nonlocal total
        if i == len(shape):
            if remaining == 0:
                total += _count_ssyt(make_partition(inner), rest)
            return
        lo = padded[i + 1]
        for new in range(shape[i], lo - 1, -1):
            take = shape[i] - new
            if take > remaining:
                break
            inner.append(new)
            rec(i + 1, remaining - take, inner)
            inner.pop()

    rec(0, last, [])
    return total


def count_semistandard(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` and ``content`` (memoized strip removal)."""
    shape = make_partition(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return 0
    return _count_ssyt(shape, content)
