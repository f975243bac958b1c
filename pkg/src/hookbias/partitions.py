"""Restricted partition classes and hook-length statistics.

Everything here is brute force on purpose: these routines are the oracle the
generating functions and constants are checked against.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A non-increasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def conjugate(self) -> "Partition":
        return conjugate(self)


class PartitionClass(enum.Enum):
    SELF_CONJUGATE = "sc"
    DISTINCT_ODD = "do"
    ALL = "all"


@dataclass(frozen=True)
class CellStats:
    """Arm/leg data of one diagram cell (row and col are 1-based)."""

    row: int
    col: int
    arm: int
    leg: int
    coarm: int
    coleg: int
    hook: int


def conjugate(lam: Partition | tuple[int, ...]) -> Partition:
    parts = tuple(lam)
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def _all_partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    # lexicographically decreasing
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _all_partitions(n - first, first):
            yield (first,) + rest


def _distinct_odd(n: int, below: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(n, below - 1)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        for rest in _distinct_odd(n - first, first):
            yield (first,) + rest


def from_principal_hooks(hooks: tuple[int, ...]) -> Partition:
    """Self-conjugate partition whose diagonal hook lengths are ``hooks``.

    ``hooks`` must be distinct odd numbers in decreasing order; this is the
    classical bijection DO(n) -> SC(n).
    """
    k = len(hooks)
    rows = [i + (d - 1) // 2 for i, d in enumerate(hooks, start=1)]
    if k:
        # below the Durfee square rows mirror the columns right of it
        rows += [sum(1 for r in rows[:k] if r >= i) for i in range(k + 1, rows[0] + 1)]
        rows = [r for r in rows if r > 0]
    return Partition(tuple(rows))


def principal_hooks(lam: Partition) -> tuple[int, ...]:
    conj = conjugate(lam)
    return tuple(
        (lam[i] - i - 1) + (conj[i] - i - 1) + 1
        for i in range(len(lam))
        if lam[i] > i
    )


def enumerate_class(cls: PartitionClass | str, n: int, method: str = "bijection") -> list[Partition]:
    """All partitions of ``n`` in ``cls``, in lexicographically decreasing order.

    For self-conjugate partitions ``method`` is ``"bijection"`` (built from
    distinct odd parts) or ``"filter"`` (conjugate-fixed points among all
    partitions of ``n``; slow, used as a cross-check).
    """
    cls = PartitionClass(cls)
    if n < 0:
        raise ValueError("n must be non-negative")
    if cls is PartitionClass.ALL:
        return [Partition(p) for p in _all_partitions(n, n)]
    if cls is PartitionClass.DISTINCT_ODD:
        return [Partition(p) for p in _distinct_odd(n, n + 2)]
    if method == "filter":
        return [Partition(p) for p in _all_partitions(n, n) if conjugate(p).parts == p]
    if method != "bijection":
        raise ValueError(f"unknown method {method!r}")
    out = [from_principal_hooks(h) for h in _distinct_odd(n, n + 2)]
    return sorted(out, key=lambda p: p.parts, reverse=True)


def cell_stats(lam: Partition | tuple[int, ...]) -> list[CellStats]:
    parts = tuple(lam)
    conj = conjugate(parts).parts
    cells = []
    for i, row_len in enumerate(parts, start=1):
        for j in range(1, row_len + 1):
            arm = row_len - j
            leg = conj[j - 1] - i
            cells.append(CellStats(i, j, arm, leg, j - 1, i - 1, arm + leg + 1))
    return cells


def hook_tally(lam: Partition | tuple[int, ...]) -> Counter:
    """Map hook length -> number of cells with that hook."""
    return Counter(c.hook for c in cell_stats(lam))


def n_t(lam: Partition | tuple[int, ...], t: int) -> int:
    if t < 1:
        raise ValueError("t must be positive")
    return hook_tally(lam)[t]


@lru_cache(maxsize=None)
def class_hook_totals(cls: PartitionClass, n: int) -> Counter:
    """Total hook tally over every partition of ``n`` in ``cls``."""
    total: Counter = Counter()
    for lam in enumerate_class(cls, n):
        total.update(hook_tally(lam))
    return total


def a_star_brute(t: int, n: int) -> int:
    """Number of t-hooks summed over self-conjugate partitions of n."""
    if t < 1:
        raise ValueError("t must be positive")
    return class_hook_totals(PartitionClass.SELF_CONJUGATE, n)[t]


def b_star_brute(t: int, n: int) -> int:
    """Number of t-hooks summed over distinct-odd-part partitions of n."""
    if t < 1:
        raise ValueError("t must be positive")
    return class_hook_totals(PartitionClass.DISTINCT_ODD, n)[t]
