"""Permutations of {1..n} in one-line notation, reduced words, Rothe diagrams.

The window (one-line notation) is the single source of truth: a permutation
``mu`` maps position ``i`` to the value ``mu.window[i-1]``.  Right
multiplication by the simple transposition ``s_j`` swaps window positions
``j`` and ``j+1``; left multiplication swaps the values ``j`` and ``j+1``.

>>> mu = Permutation.from_string("35142")
>>> mu.length()
6
>>> str(mu * Permutation.simple(5, 2))
'31542'
>>> Permutation.from_string("321").reduced_word()
(1, 2, 1)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import Iterator

from .errors import IndexOutOfRange, RankMismatch, RankOutOfRange

__all__ = [
    "Permutation",
    "RotheBox",
    "RotheDiagram",
    "all_permutations",
    "all_reduced_words",
    "max_rank",
]

_DEFAULT_MAX_RANK = 6


def max_rank() -> int:
    """Desk-scale rank guard; raise it with the YB_HECKE_MAX_N environment variable."""
    raw = os.environ.get("YB_HECKE_MAX_N")
    if raw is None:
        return _DEFAULT_MAX_RANK
    try:
        return max(int(raw), _DEFAULT_MAX_RANK)
    except ValueError:
        return _DEFAULT_MAX_RANK


class Permutation:
    """An element of the symmetric group S_n, indexed from 1."""

    __slots__ = ("window",)

    def __init__(self, window):
        w = tuple(int(v) for v in window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation window: {w}")
        self.window = w

    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, n: int, j: int) -> "Permutation":
        if not 1 <= j <= n - 1:
            raise IndexOutOfRange(f"simple reflection s_{j} undefined in S_{n}")
        w = list(range(1, n + 1))
        w[j - 1], w[j] = w[j], w[j - 1]
        return cls(w)

    @classmethod
    def from_string(cls, s: str) -> "Permutation":
        """Parse a window serialized as a digit string, e.g. "35142" (n <= 9)."""
        if "," in s:
            return cls(int(t) for t in s.split(","))
        return cls(int(ch) for ch in s.strip())

    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.window)
        return ",".join(str(v) for v in self.window)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self∘other)(i) = self(other(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise RankMismatch(f"cannot compose S_{self.n} with S_{other.n}")
        return Permutation(self.window[v - 1] for v in other.window)

    def inverse(self) -> "Permutation":
        w = [0] * self.n
        for i, v in enumerate(self.window):
            w[v - 1] = i + 1
        return Permutation(w)

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.window))

    def length(self) -> int:
        """Number of inversions #{(i, j) : i < j, mu(i) > mu(j)}."""
        w = self.window
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def descents(self) -> tuple[int, ...]:
        """Positions j with mu(j) > mu(j+1), i.e. length(mu*s_j) < length(mu)."""
        w = self.window
        return tuple(j for j in range(1, self.n) if w[j - 1] > w[j])

    def times_simple(self, j: int) -> "Permutation":
        """Right multiplication by s_j: swap window positions j, j+1."""
        if not 1 <= j <= self.n - 1:
            raise IndexOutOfRange(f"generator index {j} outside 1..{self.n - 1}")
        w = list(self.window)
        w[j - 1], w[j] = w[j], w[j - 1]
        return Permutation(w)

    def simple_times(self, j: int) -> "Permutation":
        """Left multiplication by s_j: swap the values j, j+1 in the window."""
        if not 1 <= j <= self.n - 1:
            raise IndexOutOfRange(f"generator index {j} outside 1..{self.n - 1}")
        w = list(self.window)
        a, b = w.index(j), w.index(j + 1)
        w[a], w[b] = w[b], w[a]
        return Permutation(w)

    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word: the product s_{i1}...s_{ir} equals ``self``.

        Convention: repeatedly move the largest misplaced value to its slot
        with adjacent transpositions; the recorded sorting word, reversed,
        is the canonical word.  Any deterministic choice would do, since all
        downstream constructions are reduced-word independent.
        """
        w = list(self.window)
        n = len(w)
        sorting: list[int] = []
        for value in range(n, 0, -1):
            pos = w.index(value) + 1
            for j in range(pos, value):
                w[j - 1], w[j] = w[j], w[j - 1]
                sorting.append(j)
        return tuple(reversed(sorting))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length(), self.window)


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n sorted by (length, window); guarded by :func:`max_rank`."""
    if not 1 <= n <= max_rank():
        raise RankOutOfRange(f"rank {n} outside 1..{max_rank()}")
    perms = [Permutation(w) for w in _itperms(range(1, n + 1))]
    perms.sort(key=Permutation.sort_key)
    return perms


def all_reduced_words(mu: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word of ``mu`` (exponential; meant for n <= 4 checks)."""
    if mu.is_identity:
        return [()]
    out: list[tuple[int, ...]] = []
    for j in mu.descents():
        for w in all_reduced_words(mu.times_simple(j)):
            out.append(w + (j,))
    return out


@dataclass(frozen=True)
class RotheBox:
    """One box of a Rothe diagram.

    The box sits at Cartesian coordinates (column i, height mu(j)) where
    (i, j) is the inversion producing it; ``generator`` is the index k of the
    elementary factor the box carries: inside one column the indices grow by
    1 upwards, starting from the column index.
    """

    row: int
    i: int
    j: int
    generator: int


@dataclass(frozen=True)
class RotheDiagram:
    perm: Permutation
    boxes: tuple[RotheBox, ...]

    def __len__(self) -> int:
        return len(self.boxes)


def rothe_diagram(mu: Permutation) -> RotheDiagram:
    """Rothe diagram {(i, mu(j)) : i < j, mu(i) > mu(j)} in reading order.

    Reading order is left to right within a row, proceeding from the top row
    (largest second coordinate) down; this is the order in which the boxes'
    elementary factors multiply out to the Yang-Baxter element.
    """
    w = mu.window
    n = mu.n
    raw: list[tuple[int, int, int]] = []  # (i, row=mu(j), j)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if w[i - 1] > w[j - 1]:
                raw.append((i, w[j - 1], j))
    by_col: dict[int, list[tuple[int, int, int]]] = {}
    for box in raw:
        by_col.setdefault(box[0], []).append(box)
    boxes: list[RotheBox] = []
    for col, items in by_col.items():
        items.sort(key=lambda b: b[1])  # by height, bottom first
        for below, (i, row, j) in enumerate(items):
            boxes.append(RotheBox(row=row, i=i, j=j, generator=i + below))
    boxes.sort(key=lambda b: (-b.row, b.i))
    return RotheDiagram(perm=mu, boxes=tuple(boxes))
