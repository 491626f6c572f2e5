"""Finite operation tables: magmas, semigroups, groups, and subsets of them.

Elements are dense indices 0..n-1 with a separate label tuple.  Tables are
row-major nested tuples, row = left operand, so ``table[x][y]`` is x*y.
Subsets of a carrier are bitmasks.  Everything is immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import NotAssociativeError

Table = tuple[tuple[int, ...], ...]


def freeze_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class SubsetRef:
    """A subset of a carrier of known size, stored as a bitmask."""

    mask: int
    size: int

    def __post_init__(self):
        if self.size < 0 or self.mask < 0 or self.mask >> self.size:
            raise ValueError(f"mask {self.mask:#x} does not fit a carrier of size {self.size}")

    @classmethod
    def empty(cls, size: int) -> "SubsetRef":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "SubsetRef":
        return cls((1 << size) - 1, size)

    @classmethod
    def of(cls, indices: Iterable[int], size: int) -> "SubsetRef":
        mask = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f"index {i} outside carrier of size {size}")
            mask |= 1 << i
        return cls(mask, size)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "SubsetRef") -> "SubsetRef":
        return SubsetRef(self.mask | other.mask, self.size)

    def __and__(self, other: "SubsetRef") -> "SubsetRef":
        return SubsetRef(self.mask & other.mask, self.size)

    def __le__(self, other: "SubsetRef") -> bool:
        return self.mask & ~other.mask == 0

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def labels(self, names: Sequence[str]) -> tuple[str, ...]:
        return tuple(names[i] for i in self)


@dataclass(frozen=True)
class FiniteMagma:
    """A carrier with one binary operation given by a full table."""

    names: tuple[str, ...]
    table: Table

    def __post_init__(self):
        n = len(self.names)
        if n < 1:
            raise ValueError("carrier must have at least one element")
        if len(set(self.names)) != n:
            raise ValueError("element labels must be distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"table must be {n}x{n}")
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} outside 0..{n - 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "FiniteMagma":
        table = freeze_table(rows)
        return cls(tuple(names) if names is not None else default_names(len(table)), table)

    @property
    def n(self) -> int:
        return len(self.names)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.table, dtype=np.intp)
        a.setflags(write=False)
        return a

    def elements(self) -> range:
        return range(self.n)

    def full_subset(self) -> SubsetRef:
        return SubsetRef.full(self.n)

    def subset(self, indices: Iterable[int]) -> SubsetRef:
        return SubsetRef.of(indices, self.n)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite magma whose associativity was verified at construction."""

    magma: FiniteMagma

    def __post_init__(self):
        ok, witness = check_associative(self.magma)
        if not ok:
            raise NotAssociativeError(witness)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "FiniteSemigroup":
        return cls(FiniteMagma.from_rows(rows, names))

    @property
    def names(self) -> tuple[str, ...]:
        return self.magma.names

    @property
    def table(self) -> Table:
        return self.magma.table

    @property
    def n(self) -> int:
        return self.magma.n

    def op(self, x: int, y: int) -> int:
        return self.magma.table[x][y]

    def elements(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite semigroup with a verified two-sided identity and inverses."""

    semigroup: FiniteSemigroup
    identity: int = field(default=-1)
    inverse: tuple[int, ...] = field(default=())

    def __post_init__(self):
        table = self.semigroup.table
        n = self.semigroup.n
        if self.identity == -1:
            object.__setattr__(self, "identity", _find_identity(table, n))
        e = self.identity
        if not 0 <= e < n or any(table[e][x] != x or table[x][e] != x for x in range(n)):
            raise ValueError(f"element {e} is not a two-sided identity")
        if not self.inverse:
            object.__setattr__(self, "inverse", _find_inverses(table, n, e))
        inv = self.inverse
        if len(inv) != n or any(table[x][inv[x]] != e or table[inv[x]][x] != e for x in range(n)):
            raise ValueError("inverse array does not invert every element")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "FiniteGroup":
        return cls(FiniteSemigroup.from_rows(rows, names))

    @property
    def names(self) -> tuple[str, ...]:
        return self.semigroup.names

    @property
    def table(self) -> Table:
        return self.semigroup.table

    @property
    def n(self) -> int:
        return self.semigroup.n

    def op(self, x: int, y: int) -> int:
        return self.semigroup.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def elements(self) -> range:
        return range(self.n)


def _find_identity(table: Table, n: int) -> int:
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise ValueError("no two-sided identity element")


def _find_inverses(table: Table, n: int, e: int) -> tuple[int, ...]:
    inv = []
    for x in range(n):
        for y in range(n):
            if table[x][y] == e and table[y][x] == e:
                inv.append(y)
                break
        else:
            raise ValueError(f"element {x} has no two-sided inverse")
    return tuple(inv)


def check_associative(m: FiniteMagma) -> tuple[bool, tuple[int, int, int] | None]:
    """Test (xy)z == x(yz) for all triples.

    Returns (True, None) or (False, first violating (x, y, z) in row-major
    index order).
    """
    t = m.array
    left = t[t]          # left[x, y, z] = t[t[x, y], z]
    right = t[:, t]      # right[x, y, z] = t[x, t[y, z]]
    eq = left == right
    if eq.all():
        return True, None
    x, y, z = np.argwhere(~eq)[0]
    return False, (int(x), int(y), int(z))


def table_is_associative(table: Sequence[Sequence[int]]) -> tuple[bool, tuple[int, int, int] | None]:
    """check_associative for a raw table, without building a magma."""
    n = len(table)
    for x, y, z in product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return False, (x, y, z)
    return True, None


def subset_product(m: FiniteMagma | FiniteSemigroup, a: SubsetRef, b: SubsetRef) -> SubsetRef:
    """The element-wise product set {x*y : x in a, y in b}."""
    if a.size != m.n or b.size != m.n:
        raise ValueError("subset size does not match carrier")
    table = m.table
    mask = 0
    for x in a:
        row = table[x]
        for y in b:
            mask |= 1 << row[y]
    return SubsetRef(mask, m.n)


def is_surjective(m: FiniteMagma | FiniteSemigroup) -> bool:
    """True iff the product set of the whole carrier with itself is the carrier."""
    full = SubsetRef.full(m.n)
    return subset_product(m, full, full) == full
