"""Builders for the standing example structures used throughout the package.

Finite builders return fully verified objects; the rational builders return
rule-based sampled structures since their carriers are infinite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .joined import JoinedStructure
from .rationals import RationalJoined, RationalRuleMagma, wrapped_addition
from .tables import FiniteGroup, FiniteMagma, FiniteSemigroup

KLEIN_NAMES = ("e", "a", "eta", "alpha")

# Klein four-group on (e, a, eta, alpha): every element is an involution and
# the product of two distinct non-identity elements is the third.
_KLEIN_TABLE = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

# Folding map e,eta -> e and a,alpha -> a.
KLEIN_FOLD = (0, 1, 0, 1)


def cyclic(n: int) -> FiniteGroup:
    """The cyclic group of least non-negative residues with addition mod n."""
    if n < 1:
        raise ValueError("order must be at least 1")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup.from_rows(rows)


def klein_group() -> FiniteGroup:
    return FiniteGroup.from_rows(_KLEIN_TABLE, KLEIN_NAMES)


def klein_grouplike() -> FiniteSemigroup:
    """The Klein table folded through KLEIN_FOLD: x (.) y = fold(x * y)."""
    rows = [[KLEIN_FOLD[v] for v in row] for row in _KLEIN_TABLE]
    return FiniteSemigroup.from_rows(rows, KLEIN_NAMES)


def klein_joined() -> JoinedStructure:
    return JoinedStructure(KLEIN_NAMES, _KLEIN_TABLE, klein_grouplike().table, 0)


def min_semigroup(n: int) -> FiniteSemigroup:
    """{0..n-1} under minimum."""
    if n < 1:
        raise ValueError("order must be at least 1")
    rows = [[min(i, j) for j in range(n)] for i in range(n)]
    return FiniteSemigroup.from_rows(rows)


def omega_grouplike(n: int) -> FiniteSemigroup:
    """{0..n-1} with 0 absorbing and x*y = x away from 0."""
    if n < 1:
        raise ValueError("order must be at least 1")
    rows = [[0 if i == 0 or j == 0 else i for j in range(n)] for i in range(n)]
    return FiniteSemigroup.from_rows(rows)


def zn_min_joined(n: int) -> JoinedStructure:
    """Residues mod n joined with minimum, joiner 0."""
    g = cyclic(n)
    rows = tuple(tuple(min(i, j) for j in range(n)) for i in range(n))
    return JoinedStructure(g.names, g.table, rows, 0)


def pick_left_joined(g: FiniteGroup) -> JoinedStructure:
    """Second operation x (.) y = x on top of a group; a one-sided example."""
    rows = tuple(tuple(i for _ in range(g.n)) for i in range(g.n))
    return JoinedStructure(g.names, g.table, rows, g.identity)


def pick_right_joined(g: FiniteGroup) -> JoinedStructure:
    """Second operation x (.) y = y on top of a group; the mirror example."""
    rows = tuple(tuple(j for j in range(g.n)) for _ in range(g.n))
    return JoinedStructure(g.names, g.table, rows, g.identity)


def b_addition(b: Fraction | int | str) -> RationalRuleMagma:
    """Rationals under addition wrapped into the residue window of b."""
    b = Fraction(b)
    return RationalRuleMagma(wrapped_addition(b), f"wrapped addition mod {b}")


def b_joined(b: Fraction | int | str, seed: int = 0, budget: int = 10_000) -> RationalJoined:
    """Plain addition joined with wrapped addition, joiner 0."""
    b = Fraction(b)
    return RationalJoined(
        dot=lambda x, y: x + y,
        odot=wrapped_addition(b),
        e=Fraction(0),
        description=f"rationals with plain and mod-{b} wrapped addition",
        seed=seed,
        budget=budget,
    )


def fractional_mult_sample(sample: Sequence[Fraction | int | str]) -> RationalRuleMagma:
    """Multiplication on [0, 1) pinned to a finite sample of interest."""
    vals = tuple(Fraction(v) for v in sample)
    for v in vals:
        if not 0 <= v < 1:
            raise ValueError(f"sample value {v} outside [0, 1)")
    return RationalRuleMagma(lambda x, y: x * y, "multiplication on [0,1)", sample=vals)


BUILDERS = {
    "cyclic": cyclic,
    "klein_group": klein_group,
    "klein_grouplike": klein_grouplike,
    "klein_joined": klein_joined,
    "min_semigroup": min_semigroup,
    "omega_grouplike": omega_grouplike,
    "zn_min_joined": zn_min_joined,
    "b_addition": b_addition,
    "b_joined": b_joined,
    "fractional_mult_sample": fractional_mult_sample,
}


def gallery(name: str, *args, **kwargs):
    """Build a named structure: gallery('cyclic', 5), gallery('b_addition', '3/2')."""
    try:
        builder = BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown builder {name!r}; known: {sorted(BUILDERS)}") from None
    return builder(*args, **kwargs)


def magma_of(obj) -> FiniteMagma:
    """The underlying one-operation magma of any finite gallery object."""
    if isinstance(obj, FiniteMagma):
        return obj
    if isinstance(obj, FiniteSemigroup):
        return obj.magma
    if isinstance(obj, FiniteGroup):
        return obj.semigroup.magma
    raise TypeError(f"no underlying finite magma for {type(obj).__name__}")
