"""Structural classification of finite semigroups.

Computes idempotents, the center, ideals and the kernel, then decides the
ladder: homogroup (kernel is a group), grouplike (unique central idempotent
with every element solvable to it), unipotent grouplike, and the
square-group property (the product set of the carrier with itself is a
group).  The square-group property is computed by two independent routes
and the two answers are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvariantViolation
from .tables import FiniteGroup, FiniteSemigroup, SubsetRef, subset_product


def idempotents(s: FiniteSemigroup) -> SubsetRef:
    return SubsetRef.of((x for x in s.elements() if s.op(x, x) == x), s.n)


def center(s: FiniteSemigroup) -> SubsetRef:
    t = s.table
    rng = range(s.n)
    return SubsetRef.of(
        (z for z in rng if all(t[z][x] == t[x][z] for x in rng)), s.n
    )


def central_idempotents(s: FiniteSemigroup) -> SubsetRef:
    return idempotents(s) & center(s)


def principal_ideal(s: FiniteSemigroup, x: int) -> SubsetRef:
    """Two-sided principal ideal of x, with a formal identity adjoined on
    both sides only inside the computation: {x} | Sx | xS | SxS."""
    t = s.table
    rng = range(s.n)
    mask = 1 << x
    for a in rng:
        mask |= 1 << t[a][x]
        mask |= 1 << t[x][a]
        for b in rng:
            mask |= 1 << t[t[a][x]][b]
    return SubsetRef(mask, s.n)


def kernel(s: FiniteSemigroup) -> SubsetRef:
    """The minimal two-sided ideal: intersection of all principal ideals."""
    out = SubsetRef.full(s.n)
    for x in s.elements():
        out = out & principal_ideal(s, x)
    return out


def zeroid_elements(s: FiniteSemigroup) -> SubsetRef:
    """Elements divisible on the left and the right by every element.

    Independent of kernel(); for homogroups the two sets coincide.
    """
    t = s.table
    rng = range(s.n)

    def is_zeroid(x: int) -> bool:
        for a in rng:
            if all(t[a][u] != x for u in rng):
                return False
            if all(t[v][a] != x for v in rng):
                return False
        return True

    return SubsetRef.of((x for x in rng if is_zeroid(x)), s.n)


def is_ideal(s: FiniteSemigroup, a: SubsetRef, side: str = "two-sided") -> bool:
    """Standard ideal test for a nonempty subset; side in left|right|two-sided.

    Left ideal means S*A <= A (products with A on the right stay in A).
    """
    if len(a) == 0:
        raise ValueError("ideal test requires a nonempty subset")
    full = s.magma.full_subset()
    if side == "left":
        return subset_product(s, full, a) <= a
    if side == "right":
        return subset_product(s, a, full) <= a
    if side == "two-sided":
        return subset_product(s, full, a) <= a and subset_product(s, a, full) <= a
    raise ValueError(f"unknown side {side!r}")


def subset_group_identity(s: FiniteSemigroup, a: SubsetRef) -> int | None:
    """If the subset is a group under the restricted operation, return its
    identity element; otherwise None.  Checks closure, an internal identity
    and internal two-sided inverses."""
    t = s.table
    members = a.indices()
    if not members:
        return None
    for x in members:
        for y in members:
            if t[x][y] not in a:
                return None
    ident = None
    for u in members:
        if all(t[u][x] == x and t[x][u] == x for x in members):
            ident = u
            break
    if ident is None:
        return None
    for x in members:
        if not any(t[x][y] == ident and t[y][x] == ident for y in members):
            return None
    return ident


def is_subgroup(s: FiniteSemigroup, a: SubsetRef) -> bool:
    return subset_group_identity(s, a) is not None


def subgroups(s: FiniteSemigroup) -> list[SubsetRef]:
    """All subsets that form a group under the restricted operation.

    Exponential scan; fine at desk scale (n up to a dozen or so).
    """
    out = []
    for mask in range(1, 1 << s.n):
        sub = SubsetRef(mask, s.n)
        if subset_group_identity(s, sub) is not None:
            out.append(sub)
    return out


def ideal_submonoids(s: FiniteSemigroup) -> list[tuple[SubsetRef, int]]:
    """All (subset, identity) pairs that are ideal submonoids of s."""
    t = s.table
    out = []
    for mask in range(1, 1 << s.n):
        sub = SubsetRef(mask, s.n)
        members = sub.indices()
        if any(t[x][y] not in sub for x in members for y in members):
            continue
        ident = next(
            (u for u in members if all(t[u][x] == x and t[x][u] == x for x in members)),
            None,
        )
        if ident is None:
            continue
        if is_ideal(s, sub, "two-sided"):
            out.append((sub, ident))
    return out


def bi_identities(s: FiniteSemigroup) -> tuple[int, ...]:
    """Elements u with u*(x*y) == x*y for all x, y, in index order."""
    t = s.table
    rng = range(s.n)
    out = []
    for u in rng:
        if all(t[u][t[x][y]] == t[x][y] for x in rng for y in rng):
            out.append(u)
    return tuple(out)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the classification ladder decides about one semigroup."""

    idempotents: SubsetRef
    center: SubsetRef
    central_idempotents: SubsetRef
    kernel: SubsetRef
    is_homogroup: bool
    ideal_subgroup: tuple[SubsetRef, int] | None
    is_grouplike: bool
    grouplike_witness: int | None
    is_unipotent: bool
    has_square_group_property: bool
    bi_identity_witness: int | None
    bi_identity_count: int

    def flags(self) -> dict[str, bool]:
        return {
            "homogroup": self.is_homogroup,
            "grouplike": self.is_grouplike,
            "unipotent": self.is_unipotent,
            "square_group_property": self.has_square_group_property,
        }


def _grouplike_witness(s: FiniteSemigroup, zt: SubsetRef) -> int | None:
    """The unique central idempotent e with every x solvable to e, if any."""
    if len(zt) != 1:
        return None
    (e,) = zt.indices()
    t = s.table
    rng = range(s.n)
    for x in rng:
        if not any(t[x][y] == e and t[y][x] == e for y in rng):
            return None
    return e


def classify(s: FiniteSemigroup) -> ClassificationReport:
    """Run the full ladder on one semigroup.

    The square-group property is decided twice: directly (the product set
    S*S is a group) and through the ladder (homogroup with a unique central
    idempotent that is a bi-identity).  Disagreement raises
    InvariantViolation since the two routes are provably equivalent.
    """
    it = idempotents(s)
    z = center(s)
    zt = it & z
    ker = kernel(s)
    ker_identity = subset_group_identity(s, ker)
    homogroup = ker_identity is not None
    ideal_subgroup = (ker, ker_identity) if homogroup else None

    gw = _grouplike_witness(s, zt)
    grouplike = gw is not None
    unipotent = len(it) == 1

    full = s.magma.full_subset()
    square = subset_product(s, full, full)
    square_direct = is_subgroup(s, square)

    bi = bi_identities(s)
    square_ladder = homogroup and len(zt) == 1 and len(bi) > 0 and zt.indices()[0] in bi
    if square_direct != square_ladder:
        raise InvariantViolation(
            "square-group property disagreement between the direct product-set "
            "route and the ladder route",
            witness={"direct": square_direct, "ladder": square_ladder},
        )

    return ClassificationReport(
        idempotents=it,
        center=z,
        central_idempotents=zt,
        kernel=ker,
        is_homogroup=homogroup,
        ideal_subgroup=ideal_subgroup,
        is_grouplike=grouplike,
        grouplike_witness=gw,
        is_unipotent=unipotent,
        has_square_group_property=square_direct,
        bi_identity_witness=bi[0] if bi else None,
        bi_identity_count=len(bi),
    )
