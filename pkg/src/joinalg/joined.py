"""Two-operation structures (S, dot, e, odot) and their joiner-law theory.

A carrier holds two associative tables and a distinguished element e.  The
left joiner law is  e (.) (x*y) == e (.) (x (.) y)  where * is the first
operation and (.) the second; the right law is its mirror.  The "identical"
strengthening additionally pins both sides to x (.) y.  The batteries
below each evaluate one published equivalence as independent legs and
report whether the legs agree.

Law checks always evaluate the raw two-sided-lookup form of each law, not
an associativity-chained rewriting, so a structure with a broken second
table still gets a correct law diagnosis; associativity is diagnosed
separately at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classify import (
    center,
    central_idempotents,
    classify,
    is_ideal,
    is_subgroup,
    subgroups,
    subset_group_identity,
)
from .errors import PreconditionError
from .tables import (
    FiniteGroup,
    FiniteMagma,
    FiniteSemigroup,
    SubsetRef,
    Table,
    freeze_table,
    default_names,
    subset_product,
)

SIDES = ("left", "right", "both")


@dataclass(frozen=True)
class JoinedStructure:
    """One carrier, two verified-associative tables, one joiner element."""

    names: tuple[str, ...]
    dot: Table
    odot: Table
    e: int

    def __post_init__(self):
        FiniteSemigroup(FiniteMagma(self.names, self.dot))
        FiniteSemigroup(FiniteMagma(self.names, self.odot))
        if not 0 <= self.e < len(self.names):
            raise ValueError(f"joiner index {self.e} outside carrier")
        ident = _identity_of(self.dot)
        if ident is not None and _is_group_table(self.dot) and ident != self.e:
            raise ValueError(
                f"first operation is a group with identity {ident}; the joiner must equal it"
            )

    @classmethod
    def from_tables(cls, dot: Sequence[Sequence[int]], odot: Sequence[Sequence[int]], e: int,
                    names: Sequence[str] | None = None) -> "JoinedStructure":
        dot_t = freeze_table(dot)
        return cls(tuple(names) if names is not None else default_names(len(dot_t)),
                   dot_t, freeze_table(odot), e)

    @property
    def n(self) -> int:
        return len(self.names)

    def dot_semigroup(self) -> FiniteSemigroup:
        return FiniteSemigroup(FiniteMagma(self.names, self.dot))

    def odot_semigroup(self) -> FiniteSemigroup:
        return FiniteSemigroup(FiniteMagma(self.names, self.odot))

    def dot_group(self) -> FiniteGroup:
        return FiniteGroup(self.dot_semigroup())

    def dot_is_group(self) -> bool:
        return _is_group_table(self.dot)

    def dot_is_monoid_at_e(self) -> bool:
        ident = _identity_of(self.dot)
        return ident is not None and ident == self.e

    def joiner(self, side: str = "left") -> "JoinerMap":
        return JoinerMap.of(self, side)

    def with_e(self, e: int) -> "JoinedStructure":
        return JoinedStructure(self.names, self.dot, self.odot, e)


@dataclass(frozen=True)
class JoinerMap:
    """The map x -> e (.) x (side left) or x -> x (.) e (side right)."""

    side: str
    mapping: tuple[int, ...]

    @classmethod
    def of(cls, j: JoinedStructure, side: str) -> "JoinerMap":
        if side == "left":
            return cls("left", tuple(j.odot[j.e]))
        if side == "right":
            return cls("right", tuple(row[j.e] for row in j.odot))
        raise ValueError(f"unknown side {side!r}")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self) -> SubsetRef:
        return SubsetRef.of(set(self.mapping), len(self.mapping))


def _identity_of(table: Table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def _is_group_table(table: Table) -> bool:
    n = len(table)
    e = _identity_of(table)
    if e is None:
        return False
    return all(
        any(table[x][y] == e and table[y][x] == e for y in range(n)) for x in range(n)
    )


def left_law_violation(dot: Table, odot: Table, e: int, identical: bool = False) -> tuple[int, int] | None:
    """First (x, y) violating the left law, or None.  Raw-form lookups."""
    n = len(dot)
    erow = odot[e]
    for x in range(n):
        for y in range(n):
            xoy = odot[x][y]
            lhs = erow[dot[x][y]]
            rhs = erow[xoy]
            if lhs != rhs or (identical and lhs != xoy):
                return (x, y)
    return None


def right_law_violation(dot: Table, odot: Table, e: int, identical: bool = False) -> tuple[int, int] | None:
    """First (x, y) violating the right law, or None."""
    n = len(dot)
    for x in range(n):
        for y in range(n):
            xoy = odot[x][y]
            lhs = odot[dot[x][y]][e]
            rhs = odot[xoy][e]
            if lhs != rhs or (identical and rhs != xoy):
                return (x, y)
    return None


@dataclass(frozen=True)
class LawReport:
    side: str
    mode: str
    holds: bool
    counterexample: tuple[int, int] | None


def verify_join_law(j: JoinedStructure, side: str = "both", mode: str = "plain") -> LawReport:
    """Check the joiner law on j for the requested side and mode.

    mode "plain" is the bare law; "identical" additionally requires both
    sides of the law to equal x (.) y.  The counterexample is the first
    violating pair in row-major index order.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if mode not in ("plain", "identical"):
        raise ValueError("mode must be plain or identical")
    identical = mode == "identical"
    witness = None
    if side in ("left", "both"):
        witness = left_law_violation(j.dot, j.odot, j.e, identical)
    if witness is None and side in ("right", "both"):
        witness = right_law_violation(j.dot, j.odot, j.e, identical)
    return LawReport(side, mode, witness is None, witness)


def is_josemig(j: JoinedStructure, side: str = "both") -> tuple[bool, int | None]:
    """Does the joiner law hold for every choice of joiner element?

    Returns (verdict, first failing joiner index or None).
    """
    for e in range(j.n):
        if side in ("left", "both") and left_law_violation(j.dot, j.odot, e) is not None:
            return False, e
        if side in ("right", "both") and right_law_violation(j.dot, j.odot, e) is not None:
            return False, e
    return True, None


def chained_join_law_holds(j: JoinedStructure, length: int) -> tuple[bool, tuple | None]:
    """e (.) (x1*...*xk) == e (.) x1 (.) ... (.) xk for all tuples of the
    given length; returns first violating tuple if any."""
    n = j.n
    dot, odot, e = j.dot, j.odot, j.e

    def rec(prefix_dot, prefix_chain, depth):
        if depth == length:
            if odot[e][prefix_dot] != prefix_chain:
                return prefix_trace[:]
            return None
        for x in range(n):
            prefix_trace.append(x)
            bad = rec(dot[prefix_dot][x] if depth else x,
                      odot[prefix_chain][x] if depth else odot[e][x],
                      depth + 1)
            if bad is not None:
                return bad
            prefix_trace.pop()
        return None

    prefix_trace: list[int] = []
    bad = rec(0, 0, 0)
    return (bad is None), (tuple(bad) if bad is not None else None)


def require_left_group_e_semigroup(j: JoinedStructure) -> FiniteGroup:
    """Precondition gate: first operation a group with identity e, left law
    holds.  Returns the group; raises PreconditionError otherwise."""
    if not j.dot_is_group():
        raise PreconditionError("first operation is not a group")
    g = j.dot_group()
    if g.identity != j.e:
        raise PreconditionError("joiner is not the group identity")
    witness = left_law_violation(j.dot, j.odot, j.e)
    if witness is not None:
        raise PreconditionError(f"left joiner law fails at {witness}")
    return g


def require_left_monoid_e_semigroup(j: JoinedStructure) -> None:
    if not j.dot_is_monoid_at_e():
        raise PreconditionError("first operation is not a monoid with identity at the joiner")
    witness = left_law_violation(j.dot, j.odot, j.e)
    if witness is not None:
        raise PreconditionError(f"left joiner law fails at {witness}")


@dataclass(frozen=True)
class ImageSubgroupReport:
    """Image of the left joiner map inside the second semigroup."""

    image: SubsetRef
    is_subgroup: bool
    identity: int | None
    inverse_rule_holds: bool


def e_odot_G(j: JoinedStructure) -> ImageSubgroupReport:
    """Compute e (.) G and verify it is a subgroup of the second semigroup
    with identity e (.) e, plus the inverse rule
    inv(e(.)x) == e(.)inv(x) == e(.)inv(e(.)x) (inverses of the first group).
    """
    g = require_left_group_e_semigroup(j)
    J = j.joiner("left")
    image = J.image()
    odot_sg = j.odot_semigroup()
    ident = subset_group_identity(odot_sg, image)
    w0 = j.odot[j.e][j.e]
    ok_subgroup = ident is not None and ident == w0

    inverse_ok = True
    if ok_subgroup:
        odot = j.odot
        for x in g.elements():
            jx = J(x)
            # the image inverse of J(x): unique y in image with y (.) jx = jx (.) y = w0
            img_inv = next(
                (y for y in image if odot[y][jx] == w0 and odot[jx][y] == w0), None
            )
            if img_inv is None or img_inv != J(g.inv(x)) or img_inv != J(g.inv(jx)):
                inverse_ok = False
                break
    return ImageSubgroupReport(image, ok_subgroup, ident, ok_subgroup and inverse_ok)


@dataclass(frozen=True)
class EquivalenceBattery:
    """Named boolean legs of one published equivalence plus agreement.

    ``legs`` must all carry the same truth value for the battery to be
    consistent; ``required`` holds unconditional claims that must each be
    True outright.
    """

    name: str
    legs: dict[str, bool]
    witnesses: dict[str, object]
    required: dict[str, bool]

    @property
    def consistent(self) -> bool:
        return len(set(self.legs.values())) == 1

    @property
    def common_value(self) -> bool | None:
        return next(iter(self.legs.values())) if self.consistent else None

    @property
    def required_ok(self) -> bool:
        return all(self.required.values())

    @property
    def passed(self) -> bool:
        return self.consistent and self.required_ok


def image_subgroup_battery(j: JoinedStructure) -> EquivalenceBattery:
    """Four equivalent descriptions of when the joiner image is an ideal
    subgroup of the second semigroup:

    (a) e(.)G is an ideal subgroup of (G, odot);
    (b) e(.)e is a central idempotent of (G, odot);
    (c) (G, odot) is a homogroup;
    (d) e(.)G is the largest odot-subgroup containing e(.)e and the least
        ideal.

    Unconditionally, e(.)G must be a subgroup of the second semigroup with
    the inverse rule of the joiner image; that is reported under required.
    """
    require_left_group_e_semigroup(j)
    odot_sg = j.odot_semigroup()
    image = j.joiner("left").image()
    w0 = j.odot[j.e][j.e]
    witnesses: dict[str, object] = {"image": image.indices(), "e_odot_e": w0}
    img = e_odot_G(j)

    leg_a = is_subgroup(odot_sg, image) and is_ideal(odot_sg, image, "two-sided")

    zt = central_idempotents(odot_sg)
    leg_b = w0 in center(odot_sg)
    if leg_b and w0 not in zt:
        # central but not idempotent cannot happen: e(.)e is always idempotent
        witnesses["central_not_idempotent"] = w0
        leg_b = False

    report = classify(odot_sg)
    leg_c = report.is_homogroup

    groups = subgroups(odot_sg)
    containing = [h for h in groups if w0 in h]
    largest = all(h <= image for h in containing) and image in groups
    least_ideal = is_ideal(odot_sg, image, "two-sided") and image == report.kernel
    leg_d = largest and least_ideal

    return EquivalenceBattery(
        "joiner-image-ideal-subgroup",
        {"ideal_subgroup": leg_a, "central_square": leg_b, "homogroup": leg_c,
         "largest_and_least": leg_d},
        witnesses,
        {"image_is_subgroup": img.is_subgroup, "image_inverse_rule": img.inverse_rule_holds},
    )


def grouplike_criterion_battery(j: JoinedStructure) -> EquivalenceBattery:
    """Three equivalent criteria for the second semigroup being a grouplike:

    (a) (G, odot) is a grouplike;
    (b) e(.)e is an identity for the semigroup of central idempotents;
    (c) the central idempotents are exactly {e(.)e}.
    """
    require_left_group_e_semigroup(j)
    odot_sg = j.odot_semigroup()
    w0 = j.odot[j.e][j.e]
    zt = central_idempotents(odot_sg)
    odot = j.odot

    report = classify(odot_sg)
    leg_a = report.is_grouplike
    # an identity of the semigroup Zt is in particular one of its members
    leg_b = w0 in zt and all(odot[w0][d] == d and odot[d][w0] == d for d in zt)
    leg_c = zt.indices() == (w0,)
    return EquivalenceBattery(
        "second-semigroup-grouplike",
        {"grouplike": leg_a, "square_acts_as_identity_on_zt": leg_b,
         "zt_is_singleton_square": leg_c},
        {"zt": zt.indices(), "e_odot_e": w0},
        {},
    )


def unital_image_battery(j: JoinedStructure) -> EquivalenceBattery:
    """For a left monoid-e-semigroup: e(.)S is the least right ideal
    containing e(.)e and the largest submonoid with identity e(.)e, and the
    following are equivalent: (b1) e(.)S is an ideal, (b2) e(.)e is central
    in (S, odot), (b3) e(.)S is a left ideal, (b4) e(.)S is the least ideal
    containing e(.)e and the largest e(.)e-unital submonoid.
    """
    require_left_monoid_e_semigroup(j)
    odot_sg = j.odot_semigroup()
    image = j.joiner("left").image()
    odot = j.odot
    w0 = odot[j.e][j.e]
    witnesses: dict[str, object] = {"image": image.indices(), "e_odot_e": w0}

    right_ideals_containing = _ideals_containing(odot_sg, w0, "right")
    least_right = is_ideal(odot_sg, image, "right") and all(image <= i for i in right_ideals_containing)
    unital_subs = _unital_subsemigroups(odot_sg, w0)
    image_unital = all(odot[w0][x] == x and odot[x][w0] == x for x in image) and w0 in image
    largest_unital = image_unital and all(u <= image for u in unital_subs)

    leg_b1 = is_ideal(odot_sg, image, "two-sided")
    leg_b2 = w0 in center(odot_sg)
    leg_b3 = is_ideal(odot_sg, image, "left")
    ideals_containing = _ideals_containing(odot_sg, w0, "two-sided")
    leg_b4 = (
        leg_b1
        and all(image <= i for i in ideals_containing)
        and largest_unital
    )
    return EquivalenceBattery(
        "joiner-image-unital-ideal",
        {"ideal": leg_b1, "central_square": leg_b2, "left_ideal": leg_b3,
         "least_ideal_largest_unital": leg_b4},
        witnesses,
        {"least_right_ideal": least_right, "largest_unital_submonoid": largest_unital,
         "right_unital_when_right_periodic": right_unital_image_check(j)},
    )


def _ideals_containing(s: FiniteSemigroup, member: int, side: str) -> list[SubsetRef]:
    out = []
    for mask in range(1, 1 << s.n):
        sub = SubsetRef(mask, s.n)
        if member in sub and is_ideal(s, sub, side):
            out.append(sub)
    return out


def _unital_subsemigroups(s: FiniteSemigroup, u: int) -> list[SubsetRef]:
    """Subsemigroups containing u on which u acts as a two-sided identity."""
    t = s.table
    out = []
    for mask in range(1, 1 << s.n):
        sub = SubsetRef(mask, s.n)
        if u not in sub:
            continue
        members = sub.indices()
        if any(t[x][y] not in sub for x in members for y in members):
            continue
        if all(t[u][x] == x and t[x][u] == x for x in members):
            out.append(sub)
    return out


@dataclass(frozen=True)
class JoinerIdentityReport:
    """Outcome of the joiner-map identity checks on one structure."""

    checks: dict[str, bool]
    witnesses: dict[str, object]

    @property
    def all_hold(self) -> bool:
        return all(self.checks.values())


def joiner_identity_checks(j: JoinedStructure) -> JoinerIdentityReport:
    """Exhaustive joiner-map identities for a left monoid-e-semigroup.

    Verifies the seven-way identity chain
      J(xy) = J(x(.)y) = J(x)(.)J(y) = J(J(x)y) = J(xJ(y)) = J(J(x)(.)y)
            = J(x(.)J(y)),
    the commutation of the two one-sided joiner maps, the equivalence
    "right periodicity <=> left-then-right joiner composition collapses",
    and the canceler/homomorphism consequences of each periodicity side.
    """
    require_left_monoid_e_semigroup(j)
    n, dot, odot, e = j.n, j.dot, j.odot, j.e
    J = odot[e]
    Jr = tuple(row[e] for row in odot)
    checks: dict[str, bool] = {}
    witnesses: dict[str, object] = {}

    chain_ok, chain_wit = _seven_chain_violation(n, dot, odot, J)
    checks["seven_identity_chain"] = chain_ok
    if chain_wit is not None:
        witnesses["seven_identity_chain"] = chain_wit

    checks["joiner_maps_commute"] = all(J[Jr[x]] == Jr[J[x]] for x in range(n))

    right_periodic = all(J[dot[x][e]] == J[x] for x in range(n))
    collapse = all(J[Jr[x]] == J[x] for x in range(n))
    checks["right_periodic_iff_collapse"] = right_periodic == collapse
    witnesses["right_periodic"] = right_periodic

    if right_periodic:
        checks["hom_dot_to_odot"] = all(
            J[dot[x][y]] == odot[J[x]][J[y]] for x in range(n) for y in range(n)
        )
        checks["endo_odot"] = all(
            J[odot[x][y]] == odot[J[x]][J[y]] for x in range(n) for y in range(n)
        )
        checks["right_canceler_odot"] = all(
            J[odot[x][J[y]]] == J[odot[x][y]] for x in range(n) for y in range(n)
        )
        checks["right_canceler_dot"] = all(
            J[dot[x][J[y]]] == J[dot[x][y]] for x in range(n) for y in range(n)
        )
    left_periodic = all(J[dot[e][x]] == J[x] for x in range(n))
    witnesses["left_periodic"] = left_periodic
    if left_periodic:
        checks["left_canceler_dot"] = all(
            J[dot[J[x]][y]] == J[dot[x][y]] for x in range(n) for y in range(n)
        )
        checks["left_canceler_odot"] = all(
            J[odot[J[x]][y]] == J[odot[x][y]] for x in range(n) for y in range(n)
        )
    return JoinerIdentityReport(checks, witnesses)


def _seven_chain_violation(n, dot, odot, J):
    for x in range(n):
        for y in range(n):
            vals = (
                J[dot[x][y]],
                J[odot[x][y]],
                odot[J[x]][J[y]],
                J[dot[J[x]][y]],
                J[dot[x][J[y]]],
                J[odot[J[x]][y]],
                J[odot[x][J[y]]],
            )
            if len(set(vals)) != 1:
                return False, (x, y, vals)
    return True, None


def right_unital_image_check(j: JoinedStructure) -> bool:
    """If J is right-periodic in the first operation, e(.)e must be a right
    identity on the joiner image."""
    n, dot, odot, e = j.n, j.dot, j.odot, j.e
    J = odot[e]
    hypothesis = all(J[dot[x][e]] == J[x] for x in range(n))
    if not hypothesis:
        return True
    w0 = odot[e][e]
    return all(odot[J[x]][w0] == J[x] for x in range(n))
