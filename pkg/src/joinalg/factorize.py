"""Two-subset factorizations of finite groups and their projections.

A factorization G = A.B is direct when every element splits uniquely as
a*b; the two coordinate maps are then total functions on G.  The joiner
map of any left group-joined structure is such a right projection for a
normal left factor, and this module verifies that statement instance by
instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError
from .functions import EndoFunction, conjugates, is_decomposer
from .joined import JoinedStructure, require_left_group_e_semigroup
from .tables import FiniteGroup, SubsetRef


@dataclass(frozen=True)
class Factorization:
    """A verified direct product G = delta.omega with its projections."""

    delta: SubsetRef
    omega: SubsetRef
    p_delta: EndoFunction
    p_omega: EndoFunction


def is_direct(g: FiniteGroup, a: SubsetRef, b: SubsetRef) -> tuple[bool, Factorization | None]:
    """Decide whether G = a.b is a direct factorization.

    Direct means the product covers G and |a|*|b| == |G|, which forces the
    uniqueness of representations; on success the projections are built.
    """
    n = g.n
    if len(a) * len(b) != n:
        return False, None
    t = g.table
    p_delta = [-1] * n
    p_omega = [-1] * n
    seen = 0
    for x in a:
        row = t[x]
        for y in b:
            v = row[y]
            if p_delta[v] != -1:
                return False, None
            p_delta[v] = x
            p_omega[v] = y
            seen += 1
    if seen != n:
        return False, None
    magma = g.semigroup.magma
    return True, Factorization(a, b, EndoFunction(magma, tuple(p_delta)), EndoFunction(magma, tuple(p_omega)))


def is_subgroup_subset(g: FiniteGroup, h: SubsetRef) -> bool:
    t = g.table
    if g.identity not in h:
        return False
    members = h.indices()
    return all(t[x][y] in h for x in members for y in members) and all(
        g.inv(x) in h for x in members
    )


def is_normal_subgroup(g: FiniteGroup, h: SubsetRef) -> bool:
    if not is_subgroup_subset(g, h):
        return False
    t = g.table
    return all(
        t[t[x][y]][g.inv(x)] in h for x in g.elements() for y in h
    )


def all_subgroups(g: FiniteGroup) -> list[SubsetRef]:
    """Every subgroup, by scanning subsets that contain the identity."""
    rest = [x for x in g.elements() if x != g.identity]
    base = 1 << g.identity
    out = []
    for bits in range(1 << len(rest)):
        mask = base
        for i, x in enumerate(rest):
            if bits >> i & 1:
                mask |= 1 << x
        sub = SubsetRef(mask, g.n)
        if is_subgroup_subset(g, sub):
            out.append(sub)
    out.sort(key=lambda s: (len(s), s.mask))
    return out


def normal_subgroups(g: FiniteGroup) -> list[SubsetRef]:
    return [h for h in all_subgroups(g) if is_normal_subgroup(g, h)]


def left_cosets(g: FiniteGroup, h: SubsetRef) -> list[tuple[int, ...]]:
    """Left cosets x.h, ordered by their least member."""
    t = g.table
    seen = set()
    cosets = []
    for x in g.elements():
        if x in seen:
            continue
        coset = tuple(sorted(t[x][y] for y in h))
        seen.update(coset)
        cosets.append(coset)
    cosets.sort(key=lambda c: c[0])
    return cosets


def transversals(g: FiniteGroup, h: SubsetRef):
    """All one-representative-per-left-coset subsets, in index order."""
    cosets = left_cosets(g, h)
    for picks in product(*cosets):
        yield SubsetRef.of(picks, g.n)


@dataclass(frozen=True)
class ProjectionReport:
    """Joiner map of a left group-joined structure as a factor projection."""

    delta: SubsetRef
    omega: SubsetRef
    conjugate_images_agree: bool
    delta_is_normal: bool
    direct_delta_omega: bool
    direct_omega_delta: bool
    joiner_equals_projection: bool
    joiner_is_strong_decomposer: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.conjugate_images_agree
            and self.delta_is_normal
            and self.direct_delta_omega
            and self.direct_omega_delta
            and self.joiner_equals_projection
            and self.joiner_is_strong_decomposer
        )


def projection_decomposition_check(j: JoinedStructure) -> ProjectionReport:
    """Verify the joiner map decomposes the first group.

    Computes delta as the image of the upper conjugate of the joiner map and
    omega as the joiner image, then checks: both conjugate images agree,
    delta is normal, both product orders delta.omega and omega.delta are
    direct, the joiner equals the omega-projection of the delta.omega
    factorization, and the joiner is a strong decomposer.
    """
    g = require_left_group_e_semigroup(j)
    magma = g.semigroup.magma
    joiner = EndoFunction(magma, tuple(j.odot[j.e]))
    pair = conjugates(joiner)
    delta = SubsetRef.of(set(pair.upper.mapping), g.n)
    delta_low = SubsetRef.of(set(pair.lower.mapping), g.n)
    omega = SubsetRef.of(set(joiner.mapping), g.n)

    normal = is_normal_subgroup(g, delta)
    ok_do, fact = is_direct(g, delta, omega)
    ok_od, _ = is_direct(g, omega, delta)
    joiner_is_proj = fact is not None and fact.p_omega.mapping == joiner.mapping
    strong = is_decomposer(joiner, strong=True).ok
    return ProjectionReport(
        delta=delta,
        omega=omega,
        conjugate_images_agree=delta == delta_low,
        delta_is_normal=normal,
        direct_delta_omega=ok_do,
        direct_omega_delta=ok_od,
        joiner_equals_projection=joiner_is_proj,
        joiner_is_strong_decomposer=strong,
    )


def decomposers_from_factorizations(g: FiniteGroup) -> dict[tuple[int, ...], tuple[SubsetRef, SubsetRef]]:
    """Map each normal subgroup and transversal to its omega-projection.

    Returns {projection mapping: (delta, omega)}; the directness of each
    candidate is re-verified rather than assumed.
    """
    out: dict[tuple[int, ...], tuple[SubsetRef, SubsetRef]] = {}
    for delta in normal_subgroups(g):
        for omega in transversals(g, delta):
            ok, fact = is_direct(g, delta, omega)
            if not ok:
                continue
            key = fact.p_omega.mapping
            out.setdefault(key, (delta, omega))
    return out
