"""Exact-rational rule-based structures and their seeded sampled checks.

The carrier here is (a sampled window of) the rationals, so nothing is
exhaustive: every check draws a deterministic sample from a seeded RNG and
reports sampled evidence, never a proof.  All arithmetic is ``Fraction``
arithmetic; floats never appear.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

Rational = Fraction
RationalOp = Callable[[Fraction, Fraction], Fraction]

DEFAULT_BUDGET = 10_000


def _floor_quotient(a: Fraction, b: Fraction) -> int:
    # floor(a/b) on integers: Fraction denominators are positive, so the
    # divisor sign is the sign of b's numerator; Python // floors either way
    return (a.numerator * b.denominator) // (a.denominator * b.numerator)


def round_down(a: Fraction, b: Fraction) -> Fraction:
    """Largest integer multiple of b not exceeding a (in the b > 0 sense).

    Uses mathematical floor, so round_down(-1/2, 1) == -1, and the
    remainder below lands in [0, b) for b > 0 and (b, 0] for b < 0.
    """
    if b == 0:
        raise ValueError("modulus b must be nonzero")
    return b * _floor_quotient(a, b)


def remainder_part(a: Fraction, b: Fraction) -> Fraction:
    """a minus its round_down, i.e. the residue of a modulo the grid bZ."""
    if b == 0:
        raise ValueError("modulus b must be nonzero")
    return a - b * _floor_quotient(a, b)


def wrapped_addition(b: Fraction) -> RationalOp:
    """The operation x (+) y = remainder_part(x + y, b)."""
    if b == 0:
        raise ValueError("modulus b must be nonzero")
    bn, bd = b.numerator, b.denominator

    def add_mod(x: Fraction, y: Fraction) -> Fraction:
        t = x + y
        k = (t.numerator * bd) // (t.denominator * bn)
        return t - k * b

    return add_mod


class RationalSampler:
    """Deterministic stream of exact rationals from a seed.

    Numerators span a symmetric window and denominators stay small so that
    products and sums remain cheap; the stream is reproducible per seed.
    """

    def __init__(self, seed: int, numerator_bound: int = 1000, denominator_bound: int = 30):
        self._rng = random.Random(seed)
        self._num = numerator_bound
        self._den = denominator_bound

    def draw(self) -> Fraction:
        return Fraction(self._rng.randint(-self._num, self._num), self._rng.randint(1, self._den))

    def draw_tuple(self, k: int) -> tuple[Fraction, ...]:
        return tuple(self.draw() for _ in range(k))


@dataclass(frozen=True)
class RationalRuleMagma:
    """One exact-rational operation plus a sampling policy.

    ``sample`` optionally pins a finite set of interest (e.g. a handful of
    fractions in [0, 1) for the multiplicative structure); sampled checks
    that need a carrier excerpt use it when present.
    """

    op: RationalOp
    description: str
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    sample: tuple[Fraction, ...] = field(default=())

    def apply(self, x: Fraction, y: Fraction) -> Fraction:
        return self.op(Fraction(x), Fraction(y))

    def sampler(self) -> RationalSampler:
        return RationalSampler(self.seed)


@dataclass(frozen=True)
class RationalJoined:
    """Two exact-rational operations with a distinguished joiner element."""

    dot: RationalOp
    odot: RationalOp
    e: Fraction
    description: str
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def joiner_of(self, x: Fraction) -> Fraction:
        return self.odot(self.e, x)

    def sampler(self) -> RationalSampler:
        return RationalSampler(self.seed)


@dataclass(frozen=True)
class SampledCheck:
    """Outcome of a sampled law check: cases tried and the first failure."""

    name: str
    cases: int
    failures: int
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _run_sampled(name, sampler, arity, budget, law) -> SampledCheck:
    failures = 0
    witness = None
    for _ in range(budget):
        args = sampler.draw_tuple(arity)
        if not law(*args):
            failures += 1
            if witness is None:
                witness = args
    return SampledCheck(name, budget, failures, witness)


def sampled_associative(m: RationalRuleMagma, budget: int | None = None) -> SampledCheck:
    op = m.op
    return _run_sampled(
        "associative", m.sampler(), 3, budget or m.budget,
        lambda x, y, z: op(op(x, y), z) == op(x, op(y, z)),
    )


def sampled_commutative(m: RationalRuleMagma, budget: int | None = None) -> SampledCheck:
    op = m.op
    return _run_sampled(
        "commutative", m.sampler(), 2, budget or m.budget,
        lambda x, y: op(x, y) == op(y, x),
    )


def sampled_join_law(j: RationalJoined, side: str = "both", identical: bool = False,
                     budget: int | None = None) -> SampledCheck:
    """Sampled joiner law e(.)xy == e(.)(x(.)y), optionally == x(.)y, per side."""
    dot, odot, e = j.dot, j.odot, j.e

    def law(x, y):
        xy = dot(x, y)
        xoy = odot(x, y)
        if side in ("left", "both"):
            lhs, rhs = odot(e, xy), odot(e, xoy)
            if lhs != rhs or (identical and lhs != xoy):
                return False
        if side in ("right", "both"):
            lhs, rhs = odot(xy, e), odot(xoy, e)
            if lhs != rhs or (identical and lhs != xoy):
                return False
        return True

    tag = ("identical-" if identical else "") + f"{side}-join-law"
    return _run_sampled(tag, j.sampler(), 2, budget or j.budget, law)


def sampled_joiner_map_laws(j: RationalJoined, budget: int | None = None) -> list[SampledCheck]:
    """Sampled versions of the joiner-map identities of a joined structure.

    Covers: the joiner map respects both operations (J(x dot y) ==
    J(x) odot J(y) == J(x odot y)), idempotency of J, and the inverse rule
    for the image (here dot is addition, so the dot-inverse is negation).
    """
    dot, odot, e = j.dot, j.odot, j.e
    J = j.joiner_of
    budget = budget or j.budget
    checks = [
        _run_sampled("joiner-homomorphism", j.sampler(), 2, budget,
                     lambda x, y: J(dot(x, y)) == odot(J(x), J(y)) == J(odot(x, y))),
        _run_sampled("joiner-idempotent", j.sampler(), 1, budget,
                     lambda x: J(J(x)) == J(x)),
        _run_sampled("image-inverse-rule", j.sampler(), 1, budget,
                     lambda x: odot(J(x), J(-x)) == odot(e, e) == odot(J(-x), J(x))),
    ]
    return checks


def sampled_residue_laws(j: RationalJoined, b: Fraction, budget: int | None = None) -> list[SampledCheck]:
    """For the wrapped-addition structure: J is the residue map for grid bZ.

    Checks J(x) == remainder_part(x, b), integrality (x - J(x)) / b in Z,
    and residue-class arithmetic (the class of x (+) y is the class of
    x + y).
    """
    J = j.joiner_of
    budget = budget or j.budget
    return [
        _run_sampled("joiner-is-residue", j.sampler(), 1, budget,
                     lambda x: J(x) == remainder_part(x, b)),
        _run_sampled("grid-integrality", j.sampler(), 1, budget,
                     lambda x: ((x - J(x)) / b).denominator == 1),
        _run_sampled("class-arithmetic", j.sampler(), 2, budget,
                     lambda x, y: J(j.odot(x, y)) == J(x + y)),
    ]


def sampled_joiner_window(j: RationalJoined, b: Fraction, budget: int | None = None) -> SampledCheck:
    """Every joiner value lies in the half-open residue window of b."""
    J = j.joiner_of

    def in_window(x: Fraction) -> bool:
        v = J(x)
        return (0 <= v < b) if b > 0 else (b < v <= 0)

    return _run_sampled("joiner-window", j.sampler(), 1, budget or j.budget, in_window)


def sampled_identical_for_shifts(j: RationalJoined, b: Fraction, shifts: Sequence[int] = (-2, -1, 0, 1, 2),
                                 budget: int | None = None) -> list[SampledCheck]:
    """Every grid point k*b acts as an identical joiner: kb (+) (x+y) == x (+) y."""
    odot = j.odot
    budget = budget or j.budget
    out = []
    for k in shifts:
        beta = k * b
        out.append(_run_sampled(
            f"identical-at-{k}b", j.sampler(), 2, budget,
            lambda x, y, beta=beta: odot(beta, x + y) == odot(x, y),
        ))
    return out


def sample_closure_products(m: RationalRuleMagma) -> tuple[frozenset[Fraction], frozenset[Fraction]]:
    """Pairwise product set of the pinned sample versus the sample itself."""
    base = frozenset(m.sample)
    prods = frozenset(m.apply(x, y) for x in m.sample for y in m.sample)
    return base, prods


def sampled_fraction_report(m: RationalRuleMagma) -> dict[str, object]:
    """Desk-scale evidence about the multiplicative structure on [0, 1).

    Works on the pinned sample: idempotents found, solvability to 0, and
    whether the pairwise product set stays inside the sample.  Evidence
    only; the carrier is infinite.
    """
    base, prods = sample_closure_products(m)
    idempotents = sorted(x for x in base if m.apply(x, x) == x)
    zero = Fraction(0)
    solvable = all(any(m.apply(x, y) == zero for y in base) for x in base)
    return {
        "idempotents": idempotents,
        "every_sample_solvable_to_zero": solvable,
        "products_inside_sample": prods <= base,
        "product_set_equals_sample": prods == base,
        "new_products": sorted(prods - base),
    }
