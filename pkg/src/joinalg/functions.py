"""Endofunctions of finite magmas: decomposer/canceler predicates,
conjugates on groups, and the derived operation x *_f y = f(x * y).

Every predicate is an exhaustive quantifier scan that reports the first
violating tuple in row-major index order, never a bare boolean.  The
conjugate-based predicates need inverses, so they are only defined over a
group base; asking for them elsewhere is an error, not an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import PreconditionError
from .tables import FiniteGroup, FiniteMagma, FiniteSemigroup, Table


@dataclass(frozen=True)
class EndoFunction:
    """A total self-map of a carrier, stored as an index array."""

    base: FiniteMagma
    mapping: tuple[int, ...]

    def __post_init__(self):
        n = self.base.n
        if len(self.mapping) != n or any(not 0 <= v < n for v in self.mapping):
            raise ValueError("mapping must be total on the carrier")

    @classmethod
    def of(cls, base, mapping: Sequence[int]) -> "EndoFunction":
        return cls(_magma_of(base), tuple(int(v) for v in mapping))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def n(self) -> int:
        return self.base.n

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.mapping)))


def _magma_of(base) -> FiniteMagma:
    if isinstance(base, FiniteMagma):
        return base
    if isinstance(base, FiniteSemigroup):
        return base.magma
    if isinstance(base, FiniteGroup):
        return base.semigroup.magma
    raise TypeError(f"unsupported base {type(base).__name__}")


def _group_of(base: FiniteMagma) -> FiniteGroup:
    try:
        return FiniteGroup(FiniteSemigroup(base))
    except Exception as exc:
        raise PreconditionError(f"base is not a group: {exc}") from exc


@dataclass(frozen=True)
class Check:
    """One predicate outcome with the first violating tuple, if any."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConjugatePair:
    """The two functions splitting x around f: x = left(x)*f(x) = f(x)*right(x)."""

    upper: EndoFunction   # x -> x * f(x)^-1
    lower: EndoFunction   # x -> f(x)^-1 * x


def conjugates(f: EndoFunction) -> ConjugatePair:
    """Both conjugates of f over a group base."""
    g = _group_of(f.base)
    t = g.table
    upper = tuple(t[x][g.inv(f(x))] for x in g.elements())
    lower = tuple(t[g.inv(f(x))][x] for x in g.elements())
    return ConjugatePair(EndoFunction(f.base, upper), EndoFunction(f.base, lower))


def _scan_pairs(n, law) -> Check:
    for x in range(n):
        for y in range(n):
            if not law(x, y):
                return Check(False, (x, y))
    return Check(True)


def _scan_triples(n, law) -> Check:
    for x, y, z in product(range(n), repeat=3):
        if not law(x, y, z):
            return Check(False, (x, y, z))
    return Check(True)


def is_right_decomposer(f: EndoFunction, strong: bool = False) -> Check:
    """f(upper(x) * f(y)) == f(y); the strong form drops the inner f."""
    t = f.base.table
    up = conjugates(f).upper
    m = f.mapping
    if strong:
        return _scan_pairs(f.n, lambda x, y: m[t[up(x)][y]] == m[y])
    return _scan_pairs(f.n, lambda x, y: m[t[up(x)][m[y]]] == m[y])


def is_left_decomposer(f: EndoFunction, strong: bool = False) -> Check:
    """f(f(x) * lower(y)) == f(x); the strong form drops the inner f."""
    t = f.base.table
    low = conjugates(f).lower
    m = f.mapping
    if strong:
        return _scan_pairs(f.n, lambda x, y: m[t[x][low(y)]] == m[x])
    return _scan_pairs(f.n, lambda x, y: m[t[m[x]][low(y)]] == m[x])


def is_decomposer(f: EndoFunction, strong: bool = False) -> Check:
    left = is_left_decomposer(f, strong)
    if not left.ok:
        return left
    return is_right_decomposer(f, strong)


def is_right_canceler(f: EndoFunction) -> Check:
    t = f.base.table
    m = f.mapping
    return _scan_pairs(f.n, lambda x, y: m[t[x][m[y]]] == m[t[x][y]])


def is_left_canceler(f: EndoFunction) -> Check:
    t = f.base.table
    m = f.mapping
    return _scan_pairs(f.n, lambda x, y: m[t[m[x]][y]] == m[t[x][y]])


def is_canceler(f: EndoFunction) -> Check:
    left = is_left_canceler(f)
    if not left.ok:
        return left
    return is_right_canceler(f)


def is_associative_fn(f: EndoFunction, strong: bool = False) -> Check:
    """f(x * f(y*z)) == f(f(x*y) * z); the strong form also pins f(x*y*z)."""
    t = f.base.table
    m = f.mapping

    def law(x, y, z):
        lhs = m[t[x][m[t[y][z]]]]
        rhs = m[t[m[t[x][y]]][z]]
        if lhs != rhs:
            return False
        return not strong or lhs == m[t[t[x][y]][z]]

    return _scan_triples(f.n, law)


def is_idempotent_fn(f: EndoFunction) -> Check:
    m = f.mapping
    for x in range(f.n):
        if m[m[x]] != m[x]:
            return Check(False, (x,))
    return Check(True)


def is_periodic(f: EndoFunction, periods: int | Iterable[int], side: str = "right") -> Check:
    """f(x * d) == f(x) (right) or f(d * x) == f(x) (left) for each period d.

    Accepts a single period element or a set of them, e.g. the two-element
    period set of the Klein folding map.
    """
    ds = (periods,) if isinstance(periods, int) else tuple(periods)
    t = f.base.table
    m = f.mapping
    for d in ds:
        for x in range(f.n):
            if side in ("right", "both") and m[t[x][d]] != m[x]:
                return Check(False, (x, d))
            if side in ("left", "both") and m[t[d][x]] != m[x]:
                return Check(False, (d, x))
    return Check(True)


GROUP_ONLY_PREDICATES = (
    "left_decomposer", "right_decomposer", "decomposer",
    "left_strong_decomposer", "right_strong_decomposer", "strong_decomposer",
)


def predicates(f: EndoFunction, e: int | None = None,
               include: Iterable[str] | None = None) -> dict[str, Check]:
    """Evaluate the named predicates of f, defaulting to all that apply.

    Periodicity checks need ``e``.  Conjugate-based predicates are refused
    on a non-group base.
    """
    base_is_group = True
    try:
        _group_of(f.base)
    except PreconditionError:
        base_is_group = False

    available: dict[str, object] = {
        "left_canceler": is_left_canceler,
        "right_canceler": is_right_canceler,
        "canceler": is_canceler,
        "associative": lambda fn: is_associative_fn(fn),
        "strongly_associative": lambda fn: is_associative_fn(fn, strong=True),
        "idempotent": is_idempotent_fn,
    }
    if base_is_group:
        available.update({
            "left_decomposer": lambda fn: is_left_decomposer(fn),
            "right_decomposer": lambda fn: is_right_decomposer(fn),
            "decomposer": lambda fn: is_decomposer(fn),
            "left_strong_decomposer": lambda fn: is_left_decomposer(fn, strong=True),
            "right_strong_decomposer": lambda fn: is_right_decomposer(fn, strong=True),
            "strong_decomposer": lambda fn: is_decomposer(fn, strong=True),
        })
    if e is not None:
        available.update({
            "left_periodic": lambda fn: is_periodic(fn, e, "left"),
            "right_periodic": lambda fn: is_periodic(fn, e, "right"),
            "periodic": lambda fn: is_periodic(fn, e, "both"),
        })

    wanted = tuple(available) if include is None else tuple(include)
    out: dict[str, Check] = {}
    for name in wanted:
        if name not in available:
            if name in GROUP_ONLY_PREDICATES and not base_is_group:
                raise PreconditionError(f"predicate {name} needs a group base")
            raise ValueError(f"unknown or unavailable predicate {name!r}")
        out[name] = available[name](f)
    return out


def f_multiplication(f: EndoFunction) -> FiniteMagma:
    """The derived table x *_f y = f(x * y) over the same carrier.

    Associativity of the result is not assumed here; it holds exactly when
    f is associative, which callers check where they rely on it.
    """
    t = f.base.table
    m = f.mapping
    rows = tuple(tuple(m[v] for v in row) for row in t)
    return FiniteMagma(f.base.names, rows)


@dataclass(frozen=True)
class HalfIdenticalReport:
    """Outcome of the two functional equations tying f to a joiner element."""

    compat: Check            # f(e*x*y) == f(e*f(x*y))
    collapse: Check          # both also equal f(x*y)
    surjective_base: bool
    collapse_iff_periodic_idempotent: bool | None


def functional_eq_checks(f: EndoFunction, e: int) -> HalfIdenticalReport:
    """Exhaustively check the joiner-compatibility equations of f at e.

    On a surjective base the collapse equation is equivalent to f being left
    e-periodic and idempotent; the report carries whether that equivalence
    held (None when the base is not surjective).
    """
    t = f.base.table
    m = f.mapping
    n = f.n

    compat = _scan_pairs(n, lambda x, y: m[t[t[e][x]][y]] == m[t[e][m[t[x][y]]]])

    def collapse_law(x, y):
        xy = m[t[x][y]]
        return m[t[t[e][x]][y]] == m[t[e][xy]] == xy

    collapse = _scan_pairs(n, collapse_law)

    products = {t[x][y] for x in range(n) for y in range(n)}
    surjective = len(products) == n
    equiv = None
    if surjective:
        periodic_idem = is_periodic(f, e, "left").ok and is_idempotent_fn(f).ok
        equiv = collapse.ok == periodic_idem
    return HalfIdenticalReport(compat, collapse, surjective, equiv)


def all_endofunctions(base) -> list[EndoFunction]:
    """Every self-map of the carrier, in lexicographic mapping order."""
    magma = _magma_of(base)
    n = magma.n
    return [EndoFunction(magma, mapping) for mapping in product(range(n), repeat=n)]
