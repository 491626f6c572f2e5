"""Enumeration engine versus independent full-scan oracles.

The oracles below re-implement associativity, the joiner laws, and the
strong-decomposer predicate from scratch on raw tuples, so the pruned
backtracking search and the function-generated route are checked against
straight-line brute force.
"""

from itertools import product

import pytest

from joinalg import (
    EnumerationQuery,
    PreconditionError,
    SizeLimitError,
    cyclic,
    enumerate_functions,
    enumerate_odot,
    identical_characterization,
    identical_consequences,
    identical_count_matches_functions,
    klein_group,
)
from joinalg.enumeration import enumerate_odot_generated, enumerate_odot_raw


# ----------------------------------------------------------------- oracles

def oracle_assoc(t):
    n = len(t)
    return all(
        t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n)
    )


def oracle_law(dot, odot, e, mode):
    n = len(dot)
    pairs = [(x, y) for x in range(n) for y in range(n)]
    left = all(odot[e][dot[x][y]] == odot[e][odot[x][y]] for x, y in pairs)
    right = all(odot[dot[x][y]][e] == odot[odot[x][y]][e] for x, y in pairs)
    ident = all(
        odot[e][dot[x][y]] == odot[x][y] == odot[dot[x][y]][e] for x, y in pairs
    )
    if mode == "left":
        return left
    if mode == "right":
        return right
    if mode == "two-sided":
        return left and right
    if mode == "identical":
        return left and right and ident
    raise ValueError(mode)


def oracle_enumerate(dot, e, mode):
    n = len(dot)
    out = []
    for flat in product(range(n), repeat=n * n):
        odot = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        if oracle_assoc(odot) and oracle_law(dot, odot, e, mode):
            out.append(odot)
    return out


def oracle_strong_decomposers(g):
    """Strong decomposers re-derived from the bare table: find inverses by
    scanning, build both conjugates, check both dropped-argument laws."""
    n, t, e = g.n, g.table, g.identity
    inv = [next(y for y in range(n) if t[x][y] == e) for x in range(n)]
    found = []
    for m in product(range(n), repeat=n):
        upper = [t[x][inv[m[x]]] for x in range(n)]
        lower = [t[inv[m[x]]][x] for x in range(n)]
        if all(m[t[upper[x]][y]] == m[y] for x in range(n) for y in range(n)) and all(
            m[t[x][lower[y]]] == m[x] for x in range(n) for y in range(n)
        ):
            found.append(m)
    return found


# ------------------------------------------------------------------- tests

@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("mode", ["left", "right", "two-sided", "identical"])
def test_raw_search_matches_full_scan_oracle(n, mode):
    g = cyclic(n)
    got = enumerate_odot_raw(EnumerationQuery(g, 0, mode, "raw"))
    assert got == sorted(oracle_enumerate(g.table, 0, mode))


def test_identical_counts_frozen():
    assert len(enumerate_odot(EnumerationQuery(cyclic(1), 0, "identical", "both"))) == 1
    z2 = enumerate_odot(EnumerationQuery(cyclic(2), 0, "identical", "both"))
    # exactly: addition and the two constant tables
    assert z2 == [((0, 0), (0, 0)), ((0, 1), (1, 0)), ((1, 1), (1, 1))]
    assert len(enumerate_odot(EnumerationQuery(cyclic(3), 0, "identical", "both"))) == 4


def test_klein_identical_seventeen_by_function_oracle():
    gk = klein_group()
    oracle = oracle_strong_decomposers(gk)
    assert len(oracle) == 17
    gen = enumerate_odot_generated(EnumerationQuery(gk, 0, "identical", "via-f"))
    assert len(gen) == 17
    # each oracle function derives a distinct enumerated table
    derived = {tuple(tuple(m[v] for v in row) for row in gk.table) for m in oracle}
    assert sorted(derived) == gen


def test_cyclic4_identical_count_by_function_oracle():
    g4 = cyclic(4)
    assert len(oracle_strong_decomposers(g4)) == 9
    gen = enumerate_odot_generated(EnumerationQuery(g4, 0, "identical", "via-f"))
    assert len(gen) == 9


def test_mode_containment():
    for n in (2, 3):
        g = cyclic(n)
        sets = {
            mode: set(enumerate_odot_raw(EnumerationQuery(g, 0, mode, "raw")))
            for mode in ("left", "right", "two-sided", "identical", "josemig")
        }
        assert sets["identical"] <= sets["two-sided"]
        assert sets["two-sided"] <= sets["left"]
        assert sets["two-sided"] <= sets["right"]
        assert sets["two-sided"] == sets["left"] & sets["right"]


def test_parallel_equals_serial():
    g = cyclic(3)
    serial = enumerate_odot_raw(EnumerationQuery(g, 0, "left", "raw", workers=1))
    parallel = enumerate_odot_raw(EnumerationQuery(g, 0, "left", "raw", workers=4))
    assert serial == parallel


def test_size_and_compatibility_errors():
    g4 = cyclic(4)
    with pytest.raises(SizeLimitError):
        enumerate_odot_raw(EnumerationQuery(g4, 0, "identical", "raw"))
    with pytest.raises(PreconditionError):
        enumerate_odot(EnumerationQuery(cyclic(3), 0, "left", "via-f"))
    with pytest.raises(ValueError):
        EnumerationQuery(cyclic(3), 0, "sideways")
    with pytest.raises(SizeLimitError):
        enumerate_functions(cyclic(6), ["idempotent"], limit=5)


def test_identical_characterization_small():
    rep1 = identical_characterization(cyclic(1))
    assert rep1.size == 1 and rep1.sets_equal and not rep1.raw_skipped
    rep3 = identical_characterization(cyclic(3))
    assert rep3.size == 4 and rep3.sets_equal and rep3.derivation_unique
    repk = identical_characterization(klein_group())
    assert repk.raw_skipped and repk.size == 17 and repk.sets_equal


def test_identical_consequences_all_hold():
    for g in (cyclic(3), cyclic(4), klein_group()):
        tables = enumerate_odot_generated(EnumerationQuery(g, g.identity, "identical", "via-f"))
        for odot in tables:
            rep = identical_consequences(g, odot)
            assert rep.all_hold, (g.n, odot)


def test_operation_function_bijection_counts():
    for g, expected in ((cyclic(2), 3), (cyclic(3), 4), (cyclic(4), 9), (klein_group(), 17)):
        ok, n_ops, n_fns = identical_count_matches_functions(g)
        assert ok and n_ops == expected and n_fns == expected


def test_min_table_is_no_derived_multiplication():
    # no function over the additive table yields the minimum table
    n = 5
    add = cyclic(n).table
    target = tuple(tuple(min(x, y) for y in range(n)) for x in range(n))
    hits = [
        m for m in product(range(n), repeat=n)
        if all(m[add[x][y]] == target[x][y] for x in range(n) for y in range(n))
    ]
    assert hits == []


def test_enumerate_functions_flags():
    g3 = cyclic(3)
    idem = enumerate_functions(g3, ["idempotent"])
    assert all(all(f(f(x)) == f(x) for x in range(3)) for f in idem)
    strong = enumerate_functions(g3, ["strong_decomposer"])
    assert len(strong) == 4
    everything = enumerate_functions(g3, [])
    assert len(everything) == 27


@pytest.mark.longrun
def test_order_four_raw_scan_agrees_with_generated():
    g4 = cyclic(4)
    raw = enumerate_odot_raw(EnumerationQuery(g4, 0, "identical", "raw", raw_limit=4))
    gen = enumerate_odot_generated(EnumerationQuery(g4, 0, "identical", "via-f"))
    assert raw == gen

    gk = klein_group()
    raw_k = enumerate_odot_raw(EnumerationQuery(gk, 0, "identical", "raw", raw_limit=4))
    gen_k = enumerate_odot_generated(EnumerationQuery(gk, 0, "identical", "via-f"))
    assert raw_k == gen_k
