"""Direct factorizations, normal subgroups, and projection decompositions."""

from joinalg import (
    EndoFunction,
    SubsetRef,
    all_subgroups,
    conjugates,
    cyclic,
    decomposers_from_factorizations,
    is_decomposer,
    is_direct,
    klein_group,
    klein_joined,
    normal_subgroups,
    pick_left_joined,
    projection_decomposition_check,
    transversals,
    zn_min_joined,
)
from joinalg.gallery import KLEIN_FOLD


def test_is_direct_klein_example():
    k = klein_group()
    ok, fact = is_direct(k, k.semigroup.magma.subset([0, 2]), k.semigroup.magma.subset([0, 1]))
    assert ok
    # the right projection of this factorization is exactly the fold map
    assert fact.p_omega.mapping == KLEIN_FOLD
    for x in k.elements():
        assert k.op(fact.p_delta(x), fact.p_omega(x)) == x


def test_is_direct_trivial_and_failing():
    for g in (cyclic(4), klein_group()):
        ok, fact = is_direct(g, g.semigroup.magma.subset([g.identity]), SubsetRef.full(g.n))
        assert ok and fact.p_omega.mapping == tuple(range(g.n))
    z4 = cyclic(4)
    ok, fact = is_direct(z4, z4.semigroup.magma.subset([0, 2]), z4.semigroup.magma.subset([0, 2]))
    assert not ok and fact is None


def test_subgroup_enumeration_counts():
    assert len(all_subgroups(cyclic(3))) == 2
    assert len(all_subgroups(cyclic(4))) == 3
    assert len(all_subgroups(klein_group())) == 5
    # abelian groups: every subgroup is normal
    assert len(normal_subgroups(klein_group())) == 5
    assert len(normal_subgroups(cyclic(4))) == 3
    assert len(normal_subgroups(cyclic(3))) == 2


def test_transversals_count_and_directness():
    g = klein_group()
    h = g.semigroup.magma.subset([0, 2])
    ts = list(transversals(g, h))
    assert len(ts) == 4  # two cosets, two picks each
    for omega in ts:
        ok, _ = is_direct(g, h, omega)
        assert ok


def test_projection_check_on_gallery():
    rep = projection_decomposition_check(klein_joined())
    assert rep.delta.indices() == (0, 2)
    assert rep.omega.indices() == (0, 1)
    assert rep.all_hold

    rep5 = projection_decomposition_check(zn_min_joined(5))
    assert rep5.delta == SubsetRef.full(5)
    assert rep5.omega.indices() == (0,)
    assert rep5.all_hold

    # the constant joiner of the pick-left structure projects onto {e}
    repl = projection_decomposition_check(pick_left_joined(klein_group()))
    assert repl.delta == SubsetRef.full(4)
    assert repl.omega.indices() == (0,)
    assert repl.all_hold


def test_factorization_projection_invariants():
    for g in (cyclic(4), klein_group()):
        for mapping, (delta, omega) in decomposers_from_factorizations(g).items():
            f = EndoFunction.of(g, mapping)
            # right projection is idempotent with image omega
            assert tuple(sorted(set(mapping))) == omega.indices()
            assert all(mapping[mapping[x]] == mapping[x] for x in g.elements())
            # the left coordinate is x * inv(right coordinate)
            up = conjugates(f).upper
            assert all(up(x) in delta for x in g.elements())


def test_strong_decomposers_are_exactly_factorization_projections():
    for g, expected in ((klein_group(), 17), (cyclic(4), 9), (cyclic(3), 4)):
        from joinalg import all_endofunctions

        via_pairs = set(decomposers_from_factorizations(g))
        via_predicate = {
            f.mapping for f in all_endofunctions(g) if is_decomposer(f, strong=True).ok
        }
        assert via_pairs == via_predicate
        assert len(via_pairs) == expected
