"""Core table types, subset algebra, and the associativity check."""

import random
from itertools import product

import pytest

from joinalg import (
    FiniteGroup,
    FiniteMagma,
    FiniteSemigroup,
    NotAssociativeError,
    SubsetRef,
    check_associative,
    is_surjective,
    klein_group,
    klein_grouplike,
    min_semigroup,
    subset_product,
)


def oracle_associative(table):
    """Independent nested-loop oracle for the vectorized check."""
    n = len(table)
    for x, y, z in product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return False, (x, y, z)
    return True, None


def first_non_associative_two_table():
    """Brute-force scan of all 16 two-element tables in lex order."""
    for flat in product(range(2), repeat=4):
        table = (flat[:2], flat[2:])
        ok, witness = oracle_associative(table)
        if not ok:
            return table, witness
    raise AssertionError("no non-associative table found")


def test_associativity_of_groups():
    ok, witness = check_associative(klein_group().semigroup.magma)
    assert ok and witness is None


def test_omega_style_table_is_associative():
    rows = [[0 if 0 in (i, j) else i for j in range(3)] for i in range(3)]
    ok, _ = check_associative(FiniteMagma.from_rows(rows))
    assert ok


def test_non_associative_table_found_by_scan():
    table, witness = first_non_associative_two_table()
    # lex-first bad table: 0*0=0, 0*1=0, 1*0=1, 1*1=0
    assert table == ((0, 0), (1, 0))
    assert witness == (1, 0, 1)
    ok, got = check_associative(FiniteMagma.from_rows(table))
    assert not ok and got == witness


def test_spec_style_two_element_table_witness():
    # 0*0=1 and every other product 0; the first violating triple in
    # row-major order is (0, 0, 1), not the diagonal triple
    table = ((1, 0), (0, 0))
    ok, witness = check_associative(FiniteMagma.from_rows(table))
    assert not ok
    assert witness == (0, 0, 1)
    assert oracle_associative(table) == (False, (0, 0, 1))


def test_vectorized_check_matches_oracle_on_random_tables():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(200):
            rows = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
            m = FiniteMagma.from_rows(rows)
            assert check_associative(m) == oracle_associative(m.table)


def test_semigroup_promotion_refused_with_witness():
    with pytest.raises(NotAssociativeError) as err:
        FiniteSemigroup.from_rows(((0, 0), (1, 0)))
    assert err.value.triple == (1, 0, 1)


def test_group_construction_finds_identity_and_inverses():
    g = klein_group()
    assert g.identity == 0
    assert g.inverse == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        FiniteGroup(min_semigroup(3))


def test_magma_validation():
    with pytest.raises(ValueError):
        FiniteMagma(("a", "a"), ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        FiniteMagma(("a", "b"), ((0, 2), (0, 0)))
    with pytest.raises(ValueError):
        FiniteMagma((), ())


def test_subset_ref_algebra():
    s = SubsetRef.of([0, 2, 3], 5)
    assert list(s) == [0, 2, 3]
    assert len(s) == 3
    assert 2 in s and 1 not in s
    assert (s & SubsetRef.of([2, 4], 5)).indices() == (2,)
    assert (s | SubsetRef.of([1], 5)).indices() == (0, 1, 2, 3)
    assert s <= SubsetRef.full(5)
    assert not SubsetRef.full(5) <= s
    with pytest.raises(ValueError):
        SubsetRef.of([5], 5)


def test_subset_product_examples():
    k = klein_group().semigroup
    a = k.magma.subset([0, 2])   # {e, eta}
    b = k.magma.subset([0, 1])   # {e, a}
    assert subset_product(k, a, b) == SubsetRef.full(4)

    m = min_semigroup(5)
    got = subset_product(m, m.magma.subset([2, 3]), m.magma.subset([1, 4]))
    assert got.indices() == (1, 2, 3)

    assert subset_product(m, SubsetRef.empty(5), SubsetRef.full(5)) == SubsetRef.empty(5)


def test_subset_product_monotone():
    rng = random.Random(11)
    m = min_semigroup(6)
    for _ in range(200):
        a = SubsetRef.of([i for i in range(6) if rng.random() < 0.4], 6)
        bigger = a | SubsetRef.of([rng.randrange(6)], 6)
        b = SubsetRef.of([i for i in range(6) if rng.random() < 0.4], 6)
        assert subset_product(m, a, b) <= subset_product(m, bigger, b)


def test_surjectivity():
    assert is_surjective(klein_group().semigroup)
    assert is_surjective(min_semigroup(4))
    # the folded Klein table covers only the two-element image
    kg = klein_grouplike()
    assert not is_surjective(kg)
    full = SubsetRef.full(4)
    assert subset_product(kg, full, full).indices() == (0, 1)
