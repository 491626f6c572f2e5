"""Gallery builders produce exactly the advertised structures."""

from fractions import Fraction

import pytest

from joinalg import (
    FiniteGroup,
    FiniteSemigroup,
    JoinedStructure,
    b_addition,
    b_joined,
    check_associative,
    cyclic,
    fractional_mult_sample,
    gallery,
    klein_group,
    klein_grouplike,
    klein_joined,
    min_semigroup,
    omega_grouplike,
    verify_join_law,
    zn_min_joined,
)
from joinalg.gallery import KLEIN_FOLD


def test_klein_grouplike_table_is_fold_of_group_table():
    k = klein_group()
    expected = tuple(tuple(KLEIN_FOLD[v] for v in row) for row in k.table)
    assert klein_grouplike().table == expected
    # spot values: a.a = e, a.eta = a, eta.alpha = a, alpha.alpha = e
    t = klein_grouplike().table
    assert t[1][1] == 0 and t[1][2] == 1 and t[2][3] == 1 and t[3][3] == 0
    assert t == ((0, 1, 0, 1), (1, 0, 1, 0), (0, 1, 0, 1), (1, 0, 1, 0))


def test_every_finite_builder_is_associative():
    builders = [
        cyclic(1), cyclic(4), klein_group(), klein_grouplike(),
        min_semigroup(5), omega_grouplike(4),
    ]
    for b in builders:
        magma = b.magma if isinstance(b, FiniteSemigroup) else b.semigroup.magma
        ok, _ = check_associative(magma)
        assert ok
    for j in (klein_joined(), zn_min_joined(5)):
        assert isinstance(j, JoinedStructure)  # constructor verified both tables


def test_group_builders_satisfy_group_axioms_exhaustively():
    for g in (cyclic(1), cyclic(2), cyclic(5), klein_group()):
        assert isinstance(g, FiniteGroup)
        e = g.identity
        for x in g.elements():
            assert g.op(e, x) == x == g.op(x, e)
            assert g.op(x, g.inv(x)) == e == g.op(g.inv(x), x)


def test_zn_min_joined_passes_two_sided_law():
    for n in (2, 5, 7):
        law = verify_join_law(zn_min_joined(n), "both", "plain")
        assert law.holds


def test_builder_parameter_errors():
    with pytest.raises(ValueError):
        cyclic(0)
    with pytest.raises(ValueError):
        min_semigroup(0)
    with pytest.raises(ValueError):
        b_addition(0)
    with pytest.raises(ValueError):
        fractional_mult_sample(["3/2"])


def test_gallery_dispatcher():
    assert gallery("cyclic", 3).n == 3
    assert gallery("b_addition", "3/2").apply(Fraction(1), Fraction(1)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        gallery("nope")


def test_b_addition_small_cases():
    one = b_addition(1)
    assert one.apply(Fraction(1, 2), Fraction(7, 10)) == Fraction(1, 5)
    two = b_joined(2)
    assert two.joiner_of(Fraction(3, 2) + Fraction(7, 10)) == Fraction(1, 5)
