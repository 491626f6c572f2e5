"""Joiner laws, image subgroup, and the equivalence batteries."""

import pytest

from joinalg import (
    JoinedStructure,
    PreconditionError,
    SubsetRef,
    classify,
    cyclic,
    e_odot_G,
    grouplike_criterion_battery,
    image_subgroup_battery,
    is_josemig,
    joiner_identity_checks,
    klein_group,
    klein_joined,
    pick_left_joined,
    pick_right_joined,
    unital_image_battery,
    verify_join_law,
    zn_min_joined,
)
from joinalg.joined import chained_join_law_holds


def test_join_law_examples():
    kj = klein_joined()
    assert verify_join_law(kj, "both", "identical").holds

    z5 = zn_min_joined(5)
    assert verify_join_law(z5, "both", "plain").holds
    law = verify_join_law(z5, "both", "identical")
    assert not law.holds
    # first violating pair in row-major order: 0 (.) (1+1) = 0 != 1 = min(1,1)
    assert law.counterexample == (1, 1)

    pl = pick_left_joined(klein_group())
    assert verify_join_law(pl, "left", "plain").holds
    right = verify_join_law(pl, "right", "plain")
    assert not right.holds and right.counterexample is not None


def test_joined_structure_validation():
    g = klein_group()
    with pytest.raises(ValueError):
        # joiner must be the group identity when the first table is a group
        JoinedStructure(g.names, g.table, klein_joined().odot, 1)
    with pytest.raises(Exception):
        JoinedStructure(g.names, g.table, ((0, 0), (1, 0)), 0)


def test_josemig_examples():
    assert is_josemig(klein_joined(), "both") == (True, None)
    ok, bad_e = is_josemig(pick_left_joined(klein_group()), "both")
    assert not ok and bad_e is not None
    assert is_josemig(pick_left_joined(klein_group()), "left") == (True, None)
    assert is_josemig(pick_right_joined(klein_group()), "right") == (True, None)


def test_image_subgroup_examples():
    img = e_odot_G(klein_joined())
    assert img.image.indices() == (0, 1)
    assert img.is_subgroup and img.identity == 0
    assert img.inverse_rule_holds

    img5 = e_odot_G(zn_min_joined(5))
    assert img5.image.indices() == (0,)
    assert img5.is_subgroup and img5.inverse_rule_holds

    with pytest.raises(PreconditionError):
        e_odot_G(JoinedStructure(("0", "1"), ((0, 0), (0, 1)), ((0, 0), (0, 0)), 0))


def test_image_subgroup_battery_gallery():
    for j, expected in ((klein_joined(), True), (zn_min_joined(7), True)):
        bat = image_subgroup_battery(j)
        assert bat.consistent and bat.required_ok
        assert bat.common_value is expected


def test_image_subgroup_battery_one_sided():
    bat = image_subgroup_battery(pick_left_joined(klein_group()))
    assert bat.consistent and bat.required_ok
    assert bat.common_value is False
    # second operation of the one-sided example is not a homogroup
    assert not classify(pick_left_joined(klein_group()).odot_semigroup()).is_homogroup


def test_grouplike_criterion_battery():
    assert grouplike_criterion_battery(klein_joined()).legs == {
        "grouplike": True, "square_acts_as_identity_on_zt": True,
        "zt_is_singleton_square": True,
    }
    z5 = grouplike_criterion_battery(zn_min_joined(5))
    assert z5.consistent and z5.common_value is False
    triv = grouplike_criterion_battery(zn_min_joined(1))
    assert triv.consistent and triv.common_value is True


def test_unital_image_battery():
    for j in (klein_joined(), zn_min_joined(5)):
        bat = unital_image_battery(j)
        assert bat.consistent and bat.required_ok and bat.common_value is True
    one_sided = unital_image_battery(pick_left_joined(klein_group()))
    assert one_sided.consistent and one_sided.required_ok
    assert one_sided.common_value is False


def test_joiner_identity_checks_gallery():
    for j in (klein_joined(), zn_min_joined(5)):
        rep = joiner_identity_checks(j)
        assert rep.all_hold, rep.checks
        assert rep.witnesses["right_periodic"] and rep.witnesses["left_periodic"]


def test_chained_join_law():
    for j in (klein_joined(), zn_min_joined(4)):
        for length in (1, 2, 3, 4):
            ok, witness = chained_join_law_holds(j, length)
            assert ok and witness is None


def test_second_semigroup_never_e_unital_on_law_side_when_distinct():
    # in a nontrivial structure satisfying the left law, the joiner is not a
    # left identity for the second operation; mirrored for the right law
    for j in (klein_joined(), zn_min_joined(3), pick_left_joined(cyclic(3))):
        if j.odot == j.dot:
            continue
        assert verify_join_law(j, "left", "plain").holds
        J = j.odot[j.e]
        assert any(J[x] != x for x in range(j.n))
    jr = pick_right_joined(cyclic(3))
    assert verify_join_law(jr, "right", "plain").holds
    Jr = tuple(row[jr.e] for row in jr.odot)
    assert any(Jr[x] != x for x in range(jr.n))
