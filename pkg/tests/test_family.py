"""Closure computation and closed-family validation."""

import pytest

from bicfam.family import (OmegaFamily, close, family_union, format_family,
                           from_members, is_closed, parse_family)
from bicfam.natset import (EMPTY, OMEGA, make_finite, make_progression,
                           make_tail, parse_set)

GENERATOR_LISTS = [
    [OMEGA],
    [make_finite([0])],
    [make_progression(2, 3)],
    [make_tail(2), OMEGA],
    [make_progression(0, 2), make_progression(1, 2)],
    [make_finite([0, 1]), make_finite([0])],
    [parse_set("{0,1}|[5)")],
]


def test_close_examples():
    assert close([OMEGA]).members == (OMEGA,)
    assert close([make_finite([0])]).members == (EMPTY, make_finite([0]))
    assert close([make_progression(2, 3)]).members == (EMPTY, make_progression(2, 3))
    assert close([make_tail(2), OMEGA]).members == (OMEGA, make_tail(1), make_tail(2))


def test_close_contains_generators_and_is_idempotent():
    for gens in GENERATOR_LISTS:
        fam = close(gens)
        for g in gens:
            assert g in fam
        assert close(fam.members) == fam
        assert is_closed(fam.members)


def test_close_rejects_empty_input():
    with pytest.raises(ValueError):
        close([])


def test_members_live_in_the_generated_intersection_lattice():
    # every closure member is an intersection of generator down-shifts
    for gens in GENERATOR_LISTS:
        pool = set()
        for g in gens:
            pool.update(t for _, t in g.down_shifts())
        grown = True
        while grown:
            grown = False
            for a in list(pool):
                for b in list(pool):
                    c = a.intersect(b)
                    if c not in pool:
                        pool.add(c)
                        grown = True
        assert set(close(gens).members) <= pool


def test_is_closed():
    assert is_closed([OMEGA])
    assert is_closed([EMPTY])
    assert is_closed([make_tail(2)])          # meets with shifts fall back in
    assert not is_closed([make_finite([0])])  # the empty meet is missing
    assert not is_closed([make_progression(2, 3)])


def test_has_empty_flips_when_closure_adds_it():
    fam = close([make_finite([0])])
    assert fam.has_empty
    assert not close([OMEGA]).has_empty


def test_family_union():
    assert family_union(close([make_tail(2), OMEGA])) == OMEGA
    assert family_union(close([make_finite([0])])) == make_finite([0])
    assert family_union(close([EMPTY])) == EMPTY


def test_validation_of_direct_construction():
    with pytest.raises(ValueError):
        OmegaFamily(())
    with pytest.raises(ValueError):
        OmegaFamily((make_finite([0]),))  # not closed
    with pytest.raises(ValueError):
        OmegaFamily((make_finite([0]), EMPTY))  # wrong order
    fam = from_members([EMPTY, make_finite([0])])
    assert fam.members == (EMPTY, make_finite([0]))


def test_member_order_is_deterministic():
    a = close([make_progression(0, 2), make_progression(1, 2)])
    b = close([make_progression(1, 2), make_progression(0, 2)])
    assert a == b
    assert a.members[0] == EMPTY


def test_parse_family_forms():
    bare = parse_family("[2),w")
    assert bare == [make_tail(2), OMEGA]
    wrapped = parse_family("family{ {0,1}, {0} }")
    assert wrapped == [make_finite([0, 1]), make_finite([0])]
    assert parse_family("w") == [OMEGA]


def test_format_family_round_trip():
    for gens in GENERATOR_LISTS:
        fam = close(gens)
        again = from_members(parse_family(format_family(fam)))
        assert again == fam
