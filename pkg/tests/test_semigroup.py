"""Element algebra: multiplication, inverses, order, Green relations, congruence."""

import pytest

from bicfam.family import close
from bicfam.natset import OMEGA, make_finite, make_tail
from bicfam.semigroup import (GREEN_RELATIONS, ZERO, SemigroupCtx, Triple,
                              format_element, inverse, is_idempotent,
                              parse_element, sigma_image)

POINT = make_finite([0])


@pytest.fixture(scope="module")
def bicyclic():
    return SemigroupCtx(close([OMEGA]))


@pytest.fixture(scope="module")
def point():
    return SemigroupCtx(close([POINT]))


@pytest.fixture(scope="module")
def tails():
    return SemigroupCtx(close([make_tail(2), OMEGA]))


def test_multiply_examples(bicyclic, point):
    a = bicyclic.element(1, 3, OMEGA)
    b = bicyclic.element(2, 2, OMEGA)
    assert bicyclic.multiply(a, b) == bicyclic.element(1, 3, OMEGA)
    x = point.element(0, 1, POINT)
    assert point.multiply(x, point.element(1, 2, POINT)) == point.element(0, 2, POINT)
    assert point.multiply(x, point.element(0, 2, POINT)) == ZERO
    assert point.multiply(ZERO, x) == ZERO
    assert point.multiply(x, ZERO) == ZERO


def test_zero_free_products_never_vanish(tails):
    for a in tails.truncate(3):
        for b in tails.truncate(3):
            assert tails.multiply(a, b) != ZERO


def test_inverse(bicyclic):
    e = bicyclic.element(2, 5, OMEGA)
    assert inverse(e) == bicyclic.element(5, 2, OMEGA)
    assert inverse(bicyclic.element(3, 3, OMEGA)) == bicyclic.element(3, 3, OMEGA)
    assert inverse(ZERO) == ZERO


def test_inverse_axioms_on_window(point, tails):
    for ctx in (point, tails):
        for x in ctx.truncate(3):
            y = inverse(x)
            assert ctx.multiply(ctx.multiply(x, y), x) == x
            assert ctx.multiply(ctx.multiply(y, x), y) == y


def test_is_idempotent(bicyclic):
    assert is_idempotent(bicyclic.element(4, 4, OMEGA))
    assert not is_idempotent(bicyclic.element(1, 2, OMEGA))
    assert is_idempotent(ZERO)
    for x in bicyclic.truncate(3):
        assert is_idempotent(x) == (bicyclic.multiply(x, x) == x)


def test_idempotents_commute(point, tails):
    for ctx in (point, tails):
        idems = [x for x in ctx.truncate(3) if is_idempotent(x)]
        for e in idems:
            for f in idems:
                assert ctx.multiply(e, f) == ctx.multiply(f, e)


def test_natural_leq_examples(tails):
    a = tails.element(3, 4, make_tail(2))
    b = tails.element(1, 2, make_tail(1))
    assert tails.natural_leq(a, b)
    assert tails.natural_leq(a, a)
    c = tails.element(1, 2, OMEGA)
    d = tails.element(2, 1, OMEGA)
    assert not tails.natural_leq(c, d)


def test_natural_leq_vs_definition(point, tails):
    for ctx in (point, tails):
        window = ctx.truncate(3)
        for a in window:
            for b in window:
                via_product = ctx.multiply(b, ctx.multiply(inverse(a), a)) == a
                assert ctx.natural_leq(a, b) == via_product


def test_natural_leq_antisymmetric(tails):
    window = tails.truncate(3)
    for a in window:
        for b in window:
            if tails.natural_leq(a, b) and tails.natural_leq(b, a):
                assert a == b


def test_zero_is_minimum(point):
    for x in point.truncate(2):
        assert point.natural_leq(ZERO, x)
        if x != ZERO:
            assert not point.natural_leq(x, ZERO)


def test_green_examples(bicyclic, tails):
    assert bicyclic.green("R", bicyclic.element(2, 7, OMEGA),
                          bicyclic.element(2, 3, OMEGA))
    assert bicyclic.green("D", bicyclic.element(0, 0, OMEGA),
                          bicyclic.element(5, 1, OMEGA))
    w00 = tails.element(0, 0, OMEGA)
    t00 = tails.element(0, 0, make_tail(2))
    assert not tails.green("D", w00, t00)
    assert tails.green("J", w00, t00)  # J is strictly coarser than D here
    assert tails.green("H", w00, w00)
    assert not tails.green("H", w00, tails.element(0, 1, OMEGA))


def test_green_zero_is_isolated(point):
    x = point.element(0, 0, POINT)
    for rel in GREEN_RELATIONS:
        assert point.green(rel, ZERO, ZERO)
        assert not point.green(rel, ZERO, x)
        assert not point.green(rel, x, ZERO)
    with pytest.raises(ValueError):
        point.green("X", x, x)


def test_sigma(bicyclic, tails, point):
    a = tails.element(3, 1, OMEGA)
    b = tails.element(5, 3, make_tail(2))
    assert sigma_image(a) == 2 and sigma_image(b) == 2
    assert tails.sigma_equiv(a, b)
    assert not tails.sigma_equiv(tails.element(0, 1, OMEGA),
                                 tails.element(1, 0, OMEGA))
    with pytest.raises(ValueError):
        sigma_image(ZERO)
    # with a zero present the quotient group collapses
    assert point.sigma_equiv(ZERO, point.element(0, 1, POINT))
    # additivity across products
    window = tails.truncate(3)
    for a in window:
        for b in window:
            p = tails.multiply(a, b)
            assert sigma_image(p) == sigma_image(a) + sigma_image(b)


def test_truncate_counts(bicyclic, point, tails):
    assert len(bicyclic.truncate(1)) == 4
    assert len(point.truncate(1)) == 5
    assert len(tails.truncate(0)) == 3
    window = point.truncate(2)
    assert window[0] == ZERO
    assert len(set(window)) == len(window)
    assert window == point.truncate(2)


def test_element_construction(point, bicyclic):
    assert point.element(0, 0, make_finite([])) == ZERO
    with pytest.raises(ValueError):
        bicyclic.element(0, 0, make_finite([]))
    with pytest.raises(ValueError):
        bicyclic.element(0, 0, make_tail(1))
    with pytest.raises(ValueError):
        bicyclic.element(-1, 0, OMEGA)
    point.check_element(ZERO)
    with pytest.raises(ValueError):
        bicyclic.check_element(ZERO)
    with pytest.raises(ValueError):
        bicyclic.check_element(Triple(0, 0, 7))
    with pytest.raises(ValueError):
        point.check_element(Triple(0, 0, 0))  # member 0 is the empty set


def test_element_text_round_trip(point, tails):
    for ctx in (point, tails):
        for e in ctx.truncate(2):
            assert parse_element(ctx, format_element(ctx, e)) == e
    assert format_element(point, ZERO) == "0"
    assert parse_element(tails, " ( 1 , 2 , [2) ) ") == tails.element(1, 2, make_tail(2))
    with pytest.raises(ValueError):
        parse_element(tails, "0")  # no zero in a zero-free family
    with pytest.raises(ValueError):
        parse_element(tails, "(0,0,{9})")  # set outside the family
