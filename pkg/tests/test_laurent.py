import pytest
from hypothesis import given, strategies as st

from knotoids.laurent import (
    LaurentPoly,
    QuotientLaurent,
    lp_add,
    lp_canonical,
    lp_compare,
    lp_eval_one,
    lp_neg,
    lp_reduce_mod,
    lp_subst_inv,
    parse_laurent,
)

V = LaurentPoly.monomial


def P(text):
    return parse_laurent(text)


polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPoly)


def test_zero_coefficients_dropped():
    p = LaurentPoly([(1, 2), (1, -2), (0, 3)])
    assert p.pairs == ((0, 3),)
    assert LaurentPoly({4: 0}).is_zero()


def test_add_examples():
    assert lp_add(P("v - 1"), P("1")) == V(1)
    assert lp_add(LaurentPoly(), P("v^-1 - v")) == P("v^-1 - v")
    assert lp_add(P("-v + v^-1"), P("-v + v^-1")) == LaurentPoly({-1: 2, 1: -2})


def test_neg_examples():
    assert lp_neg(LaurentPoly()).is_zero()
    assert lp_neg(LaurentPoly({-1: 1, 1: -1})) == LaurentPoly({1: 1, -1: -1})


def test_reduce_examples():
    r = lp_reduce_mod(LaurentPoly({3: 1, -1: 1}), 2)
    assert r == QuotientLaurent(2, LaurentPoly({1: 2}))
    p = LaurentPoly({-1: 1, 1: -1})
    assert lp_reduce_mod(p, 0).rep == p
    assert lp_reduce_mod(LaurentPoly({-1: 1, 1: -1, 0: 3}), 1).rep == LaurentPoly.constant(3)


def test_reduce_rejects_negative_modulus():
    with pytest.raises(ValueError):
        V(1).reduce_mod(-1)


def test_quotient_checks_representative():
    with pytest.raises(ValueError):
        QuotientLaurent(2, V(2))
    QuotientLaurent(0, V(-7))


def test_subst_inv_and_eval_one():
    assert lp_subst_inv(LaurentPoly({-1: 1, 1: -1})) == LaurentPoly({1: 1, -1: -1})
    assert lp_subst_inv(LaurentPoly.constant(4)) == LaurentPoly.constant(4)
    assert lp_eval_one(LaurentPoly({-1: 1, 1: -1})) == 0
    assert lp_eval_one(LaurentPoly()) == 0
    assert lp_eval_one(LaurentPoly({-1: 2, 0: -2})) == 0
    assert lp_eval_one(LaurentPoly({5: 3, 0: 4})) == 7


@pytest.mark.parametrize(
    "poly, text",
    [
        (LaurentPoly({-1: 1, 1: -1}), "-v + v^-1"),
        (LaurentPoly(), "0"),
        (LaurentPoly({-1: 2, 0: -2}), "2v^-1 - 2"),
        (LaurentPoly({1: 1}), "v"),
        (LaurentPoly({0: -1}), "-1"),
        (LaurentPoly({3: -2, 0: 1, -4: 1}), "-2v^3 + v^-4 + 1"),
    ],
)
def test_canonical(poly, text):
    assert lp_canonical(poly) == text
    assert parse_laurent(text) == poly


def test_canonical_other_variable():
    assert LaurentPoly({-1: 2, 0: -2}).canonical("t") == "2t^-1 - 2"
    assert parse_laurent("2t^-1 - 2", "t") == LaurentPoly({-1: 2, 0: -2})


def test_parse_rejects_garbage():
    for bad in ("v^", "2x", "", "v +"):
        with pytest.raises(ValueError):
            parse_laurent(bad)


def test_compare_examples():
    p = LaurentPoly({-1: 1, 1: -1})
    assert lp_compare(p, p) == 0
    assert lp_compare(V(1), LaurentPoly.constant(1)) == 1
    assert lp_compare(p, LaurentPoly()) == lp_compare(p, LaurentPoly())
    assert lp_compare(p, LaurentPoly()) != 0


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a + lp_neg(a)).is_zero()
    assert a - b == a + (-b)


@given(polys, st.integers(1, 7))
def test_reduction_keeps_coefficient_sum(p, n):
    q = p.reduce_mod(n)
    assert q.rep.eval_one() == p.eval_one()
    assert all(0 <= e < n for e, _ in q.rep.pairs)


@given(polys, polys, st.integers(0, 7))
def test_reduction_is_additive(a, b, n):
    assert (a + b).reduce_mod(n).rep == (a.reduce_mod(n).rep + b.reduce_mod(n).rep).reduce_mod(n).rep


@given(polys)
def test_modulus_one_is_constant(p):
    assert p.reduce_mod(1).rep.is_constant() or p.reduce_mod(1).rep.is_zero()


@given(polys)
def test_subst_inv_involution(p):
    assert p.subst_inv().subst_inv() == p
    assert p.subst_inv().eval_one() == p.eval_one()


@given(polys, polys, polys)
def test_compare_total_order(a, b, c):
    assert lp_compare(a, b) == -lp_compare(b, a)
    assert (lp_compare(a, b) == 0) == (a == b)
    if lp_compare(a, b) <= 0 and lp_compare(b, c) <= 0:
        assert lp_compare(a, c) <= 0


@given(polys)
def test_canonical_round_trip(p):
    assert parse_laurent(lp_canonical(p)) == p
    assert hash(parse_laurent(lp_canonical(p))) == hash(p)
