import pytest
from hypothesis import given, strategies as st

from conftest import diagrams
from oracle import as_oracle_form, oracle_f, oracle_nth_f
from knotoids.errors import NotInCn, UnknownChord
from knotoids.gauss import (
    corpus,
    corpus_labels,
    hm_labels,
    intersection_index,
    inverse,
    make_hm,
    mirror,
    parse_gauss_code,
    product,
    serialize,
)
from knotoids.invariants import (
    GeneralizedPoly,
    chord_report,
    cn_chords,
    dn_function,
    f_polynomial,
    gp_canonical,
    in_cn,
    index_function,
    index_polynomial,
    mirror_transform,
    nth_f_polynomial,
    nth_index_function,
    nth_mirror_transform,
    nth_polynomial,
    parse_generalized,
    specialize_v1,
)
from knotoids.laurent import LaurentPoly, parse_laurent

G = parse_gauss_code
CROSS = G("O1+ O2+ U1+ U2+")
EMPTY = G("")
ns = st.integers(0, 4)


def gp(text):
    return parse_generalized(text)


def t(text):
    return parse_laurent(text, "t")


class TestIndexFunction:
    def test_examples(self):
        d2, lab2 = corpus("5.1.4"), corpus_labels("5.1.4")
        g = index_function(d2, lab2["a2"])
        assert (g.modulus, g.rep) == (0, parse_laurent("v^-1 - v"))
        d1, lab1 = corpus("5.1.3"), corpus_labels("5.1.3")
        g = index_function(d1, lab1["a1"])
        assert (g.modulus, g.rep) == (1, LaurentPoly.constant(-1))
        g = index_function(G("O1+ U1+"), 1)
        assert (g.modulus, g.rep.is_zero()) == (0, True)
        g = index_function(CROSS, 2)
        assert (g.modulus, g.rep) == (1, LaurentPoly.constant(1))

    def test_unknown_chord(self):
        with pytest.raises(UnknownChord):
            index_function(CROSS, 3)

    @given(diagrams())
    def test_value_at_one_is_index(self, d):
        for c in d.chords:
            assert index_function(d, c).rep.eval_one() == intersection_index(d, c)


class TestFPolynomial:
    @pytest.mark.parametrize(
        "name, text",
        [
            ("5.1.3", "2u^-1 - 2"),
            ("5.1.4", "-3u^(-v + v^-1) + 2u^-1 + 1"),
            ("5.1.26", "0"),
        ],
    )
    def test_corpus(self, name, text):
        assert gp_canonical(f_polynomial(corpus(name))) == text

    def test_small(self):
        assert f_polynomial(EMPTY).is_zero()
        assert f_polynomial(CROSS) == gp("u + u^-1 - 2")
        assert f_polynomial(CROSS).canonical() == "u + u^-1 - 2"

    def test_knot_type_pattern_is_zero(self):
        trefoil = G("O1- U2- O3- U1- O2- U3-")
        assert all(intersection_index(trefoil, c) == 0 for c in trefoil.chords)
        assert f_polynomial(trefoil).is_zero()

    @given(diagrams(6))
    def test_matches_oracle(self, d):
        assert as_oracle_form(f_polynomial(d)) == oracle_f(serialize(d))

    @given(diagrams(6), ns)
    def test_nth_matches_oracle(self, d, n):
        assert as_oracle_form(nth_f_polynomial(d, n)) == oracle_nth_f(serialize(d), n)

    def test_constant_exponent_rendering(self):
        p = GeneralizedPoly([(LaurentPoly.constant(2), 3), (LaurentPoly.constant(-1), -1)])
        assert gp_canonical(p) == "3u^(2) - u^-1"
        assert parse_generalized(gp_canonical(p)) == p

    @given(diagrams())
    def test_canonical_round_trip(self, d):
        p = f_polynomial(d)
        assert parse_generalized(gp_canonical(p)) == p
        assert all(c != 0 for _, c in p.items())


class TestBaselines:
    def test_index_polynomial(self):
        for name in ("5.1.3", "5.1.4"):
            assert index_polynomial(corpus(name)) == t("2t^-1 - 2")
        assert index_polynomial(CROSS) == t("t + t^-1 - 2")
        assert index_polynomial(EMPTY).is_zero()

    def test_cn(self):
        assert in_cn(0, 0) and not in_cn(2, 0)
        assert in_cn(-4, 2) and not in_cn(3, 2)
        with pytest.raises(ValueError):
            in_cn(1, -1)
        d, lab = corpus("5.1.3"), corpus_labels("5.1.3")
        assert set(cn_chords(d, 2)) == {lab["c1"], lab["d1"], lab["e1"]}
        assert set(cn_chords(d, 1)) == set(d.chords)

    def test_dn_examples(self):
        d, lab = corpus("5.1.3"), corpus_labels("5.1.3")
        assert dn_function(d, lab["c1"], 2) == 0
        assert dn_function(make_hm(3), hm_labels(3)["a"], 2) == 0
        with pytest.raises(NotInCn):
            dn_function(d, lab["a1"], 2)
        with pytest.raises(UnknownChord):
            dn_function(d, 99, 1)

    @given(diagrams())
    def test_d1_is_index(self, d):
        for c in d.chords:
            assert dn_function(d, c, 1) == intersection_index(d, c)

    def test_nth_polynomial(self):
        d = corpus("5.1.3")
        assert nth_polynomial(d, 2).is_zero()
        assert nth_polynomial(d, 1) == t("2t^-1 - 2")

    @given(diagrams())
    def test_z1_is_index_polynomial(self, d):
        assert nth_polynomial(d, 1) == index_polynomial(d)


class TestNth:
    @given(diagrams())
    def test_n1_is_plain(self, d):
        assert nth_f_polynomial(d, 1) == f_polynomial(d)
        for c in d.chords:
            assert nth_index_function(d, c, 1) == index_function(d, c)

    def test_isolated_chord(self):
        for n in range(5):
            assert nth_index_function(G("O1- U1-"), 1, n).rep.is_zero()
            assert nth_f_polynomial(EMPTY, n).is_zero()

    def test_restricted_to_cn(self):
        d, lab = corpus("5.1.3"), corpus_labels("5.1.3")
        g = nth_index_function(d, lab["c1"], 2)
        assert g.modulus == 0
        assert as_oracle_form(nth_f_polynomial(d, 2)) == oracle_nth_f(serialize(d), 2)
        with pytest.raises(NotInCn):
            nth_index_function(d, lab["a1"], 2)


class TestProperties:
    @given(diagrams(), ns)
    def test_inverse(self, d, n):
        assert f_polynomial(inverse(d)) == f_polynomial(d)
        assert nth_f_polynomial(inverse(d), n) == nth_f_polynomial(d, n)

    @given(diagrams(), ns)
    def test_mirror(self, d, n):
        assert f_polynomial(mirror(d)) == mirror_transform(d)
        assert nth_f_polynomial(mirror(d), n) == nth_mirror_transform(d, n)

    @given(diagrams(5), diagrams(5), ns)
    def test_product(self, a, b, n):
        assert f_polynomial(product(a, b)) == f_polynomial(a) + f_polynomial(b)
        assert nth_f_polynomial(product(a, b), n) == nth_f_polynomial(a, n) + nth_f_polynomial(b, n)

    @given(diagrams())
    def test_specialization(self, d):
        assert specialize_v1(f_polynomial(d)) == index_polynomial(d)

    def test_mirror_examples(self):
        d = corpus("5.1.3")
        assert mirror_transform(d) == f_polynomial(mirror(d))
        assert mirror_transform(EMPTY).is_zero()
        assert mirror_transform(CROSS) == gp("-u - u^-1 + 2")

    def test_specialize_examples(self):
        assert specialize_v1(f_polynomial(corpus("5.1.3"))) == t("2t^-1 - 2")
        assert specialize_v1(GeneralizedPoly()).is_zero()
        assert specialize_v1(gp("-3u^(-v + v^-1) + 2u^-1 + 1")) == t("2t^-1 - 2")


class TestReport:
    def test_corpus_signs(self):
        reps = chord_report(corpus("5.1.3"))
        assert [r.sign for r in reps] == [1, 1, -1, -1, -1]
        assert chord_report(EMPTY) == []

    def test_hm_b(self):
        d, lab = make_hm(2), hm_labels(2)
        rep = {r.chord: r for r in chord_report(d, [1, 2])}
        assert rep[lab["b"]].g.rep == LaurentPoly.constant(-1)
        assert 2 not in rep[lab["b"]].nth
        assert rep[lab["a"]].nth[2].d_n == 0

    @given(diagrams())
    def test_report_consistent(self, d):
        for r in chord_report(d, [0, 1, 2]):
            assert r.g.rep.eval_one() == r.i
            assert r.nth[1].g_n == r.g
            for n, data in r.nth.items():
                assert in_cn(r.i, n)
                assert data.d_n == dn_function(d, r.chord, n)


def test_gp_canonical_examples():
    assert gp_canonical(f_polynomial(corpus("5.1.4"))) == "-3u^(-v + v^-1) + 2u^-1 + 1"
    assert gp_canonical(GeneralizedPoly()) == "0"
    assert gp_canonical(gp("2u^-1 - 2")) == "2u^-1 - 2"


def test_parse_generalized_rejects_garbage():
    for bad in ("u^(", "3x", "u^2"):
        with pytest.raises(ValueError):
            parse_generalized(bad)
