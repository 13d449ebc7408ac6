"""Polynomial invariants of knotoid Gauss diagrams.

The F-polynomial is ``sum_c sign(c) * (u**g_c(v) - 1)`` where the index
function ``g_c`` is a signed sum of ``v``-powers over the chords crossing
``c``, taken in ``Z[v, 1/v] / (v**|i(c)| - 1)``.  The u-exponents are
compared through their normalized representatives, so a
:class:`GeneralizedPoly` is a plain map from :class:`LaurentPoly` to ``int``.

The nth variants restrict everything to ``C_n``, the chords whose
intersection index is a multiple of ``n`` (``C_0`` is the chords with
``i(c) = 0``), with ``d_n`` replacing ``i``.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from knotoids.errors import NotInCn
from knotoids.gauss import (
    GaussDiagram,
    crossing_chords,
    intersection_index,
    lead_side_sign_sum,
)
from knotoids.laurent import LaurentPoly, QuotientLaurent, parse_laurent, split_signed_terms

__all__ = [
    "GeneralizedPoly",
    "ChordReport",
    "NthChordData",
    "index_function",
    "f_polynomial",
    "index_polynomial",
    "in_cn",
    "cn_chords",
    "dn_function",
    "nth_polynomial",
    "nth_index_function",
    "nth_f_polynomial",
    "mirror_transform",
    "nth_mirror_transform",
    "specialize_v1",
    "chord_report",
    "gp_canonical",
    "parse_generalized",
]

_ZERO = LaurentPoly()


class GeneralizedPoly:
    """Integer combination of ``u**E`` with Laurent-polynomial exponents ``E``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[LaurentPoly, int] | Iterable[tuple[LaurentPoly, int]] = ()):
        acc: dict[LaurentPoly, int] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        ordered = sorted(
            ((e, c) for e, c in acc.items() if c != 0),
            key=lambda ec: ec[0].sort_key(),
            reverse=True,
        )
        self._terms = tuple(ordered)
        self._hash = hash(self._terms)

    @property
    def terms(self) -> dict[LaurentPoly, int]:
        return dict(self._terms)

    def items(self) -> tuple[tuple[LaurentPoly, int], ...]:
        """``(exponent, coefficient)`` pairs in canonical (descending) order."""
        return self._terms

    def coefficient(self, exp: LaurentPoly) -> int:
        return self.terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: GeneralizedPoly) -> GeneralizedPoly:
        if not isinstance(other, GeneralizedPoly):
            return NotImplemented
        return GeneralizedPoly(self._terms + other._terms)

    def __neg__(self) -> GeneralizedPoly:
        return GeneralizedPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: GeneralizedPoly) -> GeneralizedPoly:
        if not isinstance(other, GeneralizedPoly):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralizedPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def canonical(self) -> str:
        return gp_canonical(self)

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"GeneralizedPoly({self.canonical()!r})"


@dataclass(frozen=True)
class NthChordData:
    n: int
    d_n: int
    g_n: QuotientLaurent


@dataclass(frozen=True)
class ChordReport:
    chord: int
    sign: int
    i: int
    g: QuotientLaurent
    nth: dict[int, NthChordData] = field(default_factory=dict)


@dataclass(frozen=True)
class _Analysis:
    sign: dict[int, int]
    index: dict[int, int]
    left: dict[int, list[int]]
    right: dict[int, list[int]]


@functools.lru_cache(maxsize=512)
def _analyse(d: GaussDiagram) -> _Analysis:
    sign, index, left, right = {}, {}, {}, {}
    for c, cv in d.chords.items():
        sign[c] = cv.sign
        left[c], right[c] = crossing_chords(d, c)
    for c in d.chords:
        index[c] = sum(sign[x] for x in right[c]) - sum(sign[x] for x in left[c])
    return _Analysis(sign, index, left, right)


def _raw_g(a: _Analysis, c: int, weight: Mapping[int, int], members=None) -> LaurentPoly:
    terms = []
    for x in a.right[c]:
        if members is None or x in members:
            terms.append((weight[x], a.sign[x]))
    for x in a.left[c]:
        if members is None or x in members:
            terms.append((-weight[x], -a.sign[x]))
    return LaurentPoly(terms)


def index_function(d: GaussDiagram, c: int) -> QuotientLaurent:
    """``g_c(v)`` reduced modulo ``v**|i(c)| - 1``."""
    d.chord(c)
    a = _analyse(d)
    return _raw_g(a, c, a.index).reduce_mod(abs(a.index[c]))


def _sum_u_terms(pairs: Iterable[tuple[int, LaurentPoly]]) -> GeneralizedPoly:
    terms = []
    for s, exp in pairs:
        terms.append((exp, s))
        terms.append((_ZERO, -s))
    return GeneralizedPoly(terms)


def f_polynomial(d: GaussDiagram) -> GeneralizedPoly:
    a = _analyse(d)
    return _sum_u_terms(
        (a.sign[c], _raw_g(a, c, a.index).reduce_mod(abs(a.index[c])).rep) for c in d.chords
    )


def index_polynomial(d: GaussDiagram) -> LaurentPoly:
    """Baseline index polynomial ``sum_c sign(c) (t**i(c) - 1)`` as a Laurent polynomial in t."""
    a = _analyse(d)
    terms = []
    for c in d.chords:
        terms += [(a.index[c], a.sign[c]), (0, -a.sign[c])]
    return LaurentPoly(terms)


def in_cn(i: int, n: int) -> bool:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return i == 0 if n == 0 else i % n == 0


def cn_chords(d: GaussDiagram, n: int) -> list[int]:
    a = _analyse(d)
    return [c for c in d.chords if in_cn(a.index[c], n)]


@functools.lru_cache(maxsize=512)
def _dn_all(d: GaussDiagram, n: int) -> dict[int, int]:
    members = cn_chords(d, n)
    return {c: lead_side_sign_sum(d, c, members) for c in members}


def _require_cn(d: GaussDiagram, c: int, n: int) -> None:
    d.chord(c)
    i = intersection_index(d, c)
    if not in_cn(i, n):
        raise NotInCn(f"chord {c} has i(c) = {i}, not a multiple of n = {n}")


def dn_function(d: GaussDiagram, c: int, n: int) -> int:
    _require_cn(d, c, n)
    return lead_side_sign_sum(d, c, cn_chords(d, n))


def nth_polynomial(d: GaussDiagram, n: int) -> LaurentPoly:
    """Baseline nth polynomial ``sum_{c in C_n} sign(c) (t**d_n(c) - 1)``."""
    a = _analyse(d)
    terms = []
    for c, dn in _dn_all(d, n).items():
        terms += [(dn, a.sign[c]), (0, -a.sign[c])]
    return LaurentPoly(terms)


def _nth_raw(d: GaussDiagram, c: int, n: int) -> tuple[LaurentPoly, int]:
    a = _analyse(d)
    dn = _dn_all(d, n)
    return _raw_g(a, c, dn, members=dn), abs(dn[c])


def nth_index_function(d: GaussDiagram, c: int, n: int) -> QuotientLaurent:
    _require_cn(d, c, n)
    raw, modulus = _nth_raw(d, c, n)
    return raw.reduce_mod(modulus)


def nth_f_polynomial(d: GaussDiagram, n: int) -> GeneralizedPoly:
    a = _analyse(d)
    pairs = []
    for c in _dn_all(d, n):
        raw, modulus = _nth_raw(d, c, n)
        pairs.append((a.sign[c], raw.reduce_mod(modulus).rep))
    return _sum_u_terms(pairs)


def mirror_transform(d: GaussDiagram) -> GeneralizedPoly:
    """``-F_D(u, 1/v)`` computed chord-wise, substituting before reduction."""
    a = _analyse(d)
    return _sum_u_terms(
        (-a.sign[c], _raw_g(a, c, a.index).subst_inv().reduce_mod(abs(a.index[c])).rep)
        for c in d.chords
    )


def nth_mirror_transform(d: GaussDiagram, n: int) -> GeneralizedPoly:
    a = _analyse(d)
    pairs = []
    for c in _dn_all(d, n):
        raw, modulus = _nth_raw(d, c, n)
        pairs.append((-a.sign[c], raw.subst_inv().reduce_mod(modulus).rep))
    return _sum_u_terms(pairs)


def specialize_v1(p: GeneralizedPoly) -> LaurentPoly:
    """Set ``v = 1`` in every exponent, giving a Laurent polynomial in ``t = u``."""
    return LaurentPoly((exp.eval_one(), coeff) for exp, coeff in p.items())


def chord_report(d: GaussDiagram, n_list: Sequence[int] = ()) -> list[ChordReport]:
    a = _analyse(d)
    reports = []
    for c in d.chords:
        nth = {}
        for n in n_list:
            dn = _dn_all(d, n)
            if c in dn:
                raw, modulus = _nth_raw(d, c, n)
                nth[n] = NthChordData(n, dn[c], raw.reduce_mod(modulus))
        g = _raw_g(a, c, a.index).reduce_mod(abs(a.index[c]))
        reports.append(ChordReport(c, a.sign[c], a.index[c], g, nth))
    return reports


def _render_power(exp: LaurentPoly) -> str:
    if exp.is_constant():
        k = exp.constant_value()
        if k == 1:
            return "u"
        if k == -1:
            return "u^-1"
    return f"u^({exp.canonical()})"


def gp_canonical(p: GeneralizedPoly) -> str:
    out = []
    for exp, coeff in p.items():
        mag = abs(coeff)
        if exp.is_zero():
            body = str(mag)
        else:
            power = _render_power(exp)
            body = power if mag == 1 else f"{mag}{power}"
        if not out:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out) or "0"


_GP_TERM_RE = re.compile(r"^(\d*)(?:u(?:\^(-1|\((.*)\)))?)?$")


def parse_generalized(text: str) -> GeneralizedPoly:
    """Read back the output of :func:`gp_canonical`."""
    if text.strip() == "0":
        return GeneralizedPoly()
    acc = []
    for sign, body in split_signed_terms(text):
        m = _GP_TERM_RE.match(body)
        if not m or not body:
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        digits, power, inner = m.groups()
        coeff = int(digits) if digits else 1
        if "u" not in body:
            exp = _ZERO
        elif power is None:
            exp = LaurentPoly.constant(1)
        elif power == "-1":
            exp = LaurentPoly.constant(-1)
        else:
            exp = parse_laurent(inner)
        acc.append((exp, sign * coeff))
    return GeneralizedPoly(acc)
