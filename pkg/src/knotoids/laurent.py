"""Exact integer Laurent polynomials in one variable.

Values are immutable and hashable so they can be used directly as dictionary
keys (the u-exponents of a :class:`~knotoids.invariants.GeneralizedPoly` are
Laurent polynomials).  Only the operations the invariants need are provided:
addition, negation, reduction modulo ``v**n - 1``, the substitution
``v -> 1/v`` and evaluation at ``v = 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "QuotientLaurent",
    "lp_add",
    "lp_neg",
    "lp_reduce_mod",
    "lp_subst_inv",
    "lp_eval_one",
    "lp_canonical",
    "lp_compare",
    "parse_laurent",
]


class LaurentPoly:
    """Integer Laurent polynomial stored as ``(exponent, coefficient)`` pairs.

    Pairs are kept sorted by decreasing exponent with zero coefficients
    removed, so structural equality is ring equality.
    """

    __slots__ = ("_pairs", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        self._pairs = tuple(
            sorted(((e, c) for e, c in acc.items() if c != 0), reverse=True)
        )
        self._hash = hash(self._pairs)

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, coefficient)`` pairs, decreasing exponent."""
        return self._pairs

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._pairs)

    def is_zero(self) -> bool:
        return not self._pairs

    def is_constant(self) -> bool:
        return not self._pairs or (len(self._pairs) == 1 and self._pairs[0][0] == 0)

    def constant_value(self) -> int:
        """The integer value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._pairs[0][1] if self._pairs else 0

    def coefficient(self, exp: int) -> int:
        for e, c in self._pairs:
            if e == exp:
                return c
        return 0

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(self._pairs + other._pairs)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((e, -c) for e, c in self._pairs)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> LaurentPoly:
        return LaurentPoly((e, k * c) for e, c in self._pairs)

    def reduce_mod(self, n: int) -> QuotientLaurent:
        """Reduce into ``Z[v, 1/v] / (v**n - 1)``; ``n = 0`` leaves it unchanged."""
        if n < 0:
            raise ValueError(f"modulus must be non-negative, got {n}")
        if n == 0:
            return QuotientLaurent(0, self)
        return QuotientLaurent(n, LaurentPoly((e % n, c) for e, c in self._pairs))

    def subst_inv(self) -> LaurentPoly:
        return LaurentPoly((-e, c) for e, c in self._pairs)

    def eval_one(self) -> int:
        return sum(c for _, c in self._pairs)

    def canonical(self, var: str = "v") -> str:
        return _render(self._pairs, var)

    def compare(self, other: LaurentPoly) -> int:
        """Total order: sign of ``self - other`` on the decreasing-exponent pair list."""
        a, b = self._pairs, other._pairs
        return (a > b) - (a < b)

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._pairs == other._pairs

    def __lt__(self, other: LaurentPoly) -> bool:
        return self._pairs < other._pairs

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._pairs)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.canonical()!r})"

    def __str__(self) -> str:
        return self.canonical()


@dataclass(frozen=True)
class QuotientLaurent:
    """An element of ``Z[v, 1/v] / (v**modulus - 1)`` with a normalized representative.

    For ``modulus > 0`` every exponent of ``rep`` lies in ``[0, modulus)``;
    ``modulus == 0`` is the full Laurent ring.
    """

    modulus: int
    rep: LaurentPoly

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError(f"modulus must be non-negative, got {self.modulus}")
        if self.modulus > 0 and any(
            not 0 <= e < self.modulus for e, _ in self.rep.pairs
        ):
            raise ValueError(f"representative {self.rep} not reduced mod {self.modulus}")

    def __str__(self) -> str:
        return self.rep.canonical()


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def lp_reduce_mod(a: LaurentPoly, n: int) -> QuotientLaurent:
    return a.reduce_mod(n)


def lp_subst_inv(a: LaurentPoly) -> LaurentPoly:
    return a.subst_inv()


def lp_eval_one(a: LaurentPoly) -> int:
    return a.eval_one()


def lp_canonical(a: LaurentPoly) -> str:
    return a.canonical()


def lp_compare(a: LaurentPoly, b: LaurentPoly) -> int:
    return a.compare(b)


def _render(pairs: Iterable[tuple[int, int]], var: str) -> str:
    # decreasing exponent, constant term last: "-v + v^-1", "2v^-1 - 2"
    pairs = sorted(pairs, key=lambda ec: (ec[0] == 0, -ec[0]))
    out = []
    for exp, coeff in pairs:
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            power = var if exp == 1 else f"{var}^{exp}"
            body = power if mag == 1 else f"{mag}{power}"
        if not out:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out) or "0"


_TERM_RE = re.compile(r"^(\d*)(?:([A-Za-z])(?:\^(-?\d+))?)?$")


def split_signed_terms(text: str) -> list[tuple[int, str]]:
    """Split ``a + b - c`` at top level (outside parentheses) into ``(sign, body)``."""
    text = text.strip()
    parts: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    start = 0
    if text.startswith("-"):
        sign, start = -1, 1
    i = start
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith((" + ", " - "), i):
            parts.append((sign, text[start:i]))
            sign = 1 if text[i + 1] == "+" else -1
            i += 3
            start = i
            continue
        i += 1
    parts.append((sign, text[start:]))
    return parts


def parse_laurent(text: str, var: str = "v") -> LaurentPoly:
    """Read back the output of :meth:`LaurentPoly.canonical`."""
    if text.strip() == "0":
        return LaurentPoly()
    acc: dict[int, int] = {}
    for sign, body in split_signed_terms(text):
        m = _TERM_RE.match(body)
        if not m or (m.group(2) and m.group(2) != var) or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        digits, name, power = m.groups()
        coeff = int(digits) if digits else 1
        exp = 0 if not name else (int(power) if power is not None else 1)
        acc[exp] = acc.get(exp, 0) + sign * coeff
    return LaurentPoly(acc)
