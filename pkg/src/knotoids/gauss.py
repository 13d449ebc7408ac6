"""Gauss diagrams of knotoid diagrams.

A diagram is the sequence of chord endpoints met when walking from the tail
to the head.  Each chord joins the preimage of the overpassing strand (role
``O``) to the preimage of the underpassing strand (role ``U``); the endpoint
sign is ``+sign(c)`` at ``O`` and ``-sign(c)`` at ``U``.

The text form, used everywhere as the interchange format, is a
space-separated token list such as ``"O1+ O2+ U1+ U2+"``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable

from knotoids.errors import (
    DomainError,
    GaussSyntaxError,
    UnknownChord,
    UnknownName,
    ValidationError,
)

__all__ = [
    "Role",
    "Endpoint",
    "ChordView",
    "GaussDiagram",
    "parse_gauss_code",
    "serialize",
    "crossing_chords",
    "intersection_index",
    "lead_side_sign_sum",
    "inverse",
    "mirror",
    "product",
    "relabel",
    "make_hm",
    "hm_labels",
    "corpus",
    "corpus_labels",
    "CORPUS_NAMES",
]


class Role(enum.Enum):
    OVER = "O"
    UNDER = "U"

    @property
    def flipped(self) -> Role:
        return Role.UNDER if self is Role.OVER else Role.OVER


@dataclass(frozen=True)
class Endpoint:
    chord: int
    role: Role
    crossing_sign: int

    @property
    def sign(self) -> int:
        """Endpoint sign: the crossing sign at the over preimage, its negative at the under one."""
        return self.crossing_sign if self.role is Role.OVER else -self.crossing_sign

    def token(self) -> str:
        return f"{self.role.value}{self.chord}{'+' if self.crossing_sign > 0 else '-'}"


@dataclass(frozen=True)
class ChordView:
    id: int
    sign: int
    over_pos: int
    under_pos: int
    lo: int = field(init=False, repr=False, compare=False)
    hi: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lo", min(self.over_pos, self.under_pos))
        object.__setattr__(self, "hi", max(self.over_pos, self.under_pos))

    def on_lead_side(self, pos: int) -> bool:
        """Whether sequence position ``pos`` lies on the side containing tail and head."""
        return pos < self.lo or pos > self.hi

    def strictly_inside(self, pos: int) -> bool:
        return self.lo < pos < self.hi


@dataclass(frozen=True)
class GaussDiagram:
    endpoints: tuple[Endpoint, ...] = ()
    _chords: dict[int, ChordView] = field(
        init=False, repr=False, compare=False, hash=False, default=None
    )
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "endpoints", tuple(self.endpoints))
        object.__setattr__(self, "_chords", _index_chords(self.endpoints))
        # diagrams key the invariant caches, so hash once
        key = tuple((ep.chord, ep.role is Role.OVER, ep.crossing_sign) for ep in self.endpoints)
        object.__setattr__(self, "_hash", hash(key))

    def __hash__(self) -> int:
        return self._hash

    @property
    def chords(self) -> dict[int, ChordView]:
        """Chord views keyed by id, in order of first appearance."""
        return self._chords

    def chord(self, c: int) -> ChordView:
        try:
            return self._chords[c]
        except KeyError:
            raise UnknownChord(f"unknown chord {c}") from None

    def chord_ids(self) -> list[int]:
        return list(self._chords)

    def __len__(self) -> int:
        return len(self.endpoints)

    @property
    def num_chords(self) -> int:
        return len(self._chords)

    def __str__(self) -> str:
        return serialize(self)


def _index_chords(endpoints: tuple[Endpoint, ...]) -> dict[int, ChordView]:
    seen: dict[int, dict] = {}
    for pos, ep in enumerate(endpoints):
        if not isinstance(ep.chord, int) or ep.chord <= 0:
            raise ValidationError(f"chord {ep.chord!r}: identifier must be a positive integer")
        if ep.crossing_sign not in (1, -1):
            raise ValidationError(f"chord {ep.chord}: sign must be +1 or -1")
        rec = seen.setdefault(ep.chord, {"sign": ep.crossing_sign, "count": 0})
        rec["count"] += 1
        if rec["count"] > 2:
            raise ValidationError(f"chord {ep.chord}: occurs more than twice")
        if ep.role.value in rec:
            raise ValidationError(f"chord {ep.chord}: duplicate {ep.role.value} endpoint")
        if rec["sign"] != ep.crossing_sign:
            raise ValidationError(
                f"chord {ep.chord}: sign mismatch between its O and U tokens"
            )
        rec[ep.role.value] = pos
    views = {}
    for cid, rec in seen.items():
        if rec["count"] != 2:
            raise ValidationError(f"chord {cid}: occurs once, expected an O and a U endpoint")
        views[cid] = ChordView(cid, rec["sign"], rec["O"], rec["U"])
    return views


_TOKEN_RE = re.compile(r"^([OU])(\d+)([+-])$")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a whitespace-separated Gauss code; the empty string is the trivial knotoid.

    Raises:
        GaussSyntaxError: a token is not of the form ``O3+`` / ``U12-``.
        ValidationError: a chord does not occur exactly once as ``O`` and once as ``U``
            with the same sign.
    """
    endpoints = []
    for i, tok in enumerate(text.split()):
        m = _TOKEN_RE.match(tok)
        if not m:
            raise GaussSyntaxError(f"malformed token {tok!r} at position {i}")
        role, num, sgn = m.groups()
        chord = int(num)
        if chord == 0:
            raise GaussSyntaxError(f"malformed token {tok!r} at position {i}: chord ids start at 1")
        endpoints.append(Endpoint(chord, Role(role), 1 if sgn == "+" else -1))
    return GaussDiagram(tuple(endpoints))


def serialize(d: GaussDiagram) -> str:
    return " ".join(ep.token() for ep in d.endpoints)


def crossing_chords(d: GaussDiagram, c: int) -> tuple[list[int], list[int]]:
    """Chords crossing ``c``, split by where their arrowhead (``U`` endpoint) lies.

    Returns ``(l, r)``: ``l`` holds the chords pointing to the lead side of
    ``c``, ``r`` those pointing away from it.
    """
    cv = d.chord(c)
    left, right = [], []
    for x, xv in d.chords.items():
        if x == c:
            continue
        if cv.strictly_inside(xv.over_pos) == cv.strictly_inside(xv.under_pos):
            continue
        if cv.on_lead_side(xv.under_pos):
            left.append(x)
        else:
            right.append(x)
    return left, right


def intersection_index(d: GaussDiagram, c: int) -> int:
    """``i(c)``: signed count of crossing chords, ``r`` positive and ``l`` negative."""
    left, right = crossing_chords(d, c)
    ch = d.chords
    return sum(ch[x].sign for x in right) - sum(ch[x].sign for x in left)


def lead_side_sign_sum(d: GaussDiagram, c: int, subset: Iterable[int]) -> int:
    """Sum of endpoint signs on the lead side of ``c`` whose chord lies in ``subset``."""
    cv = d.chord(c)
    allowed = set(subset)
    allowed.discard(c)
    eps = d.endpoints
    lead = eps[: cv.lo] + eps[cv.hi + 1 :]
    return sum(ep.sign for ep in lead if ep.chord in allowed)


def inverse(d: GaussDiagram) -> GaussDiagram:
    """Orientation reversal; roles and crossing signs are unchanged."""
    return GaussDiagram(tuple(reversed(d.endpoints)))


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Over/under exchange at every crossing: roles swap and crossing signs flip."""
    return GaussDiagram(
        tuple(Endpoint(ep.chord, ep.role.flipped, -ep.crossing_sign) for ep in d.endpoints)
    )


def product(d1: GaussDiagram, d2: GaussDiagram) -> GaussDiagram:
    """Concatenate ``d1`` then ``d2``; ``d2``'s chords are renumbered after ``d1``'s largest id."""
    offset = max(d1.chords, default=0)
    remap = {cid: offset + k for k, cid in enumerate(d2.chords, start=1)}
    tail = tuple(Endpoint(remap[ep.chord], ep.role, ep.crossing_sign) for ep in d2.endpoints)
    return GaussDiagram(d1.endpoints + tail)


def relabel(d: GaussDiagram) -> GaussDiagram:
    """Renumber chords 1, 2, ... in order of first appearance."""
    remap = {cid: k for k, cid in enumerate(d.chords, start=1)}
    return GaussDiagram(
        tuple(Endpoint(remap[ep.chord], ep.role, ep.crossing_sign) for ep in d.endpoints)
    )


# Transcribed from the planar and Gauss-diagram figures; letters index the chords
# in reading order used by the corpus tables.
_CORPUS = {
    "5.1.3": (
        "U1+ O2+ U3- O4- U5- O3- U4- O5- O1+ U2+",
        {"a1": 1, "b1": 2, "c1": 3, "d1": 4, "e1": 5},
    ),
    "5.1.4": (
        "O1- U2+ O3+ U1- U4- O5- U3+ O2+ U5- O4-",
        {"a2": 1, "b2": 2, "c2": 3, "d2": 4, "e2": 5},
    ),
    "5.1.26": (
        "O1+ U2- O3- O4+ U3- O5- U1+ U5- O2- U4+",
        {"a": 1, "b": 2, "c": 3, "d": 4, "e": 5},
    ),
}

CORPUS_NAMES = tuple(_CORPUS)


def corpus(name: str) -> GaussDiagram:
    try:
        code, _ = _CORPUS[name]
    except KeyError:
        raise UnknownName(
            f"unknown corpus diagram {name!r}; known: {', '.join(CORPUS_NAMES)}"
        ) from None
    return parse_gauss_code(code)


def corpus_labels(name: str) -> dict[str, int]:
    if name not in _CORPUS:
        raise UnknownName(f"unknown corpus diagram {name!r}")
    return dict(_CORPUS[name][1])


def hm_labels(m: int) -> dict[str, int]:
    """Letter names of the chords of ``make_hm(m)``: ``a, b, c, d1, e1, ..., dm, em``."""
    labels = {"a": 1, "b": 2, "c": 3}
    for k in range(1, m + 1):
        labels[f"d{k}"] = 2 * k + 2
        labels[f"e{k}"] = 2 * k + 3
    return labels


def make_hm(m: int) -> GaussDiagram:
    """The diagram ``H_m`` (``m >= 2``): chords a, b, c and nested pairs d_k, e_k.

    Along the arc: ``a`` over, ``b`` under, ``c`` over, ``a`` under, then the
    left ends ``d_1 e_1 ... d_m e_m``, then ``c`` under, ``b`` over, then the
    right ends ``e_m d_m ... e_1 d_1``.  ``H_1`` would coincide with 5.1.4.
    """
    if not isinstance(m, int) or m < 2:
        raise DomainError(f"H_m is defined for m >= 2, got {m!r}")
    lab = hm_labels(m)
    toks = ["O1-", "U2+", "O3+", "U1-"]
    for k in range(1, m + 1):
        toks += [f"U{lab[f'd{k}']}-", f"O{lab[f'e{k}']}-"]
    toks += ["U3+", "O2+"]
    for k in range(m, 0, -1):
        toks += [f"U{lab[f'e{k}']}-", f"O{lab[f'd{k}']}-"]
    return parse_gauss_code(" ".join(toks))
