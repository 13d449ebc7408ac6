"""Reidemeister moves on Gauss diagrams and a seeded random walk over them.

Only a generating set is implemented: R1 (both kink types), the R2 move on
parallel strands, and the two Gauss-diagram forms of the cyclic R3 move
(``3a`` and ``3a'``, which differ in the order the three strands are met).

Sites are expressed in sequence positions.  A *gap* ``g`` of a diagram with
``k`` endpoints is the slot before endpoint ``g`` (``0 <= g <= k``); an R3
site is the left positions of three disjoint adjacent endpoint pairs.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from knotoids.errors import EmptyDiagram, InvalidMove
from knotoids.gauss import Endpoint, GaussDiagram, Role

__all__ = [
    "MoveKind",
    "MoveDescriptor",
    "GENERATING_KINDS",
    "FORBIDDEN_KINDS",
    "R3_TEMPLATES",
    "enumerate_moves",
    "apply_move",
    "random_walk",
    "walk",
    "forbidden_slide",
    "r3_roles",
]


class MoveKind(enum.Enum):
    R1_INSERT = "R1Insert"
    R1_DELETE = "R1Delete"
    R2_INSERT = "R2Insert"
    R2_DELETE = "R2Delete"
    R3 = "R3"
    FORBIDDEN_TAIL = "FTail"
    FORBIDDEN_HEAD = "FHead"


GENERATING_KINDS = frozenset(
    {MoveKind.R1_INSERT, MoveKind.R1_DELETE, MoveKind.R2_INSERT, MoveKind.R2_DELETE, MoveKind.R3}
)
FORBIDDEN_KINDS = frozenset({MoveKind.FORBIDDEN_TAIL, MoveKind.FORBIDDEN_HEAD})


@dataclass(frozen=True)
class MoveDescriptor:
    """One concrete move.

    ``site`` by kind: R1Insert ``(gap,)``; R1Delete ``(chord,)``; R2Insert
    ``(gap1, gap2)`` with ``gap1 <= gap2``; R2Delete ``(x, y)``; R3 the three
    pair positions; forbidden slides ``()``.

    ``params``: R1Insert ``(sign, over_first)``; R2Insert ``(sign_of_first,
    over_pair_first)``; R3 ``(template_name,)``; otherwise ``()``.
    """

    kind: MoveKind
    site: tuple[int, ...]
    params: tuple = ()

    def __str__(self) -> str:
        site = ",".join(str(s) for s in self.site)
        params = ",".join(_fmt_param(p) for p in self.params)
        return f"{self.kind.value}[{site}]" + (f"({params})" if params else "")


def _fmt_param(p) -> str:
    if isinstance(p, bool):
        return "T" if p else "F"
    if isinstance(p, int):
        return "+" if p > 0 else "-"
    return str(p)


# R3 templates.  Labels 1, 2, 3 are the chords joining (top, middle),
# (top, bottom) and (middle, bottom) strands; each pair lists its two
# endpoints in traversal order.  Signs: +1, -1, +1.
#
# Only the strand orders that meet the middle strand second are listed.
# The other rotations are valid R3 moves too, but they change F(u, v)
# (see test_moves for a counterexample), so they are not generators here.
_R3_SIGNS = {1: 1, 2: -1, 3: 1}
_O, _U = Role.OVER, Role.UNDER
_R3_BASE = {
    # bottom, middle, top
    "3a": (((3, _U), (2, _U)), ((1, _U), (3, _O)), ((2, _O), (1, _O))),
    # top, middle, bottom
    "3a'": (((2, _O), (1, _O)), ((1, _U), (3, _O)), ((3, _U), (2, _U))),
}

# Strand orders excluded from the generating set; kept for tests and exploration.
_R3_OTHER_ORDERS = {
    "3a-rot1": _R3_BASE["3a"][1:] + _R3_BASE["3a"][:1],
    "3a-rot2": _R3_BASE["3a"][2:] + _R3_BASE["3a"][:2],
    "3a'-rot1": _R3_BASE["3a'"][1:] + _R3_BASE["3a'"][:1],
    "3a'-rot2": _R3_BASE["3a'"][2:] + _R3_BASE["3a'"][:2],
}


def _build_templates(bases):
    out = []
    for name, pairs in bases.items():
        out.append((name, pairs))
        out.append((name, tuple((b, a) for a, b in pairs)))
    return tuple(out)


R3_TEMPLATES = _build_templates(_R3_BASE)
R3_OTHER_TEMPLATES = _build_templates(_R3_OTHER_ORDERS)


def _match_r3(d: GaussDiagram, site: tuple[int, int, int]):
    """Return ``(template_name, {label: chord})`` if the three pairs form an R3 site."""
    eps = d.endpoints
    toks = [eps[p + k] for p in site for k in (0, 1)]
    ids = [t.chord for t in toks]
    if len(set(ids)) != 3 or ids[0] == ids[1] or ids[2] == ids[3] or ids[4] == ids[5]:
        return None
    for name, tpl in R3_TEMPLATES:
        mapping: dict[int, int] = {}
        ok = True
        for (label, role), ep in zip((t for pair in tpl for t in pair), toks):
            if ep.role is not role or ep.crossing_sign != _R3_SIGNS[label]:
                ok = False
                break
            prev = mapping.setdefault(label, ep.chord)
            if prev != ep.chord:
                ok = False
                break
        if ok and len(set(mapping.values())) == 3:
            return name, mapping
    return None


def r3_roles(d: GaussDiagram, m: MoveDescriptor) -> dict[int, int]:
    """Chord ids playing roles 1, 2, 3 (top-middle, top-bottom, middle-bottom) at an R3 site."""
    if m.kind is not MoveKind.R3:
        raise InvalidMove(f"{m} is not an R3 move")
    match = _match_r3(d, m.site) if _valid_r3_positions(d, m.site) else None
    if match is None:
        raise InvalidMove(f"{m} does not match an R3 pattern")
    return match[1]


def _valid_r3_positions(d: GaussDiagram, site) -> bool:
    if len(site) != 3:
        return False
    p, q, r = site
    return 0 <= p and p + 1 < q and q + 1 < r and r + 1 < len(d)


def _r3_sites(d: GaussDiagram) -> Iterator[MoveDescriptor]:
    eps = d.endpoints
    chords = d.chords
    n = len(eps)

    def other(pos: int) -> int:
        cv = chords[eps[pos].chord]
        return cv.under_pos if cv.over_pos == pos else cv.over_pos

    found = set()
    for p in range(n - 1):
        x, y = eps[p].chord, eps[p + 1].chord
        if x == y:
            continue
        ox, oy = other(p), other(p + 1)
        for sx in (ox - 1, ox):
            if sx < 0 or sx + 1 >= n or sx in (p - 1, p, p + 1):
                continue
            for sy in (oy - 1, oy):
                if sy < 0 or sy + 1 >= n or sy in (p - 1, p, p + 1):
                    continue
                site = tuple(sorted((p, sx, sy)))
                if site in found or not _valid_r3_positions(d, site):
                    continue
                if _match_r3(d, site) is not None:
                    found.add(site)
    for site in sorted(found):
        yield MoveDescriptor(MoveKind.R3, site, (_match_r3(d, site)[0],))


def _r1_deletes(d: GaussDiagram) -> Iterator[MoveDescriptor]:
    for c, cv in d.chords.items():
        if cv.hi - cv.lo == 1:
            yield MoveDescriptor(MoveKind.R1_DELETE, (c,))


def _is_r2_pair(d: GaussDiagram, x: int, y: int) -> bool:
    ch = d.chords
    if x not in ch or y not in ch or x == y:
        return False
    xv, yv = ch[x], ch[y]
    return (
        xv.sign == -yv.sign
        and yv.over_pos == xv.over_pos + 1
        and yv.under_pos == xv.under_pos + 1
    )


def _r2_deletes(d: GaussDiagram) -> Iterator[MoveDescriptor]:
    eps = d.endpoints
    for p in range(len(eps) - 1):
        a, b = eps[p], eps[p + 1]
        if a.role is Role.OVER and b.role is Role.OVER and _is_r2_pair(d, a.chord, b.chord):
            yield MoveDescriptor(MoveKind.R2_DELETE, (a.chord, b.chord))


_SIGN_DIR = ((1, True), (1, False), (-1, True), (-1, False))


def _r1_inserts(d: GaussDiagram) -> Iterator[MoveDescriptor]:
    for g in range(len(d) + 1):
        for s, over_first in _SIGN_DIR:
            yield MoveDescriptor(MoveKind.R1_INSERT, (g,), (s, over_first))


def _r2_inserts(d: GaussDiagram) -> Iterator[MoveDescriptor]:
    k = len(d)
    for g1 in range(k + 1):
        for g2 in range(g1, k + 1):
            for s, over_first in _SIGN_DIR:
                yield MoveDescriptor(MoveKind.R2_INSERT, (g1, g2), (s, over_first))


def enumerate_moves(d: GaussDiagram, kinds: Iterable[MoveKind] = GENERATING_KINDS) -> list[MoveDescriptor]:
    """All applicable moves of the requested kinds, in a deterministic order."""
    kinds = set(kinds)
    out: list[MoveDescriptor] = []
    if MoveKind.R1_INSERT in kinds:
        out += _r1_inserts(d)
    if MoveKind.R1_DELETE in kinds:
        out += _r1_deletes(d)
    if MoveKind.R2_INSERT in kinds:
        out += _r2_inserts(d)
    if MoveKind.R2_DELETE in kinds:
        out += _r2_deletes(d)
    if MoveKind.R3 in kinds:
        out += _r3_sites(d)
    if d.endpoints:
        if MoveKind.FORBIDDEN_TAIL in kinds:
            out.append(MoveDescriptor(MoveKind.FORBIDDEN_TAIL, ()))
        if MoveKind.FORBIDDEN_HEAD in kinds:
            out.append(MoveDescriptor(MoveKind.FORBIDDEN_HEAD, ()))
    return out


def _fresh_ids(d: GaussDiagram, count: int) -> list[int]:
    top = max(d.chords, default=0)
    return list(range(top + 1, top + 1 + count))


def _check_insert_params(m: MoveDescriptor) -> tuple[int, bool]:
    if len(m.params) != 2 or m.params[0] not in (1, -1) or not isinstance(m.params[1], bool):
        raise InvalidMove(f"{m}: params must be (sign, bool)")
    return m.params[0], m.params[1]


def apply_move(d: GaussDiagram, m: MoveDescriptor) -> GaussDiagram:
    """Apply ``m`` to ``d`` after re-checking that the site still matches.

    Raises:
        InvalidMove: the site is out of range or no longer has the required pattern.
    """
    eps = list(d.endpoints)
    k = len(eps)
    kind = m.kind

    if kind is MoveKind.R1_INSERT:
        s, over_first = _check_insert_params(m)
        if len(m.site) != 1 or not 0 <= m.site[0] <= k:
            raise InvalidMove(f"{m}: gap out of range for {k} endpoints")
        (c,) = _fresh_ids(d, 1)
        first, second = (Role.OVER, Role.UNDER) if over_first else (Role.UNDER, Role.OVER)
        g = m.site[0]
        eps[g:g] = [Endpoint(c, first, s), Endpoint(c, second, s)]
        return GaussDiagram(tuple(eps))

    if kind is MoveKind.R1_DELETE:
        if len(m.site) != 1 or m.site[0] not in d.chords:
            raise InvalidMove(f"{m}: no such chord")
        cv = d.chords[m.site[0]]
        if cv.hi - cv.lo != 1:
            raise InvalidMove(f"{m}: chord {cv.id} is not isolated")
        del eps[cv.lo : cv.hi + 1]
        return GaussDiagram(tuple(eps))

    if kind is MoveKind.R2_INSERT:
        s, over_first = _check_insert_params(m)
        if len(m.site) != 2 or not 0 <= m.site[0] <= m.site[1] <= k:
            raise InvalidMove(f"{m}: gaps must satisfy 0 <= g1 <= g2 <= {k}")
        x, y = _fresh_ids(d, 2)
        r1, r2 = (Role.OVER, Role.UNDER) if over_first else (Role.UNDER, Role.OVER)
        pair1 = [Endpoint(x, r1, s), Endpoint(y, r1, -s)]
        pair2 = [Endpoint(x, r2, s), Endpoint(y, r2, -s)]
        g1, g2 = m.site
        eps[g2:g2] = pair2
        eps[g1:g1] = pair1
        return GaussDiagram(tuple(eps))

    if kind is MoveKind.R2_DELETE:
        if len(m.site) != 2 or not _is_r2_pair(d, *m.site):
            raise InvalidMove(f"{m}: chords do not form an R2 pair")
        drop = set(m.site)
        return GaussDiagram(tuple(ep for ep in eps if ep.chord not in drop))

    if kind is MoveKind.R3:
        site = tuple(m.site)
        if not _valid_r3_positions(d, site) or _match_r3(d, site) is None:
            raise InvalidMove(f"{m}: positions do not form an R3 site")
        for p in site:
            eps[p], eps[p + 1] = eps[p + 1], eps[p]
        return GaussDiagram(tuple(eps))

    if kind is MoveKind.FORBIDDEN_TAIL:
        return forbidden_slide(d, "tail")
    if kind is MoveKind.FORBIDDEN_HEAD:
        return forbidden_slide(d, "head")
    raise InvalidMove(f"unsupported move kind {kind!r}")


def forbidden_slide(d: GaussDiagram, end: str) -> GaussDiagram:
    """Pull the tail or head across its nearest strand: drops the chord at that end.

    Not an equivalence; invariants may change.
    """
    if not d.endpoints:
        raise EmptyDiagram("forbidden slide needs a non-empty diagram")
    end = end.lower()
    if end not in ("tail", "head"):
        raise ValueError(f"end must be 'tail' or 'head', got {end!r}")
    c = d.endpoints[0 if end == "tail" else -1].chord
    return GaussDiagram(tuple(ep for ep in d.endpoints if ep.chord != c))


_DELETE_OF = {MoveKind.R1_INSERT: MoveKind.R1_DELETE, MoveKind.R2_INSERT: MoveKind.R2_DELETE}


def _sample_insert(d: GaussDiagram, kind: MoveKind, rng: random.Random) -> MoveDescriptor:
    k = len(d)
    s, over_first = rng.choice(_SIGN_DIR)
    if kind is MoveKind.R1_INSERT:
        return MoveDescriptor(kind, (rng.randrange(k + 1),), (s, over_first))
    # uniform over pairs g1 <= g2
    width = k + 1
    idx = rng.randrange(width * (width + 1) // 2)
    g1 = 0
    while idx >= width - g1:
        idx -= width - g1
        g1 += 1
    return MoveDescriptor(kind, (g1, g1 + idx), (s, over_first))


def walk(
    d: GaussDiagram,
    steps: int,
    seed: int,
    kinds: Iterable[MoveKind] = GENERATING_KINDS,
    max_chords: int = 64,
) -> tuple[GaussDiagram, list[MoveDescriptor]]:
    """Seeded random walk returning the final diagram and the applied moves.

    Each step picks a kind uniformly among the requested ones that currently
    have an applicable move, then a site uniformly among that kind's moves.
    Above ``max_chords`` chords, insert kinds are skipped while some other
    kind applies.
    """
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    kinds = sorted(set(kinds), key=lambda k: k.value)
    rng = random.Random(seed)
    trace: list[MoveDescriptor] = []
    for _ in range(steps):
        options: dict[MoveKind, list[MoveDescriptor] | None] = {}
        for kind in kinds:
            if kind in _DELETE_OF:
                options[kind] = None
            else:
                found = enumerate_moves(d, {kind})
                if found:
                    options[kind] = found
        if d.num_chords >= max_chords:
            shrinking = {k: v for k, v in options.items() if v is not None}
            if shrinking:
                options = shrinking
        if not options:
            m = MoveDescriptor(MoveKind.R1_INSERT, (0,), (1, True))
        else:
            kind = rng.choice(sorted(options, key=lambda k: k.value))
            found = options[kind]
            m = _sample_insert(d, kind, rng) if found is None else rng.choice(found)
        d = apply_move(d, m)
        trace.append(m)
    return d, trace


def random_walk(
    d: GaussDiagram,
    steps: int,
    seed: int,
    kinds: Iterable[MoveKind] = GENERATING_KINDS,
    max_chords: int = 64,
) -> GaussDiagram:
    return walk(d, steps, seed, kinds, max_chords)[0]
