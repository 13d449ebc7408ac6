import itertools
import os
import random
import sys

from hypothesis import HealthCheck, settings, strategies as st

from knotoids.gauss import Endpoint, GaussDiagram, Role
from knotoids.moves import _R3_SIGNS

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_diagram(rng: random.Random, max_chords: int = 10) -> GaussDiagram:
    k = rng.randint(0, max_chords)
    eps = []
    for c in range(1, k + 1):
        s = rng.choice((1, -1))
        eps += [Endpoint(c, Role.OVER, s), Endpoint(c, Role.UNDER, s)]
    rng.shuffle(eps)
    return GaussDiagram(tuple(eps))


@st.composite
def diagrams(draw, max_chords: int = 8):
    k = draw(st.integers(0, max_chords))
    eps = []
    for c in range(1, k + 1):
        s = draw(st.sampled_from((1, -1)))
        eps += [Endpoint(c, Role.OVER, s), Endpoint(c, Role.UNDER, s)]
    order = draw(st.permutations(range(len(eps))))
    return GaussDiagram(tuple(eps[i] for i in order))


def _matchings(positions):
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for j in range(len(rest)):
        for tail in _matchings(rest[:j] + rest[j + 1:]):
            yield [(first, rest[j])] + tail


def all_codes(max_chords: int):
    """Every Gauss code with at most ``max_chords`` chords, chords numbered by first appearance."""
    for k in range(max_chords + 1):
        for matching in _matchings(list(range(2 * k))):
            for roles in itertools.product((True, False), repeat=k):
                for signs in itertools.product("+-", repeat=k):
                    toks = [None] * (2 * k)
                    for c, ((a, b), over_first, s) in enumerate(zip(matching, roles, signs), 1):
                        toks[a] = f"{'O' if over_first else 'U'}{c}{s}"
                        toks[b] = f"{'U' if over_first else 'O'}{c}{s}"
                    yield " ".join(toks)


def plant(d, pairs, gaps):
    """Insert the three endpoint pairs of an R3 template at sorted ``gaps`` of ``d``."""
    base = max(d.chords, default=0)
    eps = list(d.endpoints)
    sites = []
    # right to left, so equal gaps keep template order
    for pair, g in reversed(list(zip(pairs, gaps))):
        eps[g:g] = [Endpoint(base + label, role, _R3_SIGNS[label]) for label, role in pair]
    offset = 0
    for g in sorted(gaps):
        sites.append(g + offset)
        offset += 2
    return GaussDiagram(tuple(eps)), tuple(sites)


def swap_pairs(d, site):
    eps = list(d.endpoints)
    for p in site:
        eps[p], eps[p + 1] = eps[p + 1], eps[p]
    return GaussDiagram(tuple(eps))
