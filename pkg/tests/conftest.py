"""Shared helpers for the test suite.

The helpers here are deliberately *independent* of the library internals:
``valid_by_definition`` re-states the simulation condition as four raw
quantifier loops so the checker has something to be measured against, and
``eq`` wraps the equivalence search with a bound wide enough for every
composite built in the tests.
"""

import random

import pytest

from polygame.elements import atom, fun, mset, pair, star, tup
from polygame.fixtures import ALL_FIXTURES, COIN, EMPTY, ONEWAY, TRAP, UNIT
from polygame.simulation import Simulation, equivalent

FIXTURE_GAMES = [UNIT, COIN, TRAP, ONEWAY]  # EMPTY kept separate: no states
FIXTURE_ITEMS = sorted(ALL_FIXTURES.items())


def eq(s: Simulation, t: Simulation, mode: str = "full") -> bool:
    """Morphism equality: two-sided span iso respecting the transports."""
    bound = max(16, len(s.apex), len(t.apex))
    return equivalent(s, t, mode, search_bound=bound) is not None


def valid_by_definition(s: Simulation) -> bool:
    """The simulation condition, written out as plain loops.

    A diagram is valid when the legs/transports are total with the right
    domains and, for every apex point r and source move a1:

        alpha gives a counter-move a2 of the target,
        for every target counter d2 beta gives a source counter d1,
        and gamma names an apex point sitting over both successor states.

    This is the oracle the checker is graded against; it never calls
    check_simulation.
    """
    src, dst = s.src, s.dst
    for r in s.apex:
        if r not in s.leg1 or r not in s.leg2:
            return False
        i1, i2 = s.leg1[r], s.leg2[r]
        if i1 not in src.states or i2 not in dst.states:
            return False
        for a1 in src.moves_at(i1):
            if (r, a1) not in s.alpha:
                return False
            a2 = s.alpha[(r, a1)]
            if a2 not in dst.moves_at(i2):
                return False
            for d2 in dst.counters_at(i2, a2):
                if (r, a1, d2) not in s.beta or (r, a1, d2) not in s.gamma:
                    return False
                d1 = s.beta[(r, a1, d2)]
                if d1 not in src.counters_at(i1, a1):
                    return False
                r2 = s.gamma[(r, a1, d2)]
                if r2 not in s.apex:
                    return False
                if s.leg1[r2] != src.next_state(i1, a1, d1):
                    return False
                if s.leg2[r2] != dst.next_state(i2, a2, d2):
                    return False
    # no stray table rows pointing at unknown apex points
    for (r, _a1) in s.alpha:
        if r not in s.apex:
            return False
    for (r, _a1, _d2) in s.beta:
        if r not in s.apex:
            return False
    for (r, _a1, _d2) in s.gamma:
        if r not in s.apex:
            return False
    return True


def tampered(sim: Simulation, rng: random.Random) -> Simulation:
    """Break one table entry of a valid simulation (for negative fuzzing).

    Returns a new Simulation with a single mutated row; the mutation is
    chosen so it *can* break validity but is not guaranteed to (e.g. a
    rerouted gamma may land on an equally good point) — callers must grade
    the result with the oracle rather than assume invalidity.
    """
    alpha = dict(sim.alpha)
    beta = dict(sim.beta)
    gamma = dict(sim.gamma)
    choices = []
    if alpha:
        choices.append("alpha")
    if beta:
        choices.append("beta")
    if gamma:
        choices.append("gamma")
    if not choices:
        return sim
    what = rng.choice(choices)
    if what == "alpha":
        key = rng.choice(sorted(alpha))
        i2 = sim.leg2[key[0]]
        moves = sorted(sim.dst.moves_at(i2)) or [atom("bogus")]
        alpha[key] = rng.choice(moves)
    elif what == "beta":
        key = rng.choice(sorted(beta))
        i1 = sim.leg1[key[0]]
        a1 = key[1]
        counters = sorted(sim.src.counters_at(i1, a1)) or [atom("bogus")]
        beta[key] = rng.choice(counters)
    else:
        key = rng.choice(sorted(gamma))
        gamma[key] = rng.choice(sorted(sim.apex))
    return Simulation(
        src=sim.src, dst=sim.dst, apex=sim.apex,
        leg1=sim.leg1, leg2=sim.leg2,
        alpha=alpha, beta=beta, gamma=gamma,
    )


def element_pool(depth: int = 3):
    """A spread of elements across every constructor, up to the given depth."""
    leaves = [atom("a"), atom("b"), atom("z9"), star()]
    pool = list(leaves)
    for _ in range(depth - 1):
        fresh = [
            pair(pool[0], pool[-1]),
            tup(),
            tup(pool[0], pool[1], pool[0]),
            mset([pool[0], pool[0], pool[1]]),
            fun({leaves[0]: pool[-1], leaves[1]: pool[0]}),
        ]
        pool.extend(fresh)
    return pool


@pytest.fixture
def rng():
    return random.Random(20260822)
