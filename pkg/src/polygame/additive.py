"""Sums of games, projections and injections, and the two trivial layers.

The sum of two games is their tagged disjoint union: play happens on the left
or on the right and never crosses.  It is simultaneously a product and a
coproduct (a biproduct): injections and projections compose to identities or
to the zero simulation, and pairing/copairing are built from them with the
sum of simulations.

Two degenerate constructions bracket every game: ``free_game`` puts no moves
on a set of positions (maps *out* of it are trivial to come by) and
``cofree_game`` puts exactly one committed move on each position (maps *into*
it are).  ``adjoint_transpose`` converts between simulations touching these
games and bare spans of positions, in both directions, losslessly.
"""

from __future__ import annotations

from typing import Iterable

from .elements import FiniteSet, atom, pair
from .games import Game
from .simulation import Simulation, Span, add, compose, validate_span, zero_sim

_L = atom("L")
_R = atom("R")


def zero_game() -> Game:
    """No positions at all: the unit of the sum."""
    return Game(FiniteSet(), {}, {}, {})


def oplus(p1: Game, p2: Game) -> Game:
    """Tagged disjoint union; every layer is tagged, nothing is shared."""
    states = []
    moves = {}
    counters = {}
    nxt = {}
    for tag, p in ((_L, p1), (_R, p2)):
        for i in p.states:
            ti = pair(tag, i)
            states.append(ti)
            moves[ti] = FiniteSet(pair(tag, a) for a in p.moves_at(i))
            for a in p.moves_at(i):
                ta = pair(tag, a)
                counters[(ti, ta)] = FiniteSet(pair(tag, d) for d in p.counters_at(i, a))
                for d in p.counters_at(i, a):
                    nxt[(ti, ta, pair(tag, d))] = pair(tag, p.next_state(i, a, d))
    return Game(FiniteSet(states), moves, counters, nxt)


def bigoplus(games: Iterable[Game]) -> Game:
    """Right-to-left fold of the binary sum; the empty sum is the zero game."""
    gs = list(games)
    if not gs:
        return zero_game()
    out = gs[-1]
    for g in reversed(gs[:-1]):
        out = oplus(g, out)
    return out


def injection(p1: Game, p2: Game, side: int) -> Simulation:
    """The coprojection of one summand into the sum (side 1 or 2)."""
    tag, p = {1: (_L, p1), 2: (_R, p2)}[side]
    dst = oplus(p1, p2)
    apex = p.states
    leg1 = {i: i for i in apex}
    leg2 = {i: pair(tag, i) for i in apex}
    alpha = {}
    beta = {}
    gamma = {}
    for i in apex:
        for a in p.moves_at(i):
            alpha[(i, a)] = pair(tag, a)
            for d in p.counters_at(i, a):
                beta[(i, a, pair(tag, d))] = d
                gamma[(i, a, pair(tag, d))] = p.next_state(i, a, d)
    return Simulation(p, dst, apex, leg1, leg2, alpha, beta, gamma)


def projection(p1: Game, p2: Game, side: int) -> Simulation:
    """The projection of the sum onto one summand (side 1 or 2)."""
    tag, p = {1: (_L, p1), 2: (_R, p2)}[side]
    src = oplus(p1, p2)
    apex = p.states
    leg1 = {i: pair(tag, i) for i in apex}
    leg2 = {i: i for i in apex}
    alpha = {}
    beta = {}
    gamma = {}
    for i in apex:
        for a in p.moves_at(i):
            alpha[(i, pair(tag, a))] = a
            for d in p.counters_at(i, a):
                beta[(i, pair(tag, a), d)] = pair(tag, d)
                gamma[(i, pair(tag, a), d)] = p.next_state(i, a, d)
    return Simulation(src, p, apex, leg1, leg2, alpha, beta, gamma)


def copair(s1: Simulation, s2: Simulation) -> Simulation:
    """[s1, s2]: P1 (+) P2 -> Q from s1: P1 -> Q and s2: P2 -> Q."""
    if s1.dst != s2.dst:
        raise ValueError("copair: simulations do not share a target")
    src = oplus(s1.src, s2.src)
    apex_pts = {}
    for tag, s in ((_L, s1), (_R, s2)):
        for r in s.apex:
            apex_pts[(tag, r)] = pair(tag, r)
    apex = FiniteSet(apex_pts.values())
    leg1 = {}
    leg2 = {}
    alpha = {}
    beta = {}
    gamma = {}
    for tag, s in ((_L, s1), (_R, s2)):
        for r in s.apex:
            tr = apex_pts[(tag, r)]
            leg1[tr] = pair(tag, s.leg1[r])
            leg2[tr] = s.leg2[r]
            for a1 in s.src.moves_at(s.leg1[r]):
                a2 = s.alpha[(r, a1)]
                alpha[(tr, pair(tag, a1))] = a2
                for d2 in s.dst.counters_at(s.leg2[r], a2):
                    beta[(tr, pair(tag, a1), d2)] = pair(tag, s.beta[(r, a1, d2)])
                    gamma[(tr, pair(tag, a1), d2)] = apex_pts[(tag, s.gamma[(r, a1, d2)])]
    return Simulation(src, s1.dst, apex, leg1, leg2, alpha, beta, gamma)


def pairing(t1: Simulation, t2: Simulation) -> Simulation:
    """<t1, t2>: Q -> P1 (+) P2, as the sum of the injected components."""
    if t1.src != t2.src:
        raise ValueError("pairing: simulations do not share a source")
    into1 = injection(t1.dst, t2.dst, 1)
    into2 = injection(t1.dst, t2.dst, 2)
    return add(compose(t1, into1), compose(t2, into2))


def free_game(base: FiniteSet) -> Game:
    """Positions with no moves at all."""
    return Game(base, {i: FiniteSet() for i in base}, {}, {})


def cofree_game(base: FiniteSet) -> Game:
    """Positions with exactly one committed move each (and no counters)."""
    return Game(
        base,
        {i: FiniteSet([i]) for i in base},
        {(i, i): FiniteSet() for i in base},
        {},
    )


def adjoint_transpose(side: str, direction: str, datum, base: FiniteSet, game: Game):
    """Convert between simulations touching a trivial layer and bare spans.

    ``side="left"``: simulations free_game(base) -> game correspond to spans
    base -> game.states.  ``side="right"``: simulations game -> cofree_game(base)
    correspond to spans game.states -> base.  ``direction`` is ``"to_span"``
    or ``"to_sim"``.  Both round trips are exact on raw data.
    """
    if side not in ("left", "right") or direction not in ("to_span", "to_sim"):
        raise ValueError(f"unknown transpose {side!r}/{direction!r}")

    if direction == "to_span":
        s = datum
        if not isinstance(s, Simulation):
            raise TypeError("to_span expects a Simulation")
        if side == "left":
            return Span(base, game.states, s.apex, dict(s.leg1), dict(s.leg2))
        return Span(game.states, base, s.apex, dict(s.leg1), dict(s.leg2))

    sp = datum
    if not isinstance(sp, Span):
        raise TypeError("to_sim expects a Span")
    bad = validate_span(sp)
    if bad:
        raise ValueError("invalid span: " + "; ".join(bad))
    if side == "left":
        src = free_game(base)
        return Simulation(
            src, game, sp.apex, dict(sp.leg1), dict(sp.leg2), {}, {}, {}
        )
    dst = cofree_game(base)
    alpha = {}
    for r in sp.apex:
        for a1 in game.moves_at(sp.leg1[r]):
            alpha[(r, a1)] = sp.leg2[r]
    return Simulation(game, dst, sp.apex, dict(sp.leg1), dict(sp.leg2), alpha, {}, {})


__all__ = [
    "zero_game",
    "oplus",
    "bigoplus",
    "injection",
    "projection",
    "copair",
    "pairing",
    "free_game",
    "cofree_game",
    "adjoint_transpose",
    "zero_sim",
]
