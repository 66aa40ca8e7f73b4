"""Winning-region computation and strategy extraction.

Alfred survives at a position when some move of his keeps every possible
counter inside the surviving positions -- the largest such set is his winning
region, computed by peeling losing positions until nothing changes (at most
one round per position).  Dominic's region is the mirror image: every move
must admit some counter that stays inside.

A winning region is exactly the footprint of a simulation touching the unit
game: an Alfred strategy is a simulation unit -> P, a Dominic strategy a
simulation P -> unit, and the extracted strategies take the first surviving
witness in canonical order, so reruns are reproducible.  ``max_simulation``
generalises both: the largest relation-shaped simulation between two games,
again by peeling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import Element, FiniteSet, pair, star
from .fixtures import unit_game
from .games import Game
from .simulation import Simulation


@dataclass(frozen=True)
class Region:
    """A set of positions where one of the players can keep play alive."""

    side: str  # "alfred" | "dominic"
    states: FiniteSet


def alfred_region(p: Game) -> Region:
    """Largest H with: every i in H has a move whose counters all stay in H."""
    alive = set(p.states)
    changed = True
    while changed:
        changed = False
        for i in list(alive):
            if not any(
                all(p.next_state(i, a, d) in alive for d in p.counters_at(i, a))
                for a in p.moves_at(i)
            ):
                alive.discard(i)
                changed = True
    return Region("alfred", FiniteSet(alive))


def dominic_region(p: Game) -> Region:
    """Largest H with: every move from i in H has a counter staying in H."""
    alive = set(p.states)
    changed = True
    while changed:
        changed = False
        for i in list(alive):
            if not all(
                any(p.next_state(i, a, d) in alive for d in p.counters_at(i, a))
                for a in p.moves_at(i)
            ):
                alive.discard(i)
                changed = True
    return Region("dominic", FiniteSet(alive))


def alfred_strategy(p: Game) -> Simulation:
    """A simulation unit -> p surviving forever on the Alfred region.

    The apex is the region itself (empty region = the zero simulation); the
    chosen move at each position is the first one, in canonical order, whose
    counters all stay inside the region.
    """
    unit = unit_game()
    region = alfred_region(p).states
    s = star()
    leg1 = {i: s for i in region}
    leg2 = {i: i for i in region}
    alpha = {}
    beta = {}
    gamma = {}
    for i in region:
        chosen = None
        for a in p.moves_at(i):
            if all(p.next_state(i, a, d) in region for d in p.counters_at(i, a)):
                chosen = a
                break
        alpha[(i, s)] = chosen
        for d2 in p.counters_at(i, chosen):
            beta[(i, s, d2)] = s
            gamma[(i, s, d2)] = p.next_state(i, chosen, d2)
    return Simulation(unit, p, region, leg1, leg2, alpha, beta, gamma)


def dominic_strategy(p: Game) -> Simulation:
    """A simulation p -> unit surviving forever on the Dominic region."""
    unit = unit_game()
    region = dominic_region(p).states
    s = star()
    leg1 = {i: i for i in region}
    leg2 = {i: s for i in region}
    alpha = {}
    beta = {}
    gamma = {}
    for i in region:
        for a in p.moves_at(i):
            alpha[(i, a)] = s
            chosen = None
            for d in p.counters_at(i, a):
                if p.next_state(i, a, d) in region:
                    chosen = d
                    break
            beta[(i, a, s)] = chosen
            gamma[(i, a, s)] = p.next_state(i, a, chosen)
    return Simulation(p, unit, region, leg1, leg2, alpha, beta, gamma)


def sim_exists(p: Game, side: str) -> bool:
    """Whether the named player has anywhere to survive at all."""
    if side == "alfred":
        return len(alfred_region(p).states) > 0
    if side == "dominic":
        return len(dominic_region(p).states) > 0
    raise ValueError(f"unknown side {side!r}")


def max_simulation(p1: Game, p2: Game) -> Simulation:
    """The largest relation-shaped simulation p1 -> p2.

    Peel pairs (i1, i2) until every survivor satisfies: for every p1-move
    some p2-move answers, with every p2-counter pulled back to a p1-counter
    landing the pair inside the relation.  Witnesses are first-in-canonical-
    order; the apex is the relation itself (one point per surviving pair).
    """
    rel = {(i1, i2) for i1 in p1.states for i2 in p2.states}

    def pair_ok(i1: Element, i2: Element) -> bool:
        for a1 in p1.moves_at(i1):
            if not any(
                all(
                    any(
                        (p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2)) in rel
                        for d1 in p1.counters_at(i1, a1)
                    )
                    for d2 in p2.counters_at(i2, a2)
                )
                for a2 in p2.moves_at(i2)
            ):
                return False
        return True

    changed = True
    while changed:
        changed = False
        for k in sorted(rel, key=lambda t: (t[0].key, t[1].key)):
            if k in rel and not pair_ok(*k):
                rel.discard(k)
                changed = True

    pts = {k: pair(k[0], k[1]) for k in sorted(rel, key=lambda t: (t[0].key, t[1].key))}
    apex = FiniteSet(pts.values())
    leg1 = {r: k[0] for k, r in pts.items()}
    leg2 = {r: k[1] for k, r in pts.items()}
    alpha = {}
    beta = {}
    gamma = {}
    for (i1, i2), r in pts.items():
        for a1 in p1.moves_at(i1):
            a2_found = None
            for a2 in p2.moves_at(i2):
                if all(
                    any(
                        (p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2)) in rel
                        for d1 in p1.counters_at(i1, a1)
                    )
                    for d2 in p2.counters_at(i2, a2)
                ):
                    a2_found = a2
                    break
            alpha[(r, a1)] = a2_found
            for d2 in p2.counters_at(i2, a2_found):
                d1_found = None
                for d1 in p1.counters_at(i1, a1):
                    if (p1.next_state(i1, a1, d1), p2.next_state(i2, a2_found, d2)) in rel:
                        d1_found = d1
                        break
                beta[(r, a1, d2)] = d1_found
                gamma[(r, a1, d2)] = pts[
                    (p1.next_state(i1, a1, d1_found), p2.next_state(i2, a2_found, d2))
                ]
    return Simulation(p1, p2, apex, leg1, leg2, alpha, beta, gamma)
