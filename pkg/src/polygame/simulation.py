"""Simulations between games, and the spans underneath them.

A simulation from game P1 to game P2 witnesses that Dominic can shadow in P1
whatever Alfred attempts in P2 -- concretely it is:

* an *apex*: a finite set of witness points, each lying over a pair of
  positions (``leg1`` into P1, ``leg2`` into P2);
* ``alpha``: for each witness r and P1-move a1 at leg1(r), a P2-move;
* ``beta``:  for each counter d2 to that P2-move, a P1-counter to a1;
* ``gamma``: a witness point over the pair of successor positions, i.e.

      leg1(gamma(r,a1,d2)) = P1.next(leg1 r, a1, beta(r,a1,d2))
      leg2(gamma(r,a1,d2)) = P2.next(leg2 r, alpha(r,a1), d2)

The apex is an arbitrary span, not merely a relation: two distinct witness
points may sit over the same pair of positions, and the difference is
observable (composition counts matched pairs).  Morphism equality throughout
the library is :func:`equivalent`, a fiber-respecting bijection search; in
``full`` mode the bijection must also transport alpha/beta/gamma on the nose,
in ``span_only`` mode just the legs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .elements import Element, FiniteSet, atom, pair
from .games import Game
from .limits import DEFAULT_SEARCH_BOUND, SearchRefused


@dataclass(frozen=True)
class Simulation:
    src: Game
    dst: Game
    apex: FiniteSet
    leg1: Mapping[Element, Element]
    leg2: Mapping[Element, Element]
    alpha: Mapping[tuple[Element, Element], Element]
    beta: Mapping[tuple[Element, Element, Element], Element]
    gamma: Mapping[tuple[Element, Element, Element], Element]

    def describe(self) -> str:
        return (
            f"Simulation(apex={len(self.apex)}, "
            f"src states={len(self.src.states)}, dst states={len(self.dst.states)})"
        )


def check_simulation(s: Simulation) -> list[str]:
    """Full validity diagnostics; empty list means s really is a simulation.

    Verifies leg totality, alpha/beta/gamma keyed by exactly the right
    triples, values landing in the right fibers, and the two successor
    equations tying gamma to the games' tables.
    """
    out: list[str] = []
    apex = set(s.apex)
    for name, leg, game in (("leg1", s.leg1, s.src), ("leg2", s.leg2, s.dst)):
        keys = set(leg.keys())
        for r in apex - keys:
            out.append(f"{name} missing at {r!r}")
        for r in keys - apex:
            out.append(f"{name} at non-apex point {r!r}")
        for r in keys & apex:
            if leg[r] not in game.states:
                out.append(f"{name}({r!r}) = {leg[r]!r} is not a state")
    if out:
        return out  # keys below would all be noise

    want_alpha = set()
    for r in s.apex:
        for a1 in s.src.moves_at(s.leg1[r]):
            want_alpha.add((r, a1))
    have_alpha = set(s.alpha.keys())
    for k in want_alpha - have_alpha:
        out.append(f"alpha missing at ({k[0]!r}, {k[1]!r})")
    for k in have_alpha - want_alpha:
        out.append(f"alpha at unexpected key ({k[0]!r}, {k[1]!r})")
    bad_alpha = set()
    for (r, a1) in want_alpha & have_alpha:
        a2 = s.alpha[(r, a1)]
        if a2 not in s.dst.moves_at(s.leg2[r]):
            out.append(f"alpha({r!r}, {a1!r}) = {a2!r} is not a move at {s.leg2[r]!r}")
            bad_alpha.add((r, a1))

    want_rest = set()
    for (r, a1) in (want_alpha & have_alpha) - bad_alpha:
        a2 = s.alpha[(r, a1)]
        for d2 in s.dst.counters_at(s.leg2[r], a2):
            want_rest.add((r, a1, d2))
    for table, name in ((s.beta, "beta"), (s.gamma, "gamma")):
        have = set(table.keys())
        for k in want_rest - have:
            out.append(f"{name} missing at ({k[0]!r}, {k[1]!r}, {k[2]!r})")
        for k in have - want_rest:
            out.append(f"{name} at unexpected key ({k[0]!r}, {k[1]!r}, {k[2]!r})")

    for k in want_rest & set(s.beta.keys()) & set(s.gamma.keys()):
        r, a1, d2 = k
        a2 = s.alpha[(r, a1)]
        d1 = s.beta[k]
        if d1 not in s.src.counters_at(s.leg1[r], a1):
            out.append(f"beta{k!r} = {d1!r} is not a counter to {a1!r}")
            continue
        g = s.gamma[k]
        if g not in apex:
            out.append(f"gamma{k!r} = {g!r} is not an apex point")
            continue
        want1 = s.src.next_state(s.leg1[r], a1, d1)
        want2 = s.dst.next_state(s.leg2[r], a2, d2)
        if s.leg1[g] != want1:
            out.append(f"gamma{k!r}: leg1 lands at {s.leg1[g]!r}, play lands at {want1!r}")
        if s.leg2[g] != want2:
            out.append(f"gamma{k!r}: leg2 lands at {s.leg2[g]!r}, play lands at {want2!r}")
    return out


def identity_sim(g: Game) -> Simulation:
    """The identity: apex = states, both legs the identity, transports copy."""
    leg = {i: i for i in g.states}
    alpha = {}
    beta = {}
    gamma = {}
    for i in g.states:
        for a in g.moves_at(i):
            alpha[(i, a)] = a
            for d in g.counters_at(i, a):
                beta[(i, a, d)] = d
                gamma[(i, a, d)] = g.next_state(i, a, d)
    return Simulation(g, g, g.states, leg, dict(leg), alpha, beta, gamma)


def compose(s: Simulation, t: Simulation) -> Simulation:
    """Diagrammatic composite: first s, then t (requires s.dst == t.src).

    The apex is the pullback -- every pair of witness points that agree on
    the middle game -- and the transports thread one through the other.
    """
    if s.dst != t.src:
        raise ValueError("compose: s.dst and t.src are different games")
    apex_pairs = [
        (r, q) for r in s.apex.items for q in t.apex.items if s.leg2[r] == t.leg1[q]
    ]
    points = {rq: pair(rq[0], rq[1]) for rq in apex_pairs}
    apex = FiniteSet(points.values())
    leg1 = {points[(r, q)]: s.leg1[r] for (r, q) in apex_pairs}
    leg2 = {points[(r, q)]: t.leg2[q] for (r, q) in apex_pairs}
    alpha = {}
    beta = {}
    gamma = {}
    for (r, q) in apex_pairs:
        p = points[(r, q)]
        for a1 in s.src.moves_at(s.leg1[r]):
            a2 = s.alpha[(r, a1)]
            a3 = t.alpha[(q, a2)]
            alpha[(p, a1)] = a3
            for d3 in t.dst.counters_at(t.leg2[q], a3):
                d2 = t.beta[(q, a2, d3)]
                beta[(p, a1, d3)] = s.beta[(r, a1, d2)]
                gamma[(p, a1, d3)] = pair(s.gamma[(r, a1, d2)], t.gamma[(q, a2, d3)])
    return Simulation(s.src, t.dst, apex, leg1, leg2, alpha, beta, gamma)


def zero_sim(src: Game, dst: Game) -> Simulation:
    """The empty simulation (the zero of the enrichment)."""
    return Simulation(src, dst, FiniteSet(), {}, {}, {}, {}, {})


def add(s: Simulation, t: Simulation) -> Simulation:
    """Tagged union of two parallel simulations (the sum of the enrichment)."""
    if s.src != t.src or s.dst != t.dst:
        raise ValueError("add: simulations are not parallel")
    tag_l, tag_r = atom("L"), atom("R")

    def build(sim: Simulation, tag: Element):
        pts = {r: pair(tag, r) for r in sim.apex}
        return pts

    pts_l = build(s, tag_l)
    pts_r = build(t, tag_r)
    apex = FiniteSet(list(pts_l.values()) + list(pts_r.values()))
    leg1 = {}
    leg2 = {}
    alpha = {}
    beta = {}
    gamma = {}
    for sim, pts in ((s, pts_l), (t, pts_r)):
        for r, p in pts.items():
            leg1[p] = sim.leg1[r]
            leg2[p] = sim.leg2[r]
            for a1 in sim.src.moves_at(sim.leg1[r]):
                alpha[(p, a1)] = sim.alpha[(r, a1)]
                a2 = sim.alpha[(r, a1)]
                for d2 in sim.dst.counters_at(sim.leg2[r], a2):
                    beta[(p, a1, d2)] = sim.beta[(r, a1, d2)]
                    gamma[(p, a1, d2)] = pts[sim.gamma[(r, a1, d2)]]
    return Simulation(s.src, s.dst, apex, leg1, leg2, alpha, beta, gamma)


# -- morphism equality -------------------------------------------------------


@dataclass(frozen=True)
class SpanIso:
    """A bijection of apexes witnessing that two simulations are the same map."""

    mapping: Mapping[Element, Element]


def equivalent(
    s: Simulation,
    t: Simulation,
    mode: str = "full",
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Optional[SpanIso]:
    """Search for an apex bijection identifying s and t.

    ``mode="span_only"`` asks the bijection to respect the two legs;
    ``mode="full"`` (the default, and the library's notion of morphism
    equality) additionally demands that alpha and beta agree on the nose and
    that gamma is transported by the bijection itself.

    Returns a :class:`SpanIso` or ``None``.  Raises :class:`SearchRefused`
    when an apex exceeds ``search_bound`` -- refusal is deliberately distinct
    from a "no".  Both simulations must individually be valid; garbage in,
    garbage out.

    The search never enumerates raw permutations.  Points are first split
    into classes by everything locally observable (legs, the full alpha and
    beta rows), the classes are refined through gamma until stable -- two
    points that end in different classes can never correspond -- and only
    the residual within-class freedom is resolved by backtracking with
    forward checking.
    """
    if mode not in ("full", "span_only"):
        raise ValueError(f"unknown mode {mode!r}")
    if s.src != t.src or s.dst != t.dst:
        raise ValueError("equivalent: simulations are not parallel")
    n = len(s.apex)
    if n != len(t.apex):
        return None
    if n > search_bound:
        raise SearchRefused("equivalent", n, search_bound)

    fibers_s: dict[tuple[Element, Element], list[Element]] = {}
    for r in s.apex:
        fibers_s.setdefault((s.leg1[r], s.leg2[r]), []).append(r)
    fibers_t: dict[tuple[Element, Element], list[Element]] = {}
    for q in t.apex:
        fibers_t.setdefault((t.leg1[q], t.leg2[q]), []).append(q)
    if set(fibers_s.keys()) != set(fibers_t.keys()):
        return None
    for k in fibers_s:
        if len(fibers_s[k]) != len(fibers_t[k]):
            return None

    if mode == "span_only":
        # any fiber-respecting pairing is a witness; take the canonical one
        sigma = {}
        for k, rs in fibers_s.items():
            for r, q in zip(rs, fibers_t[k]):
                sigma[r] = q
        return SpanIso(mapping=sigma)

    ids_s, ids_t = _refine_classes(s, t)
    if ids_s is None:
        return None

    by_class_t: dict[int, list[Element]] = {}
    for q in t.apex:
        by_class_t.setdefault(ids_t[q], []).append(q)

    out_edges: dict[Element, list] = {r: [] for r in s.apex}
    in_edges: dict[Element, list] = {r: [] for r in s.apex}
    for (r, a1, d2), g in s.gamma.items():
        out_edges[r].append((a1, d2, g))
        in_edges[g].append((r, a1, d2))

    def viable(r, q, sigma):
        for a1, d2, g in out_edges[r]:
            tg = t.gamma[(q, a1, d2)]
            if g == r:
                if tg != q:
                    return False
            elif g in sigma and tg != sigma[g]:
                return False
        for r2, a1, d2 in in_edges[r]:
            if r2 == r:
                continue
            if r2 in sigma and t.gamma[(sigma[r2], a1, d2)] != q:
                return False
        return True

    order = sorted(s.apex, key=lambda r: (ids_s[r], r.key))
    candidates = [by_class_t[ids_s[r]] for r in order]
    sigma: dict[Element, Element] = {}
    used: set[Element] = set()
    choice = [0] * n
    pos = 0
    while True:
        if pos == n:
            return SpanIso(mapping=dict(sigma))
        r = order[pos]
        found = False
        while choice[pos] < len(candidates[pos]):
            q = candidates[pos][choice[pos]]
            choice[pos] += 1
            if q in used or not viable(r, q, sigma):
                continue
            sigma[r] = q
            used.add(q)
            found = True
            break
        if found:
            pos += 1
            continue
        choice[pos] = 0
        pos -= 1
        if pos < 0:
            return None
        prev = order[pos]
        used.discard(sigma.pop(prev))


def _local_signature(sim: Simulation, r: Element) -> tuple:
    i1 = sim.leg1[r]
    i2 = sim.leg2[r]
    al = []
    be = []
    for a1 in sim.src.moves_at(i1):
        a2 = sim.alpha[(r, a1)]
        al.append((a1.key, a2.key))
        for d2 in sim.dst.counters_at(i2, a2):
            be.append((a1.key, d2.key, sim.beta[(r, a1, d2)].key))
    return (i1.key, i2.key, tuple(sorted(al)), tuple(sorted(be)))


def _refine_classes(s: Simulation, t: Simulation):
    """Joint partition refinement over both apexes.

    Starts from everything locally observable and folds in the class of each
    gamma target until stable.  Returns per-point class ids, or (None, None)
    when the class census of the two sides disagrees (no bijection can
    exist).
    """
    table: dict = {}
    ids_s = {}
    ids_t = {}
    for r in s.apex:
        sig = _local_signature(s, r)
        ids_s[r] = table.setdefault(sig, len(table))
    for q in t.apex:
        sig = _local_signature(t, q)
        ids_t[q] = table.setdefault(sig, len(table))

    def census_matches():
        cs: dict[int, int] = {}
        ct: dict[int, int] = {}
        for v in ids_s.values():
            cs[v] = cs.get(v, 0) + 1
        for v in ids_t.values():
            ct[v] = ct.get(v, 0) + 1
        return cs == ct

    n_classes = len(table)
    for _ in range(len(s.apex)):
        if not census_matches():
            return None, None
        table = {}
        new_s = {}
        new_t = {}
        for sim, ids, new in ((s, ids_s, new_s), (t, ids_t, new_t)):
            for r in sim.apex:
                i1 = sim.leg1[r]
                folded = []
                for a1 in sim.src.moves_at(i1):
                    a2 = sim.alpha[(r, a1)]
                    for d2 in sim.dst.counters_at(sim.leg2[r], a2):
                        folded.append((a1.key, d2.key, ids[sim.gamma[(r, a1, d2)]]))
                sig = (ids[r], tuple(sorted(folded)))
                new[r] = table.setdefault(sig, len(table))
        ids_s, ids_t = new_s, new_t
        if len(table) == n_classes:
            break
        n_classes = len(table)
    if not census_matches():
        return None, None
    return ids_s, ids_t


# -- bare spans ---------------------------------------------------------------


@dataclass(frozen=True)
class Span:
    """A span of finite sets: src <- apex -> dst."""

    src: FiniteSet
    dst: FiniteSet
    apex: FiniteSet
    leg1: Mapping[Element, Element]
    leg2: Mapping[Element, Element]


def validate_span(s: Span) -> list[str]:
    out = []
    apex = set(s.apex)
    for name, leg, base in (("leg1", s.leg1, s.src), ("leg2", s.leg2, s.dst)):
        keys = set(leg.keys())
        for r in apex - keys:
            out.append(f"{name} missing at {r!r}")
        for r in keys - apex:
            out.append(f"{name} at non-apex point {r!r}")
        for r in keys & apex:
            if leg[r] not in base:
                out.append(f"{name}({r!r}) not in base")
    return out


def underlying_span(s: Simulation) -> Span:
    """Forget the transports, keep the positions."""
    return Span(s.src.states, s.dst.states, s.apex, dict(s.leg1), dict(s.leg2))


def span_identity(base: FiniteSet) -> Span:
    leg = {i: i for i in base}
    return Span(base, base, base, leg, dict(leg))


def span_compose(s: Span, t: Span) -> Span:
    """Pullback composite of spans (matched pairs, multiplicities kept)."""
    if s.dst != t.src:
        raise ValueError("span_compose: middle bases differ")
    pairs = [(r, q) for r in s.apex.items for q in t.apex.items if s.leg2[r] == t.leg1[q]]
    points = {rq: pair(rq[0], rq[1]) for rq in pairs}
    return Span(
        s.src,
        t.dst,
        FiniteSet(points.values()),
        {points[rq]: s.leg1[rq[0]] for rq in pairs},
        {points[rq]: t.leg2[rq[1]] for rq in pairs},
    )


def _span_tally(s: Span) -> dict[tuple[Element, Element], int]:
    tally: dict[tuple[Element, Element], int] = {}
    for r in s.apex:
        k = (s.leg1[r], s.leg2[r])
        tally[k] = tally.get(k, 0) + 1
    return tally


def span_equal(s: Span, t: Span) -> bool:
    """Equality as spans-up-to-iso: same bases, same multiplicity over each pair."""
    if s.src != t.src or s.dst != t.dst:
        return False
    return _span_tally(s) == _span_tally(t)


def span_iso(s: Span, t: Span) -> Optional[Mapping[Element, Element]]:
    """A concrete leg-preserving bijection, if one exists."""
    if not span_equal(s, t):
        return None
    fibers_t: dict[tuple[Element, Element], list[Element]] = {}
    for q in t.apex:
        fibers_t.setdefault((t.leg1[q], t.leg2[q]), []).append(q)
    used: dict[tuple[Element, Element], int] = {}
    out = {}
    for r in s.apex:
        k = (s.leg1[r], s.leg2[r])
        n = used.get(k, 0)
        out[r] = fibers_t[k][n]
        used[k] = n + 1
    return out


def span_embedding(s: Span, t: Span) -> Optional[Mapping[Element, Element]]:
    """An injective leg-preserving map of apexes, if one exists.

    Exists exactly when t's multiplicity dominates s's over every pair of
    base points -- the witness that one simulation's span sits inside
    another's without matching it.
    """
    if s.src != t.src or s.dst != t.dst:
        return None
    tally_t = _span_tally(t)
    tally_s = _span_tally(s)
    for k, n in tally_s.items():
        if tally_t.get(k, 0) < n:
            return None
    fibers_t: dict[tuple[Element, Element], list[Element]] = {}
    for q in t.apex:
        fibers_t.setdefault((t.leg1[q], t.leg2[q]), []).append(q)
    used: dict[tuple[Element, Element], int] = {}
    out = {}
    for r in s.apex:
        k = (s.leg1[r], s.leg2[r])
        n = used.get(k, 0)
        out[r] = fibers_t[k][n]
        used[k] = n + 1
    return out
