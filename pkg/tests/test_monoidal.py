"""Tensor, internal hom, currying, evaluation, duals."""

import itertools

import pytest

from polygame.elements import FiniteSet, atom
from polygame.fixtures import ALL_FIXTURES, COIN, EMPTY, ONEWAY, TRAP, UNIT
from polygame.games import make_game, validate_game
from polygame.laws import random_simulation
from polygame.limits import SizeRefused
from polygame.monoidal import curry, dual, eval_sim, lollipop, tensor, tensor_sim, uncurry
from polygame.simulation import check_simulation, compose, identity_sim
from polygame.fixtures import unit_game

from conftest import FIXTURE_GAMES, eq


def state(g, name):
    return [s for s in g.states if s.key[1] == name][0]


def test_tensor_carrier_is_pointwise_product():
    g = tensor(COIN, TRAP)
    assert validate_game(g) == []
    assert len(g.states) == len(COIN.states) * len(TRAP.states)
    for st in g.states:
        i1, i2 = st.fst, st.snd
        assert len(g.moves_at(st)) == len(COIN.moves_at(i1)) * len(TRAP.moves_at(i2))
        for mv in g.moves_at(st):
            a1, a2 = mv.fst, mv.snd
            assert len(g.counters_at(st, mv)) == (
                len(COIN.counters_at(i1, a1)) * len(TRAP.counters_at(i2, a2))
            )
            for c in g.counters_at(st, mv):
                nxt = g.next_state(st, mv, c)
                assert nxt.fst == COIN.next_state(i1, a1, c.fst)
                assert nxt.snd == TRAP.next_state(i2, a2, c.snd)


def test_tensor_unit_is_neutral_on_carrier_counts():
    for g in FIXTURE_GAMES:
        t = tensor(g, unit_game())
        assert len(t.states) == len(g.states)
        for st in t.states:
            assert len(t.moves_at(st)) == len(g.moves_at(st.fst))


def test_tensor_with_empty_is_empty():
    assert len(tensor(COIN, EMPTY).states) == 0


def test_tensor_sim_is_functorial_enough(rng):
    # (u (x) v) composed: tensor respects identities and composition
    u = random_simulation(rng, COIN, COIN)
    v = random_simulation(rng, TRAP, TRAP)
    ident = tensor_sim(identity_sim(COIN), identity_sim(TRAP))
    assert eq(ident, identity_sim(tensor(COIN, TRAP)))
    u2 = random_simulation(rng, COIN, COIN)
    v2 = random_simulation(rng, TRAP, TRAP)
    lhs = tensor_sim(compose(u, u2), compose(v, v2))
    rhs = compose(tensor_sim(u, v), tensor_sim(u2, v2))
    assert eq(lhs, rhs)


def test_lollipop_frozen_move_counts():
    ell = lollipop(COIN, TRAP)
    # at (h, ok): 4 translation moves, 2 counters each; at (h, dead): none
    for st in ell.states:
        i2, i3 = st.fst.key[1], st.snd.key[1]
        n = len(ell.moves_at(st))
        if i3 == "dead":
            assert n == 0
        else:
            assert n == 4
            for mv in ell.moves_at(st):
                assert len(ell.counters_at(st, mv)) == 2

    ell2 = lollipop(TRAP, COIN)
    for st in ell2.states:
        i2 = st.fst.key[1]
        n = len(ell2.moves_at(st))
        if i2 == "ok":
            assert n == 4
        else:
            # nothing to translate: the single vacuous move has no counters
            assert n == 1
            (mv,) = ell2.moves_at(st)
            assert len(ell2.counters_at(st, mv)) == 0


# |moves at (i2,i3)| = Sigma_{f: A2(i2)->A3(i3)} Pi_{a2} |D2(i2,a2)| ^ |D3(i3,f(a2))|
def test_lollipop_move_count_formula_all_fixture_pairs():
    for (n2, p2), (n3, p3) in itertools.product(sorted(ALL_FIXTURES.items()), repeat=2):
        ell = lollipop(p2, p3)
        assert validate_game(ell) == [], (n2, n3)
        for st in ell.states:
            i2, i3 = st.fst, st.snd
            a2s = sorted(p2.moves_at(i2))
            total = 0
            for f in itertools.product(sorted(p3.moves_at(i3)), repeat=len(a2s)):
                prod = 1
                for a2, a3 in zip(a2s, f):
                    prod *= len(p2.counters_at(i2, a2)) ** len(p3.counters_at(i3, a3))
                total += prod
            assert len(ell.moves_at(st)) == total, (n2, n3, st)


def test_lollipop_counters_are_move_counter_pairs():
    ell = lollipop(COIN, TRAP)
    for st in ell.states:
        for mv in ell.moves_at(st):
            for c in ell.counters_at(st, mv):
                # a counter names a source move and a counter for its translation
                a2, d3 = c.fst, c.snd
                assert a2 in COIN.moves_at(st.fst)


# curry(uncurry(s)) == s and uncurry(curry(s)) == s, on the nose
def test_curry_uncurry_strict_round_trip(rng):
    for _ in range(40):
        p1 = rng.choice(FIXTURE_GAMES)
        p2 = rng.choice(FIXTURE_GAMES)
        p3 = rng.choice(FIXTURE_GAMES)
        s = random_simulation(rng, tensor(p1, p2), p3)
        cur = curry(s, p1, p2)
        assert check_simulation(cur) == []
        back = uncurry(cur, p1, p2, p3)
        assert back == s
        t = random_simulation(rng, p1, lollipop(p2, p3))
        unc = uncurry(t, p1, p2, p3)
        assert check_simulation(unc) == []
        assert curry(unc, p1, p2) == t


def test_curry_rejects_wrong_source():
    s = identity_sim(COIN)
    with pytest.raises(ValueError):
        curry(s, COIN, UNIT)


# eval o (curry(s) (x) id) ~ s
def test_eval_beta_law(rng):
    for _ in range(10):
        p1 = rng.choice([UNIT, COIN])
        p2 = rng.choice([UNIT, COIN])
        p3 = rng.choice([UNIT, COIN, TRAP])
        s = random_simulation(rng, tensor(p1, p2), p3)
        cur = curry(s, p1, p2)
        route = compose(tensor_sim(cur, identity_sim(p2)), eval_sim(p2, p3))
        assert eq(route, s)


def test_dual_frozen_counts_for_coin():
    d = dual(COIN)
    assert validate_game(d) == []
    assert d.states == COIN.states
    for st in d.states:
        # one choice function per counter of the single flip move
        assert len(d.moves_at(st)) == 2
        for mv in d.moves_at(st):
            assert len(d.counters_at(st, mv)) == 1


def test_dual_carrier_matches_lollipop_into_unit():
    for g in FIXTURE_GAMES:
        d = dual(g)
        ell = lollipop(g, unit_game())
        by_name = {st: [e for e in ell.states if e.fst == st][0] for st in d.states}
        for st in d.states:
            lst = by_name[st]
            assert len(d.moves_at(st)) == len(ell.moves_at(lst))
            counts = sorted(len(d.counters_at(st, m)) for m in d.moves_at(st))
            lcounts = sorted(len(ell.counters_at(lst, m)) for m in ell.moves_at(lst))
            assert counts == lcounts


def test_double_dual_is_not_involutive_on_elements():
    dd = dual(dual(TRAP))
    ok = state(TRAP, "ok")
    assert set(dd.moves_at(ok)) != set(TRAP.moves_at(ok))


def test_function_space_guard_refuses_loudly():
    s = atom("s")
    moves = FiniteSet([atom(f"a{i}") for i in range(6)])
    g = make_game(
        FiniteSet([s]),
        {s: moves},
        {(s, a): FiniteSet([atom(f"d{i}") for i in range(6)]) for a in moves},
        {(s, a, d): s for a in moves for d in FiniteSet([atom(f"d{i}") for i in range(6)])},
    )
    with pytest.raises(SizeRefused):
        lollipop(g, g)
