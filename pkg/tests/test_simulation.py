"""Simulation diagrams: the checker, composition, enrichment, equivalence."""

import random

import pytest

from polygame.elements import atom
from polygame.fixtures import COIN, ONEWAY, TRAP, UNIT
from polygame.laws import random_simulation
from polygame.limits import SearchRefused
from polygame.simulation import (
    Simulation,
    add,
    check_simulation,
    compose,
    equivalent,
    identity_sim,
    span_compose,
    span_equal,
    span_identity,
    underlying_span,
    zero_sim,
)
from polygame.synthesis import max_simulation

from conftest import FIXTURE_GAMES, eq, tampered, valid_by_definition


def composable_triple(rng):
    games = [rng.choice(FIXTURE_GAMES) for _ in range(4)]
    s = random_simulation(rng, games[0], games[1])
    t = random_simulation(rng, games[1], games[2])
    u = random_simulation(rng, games[2], games[3])
    return s, t, u


def test_identity_passes_checker():
    for g in FIXTURE_GAMES:
        assert check_simulation(identity_sim(g)) == []


def test_checker_matches_definition_on_valid_and_tampered(rng):
    agree = 0
    for n in range(200):
        src = rng.choice(FIXTURE_GAMES)
        dst = rng.choice(FIXTURE_GAMES)
        s = random_simulation(rng, src, dst)
        if n % 2 and len(s.apex):
            s = tampered(s, rng)
        assert (check_simulation(s) == []) == valid_by_definition(s)
        agree += 1
    assert agree == 200


def test_checker_names_the_offending_row(rng):
    s = max_simulation(COIN, COIN)
    bad = Simulation(
        src=s.src, dst=s.dst, apex=s.apex, leg1=s.leg1, leg2=s.leg2,
        alpha=s.alpha, beta={}, gamma=s.gamma,
    )
    problems = check_simulation(bad)
    assert problems and all(isinstance(p, str) for p in problems)


def test_compose_soundness_fuzzed(rng):
    for _ in range(40):
        s, t, _ = composable_triple(rng)
        assert check_simulation(compose(s, t)) == []


def test_compose_domain_mismatch_rejected():
    s = identity_sim(COIN)
    t = identity_sim(TRAP)
    with pytest.raises(ValueError):
        compose(s, t)


# compose(compose(s, t), u) ~ compose(s, compose(t, u))
def test_associativity_up_to_equivalence(rng):
    for _ in range(25):
        s, t, u = composable_triple(rng)
        lhs = compose(compose(s, t), u)
        rhs = compose(s, compose(t, u))
        assert eq(lhs, rhs)


# compose(id, s) ~ s ~ compose(s, id)
def test_identity_laws_up_to_equivalence(rng):
    for _ in range(25):
        src = rng.choice(FIXTURE_GAMES)
        dst = rng.choice(FIXTURE_GAMES)
        s = random_simulation(rng, src, dst)
        assert eq(compose(identity_sim(src), s), s)
        assert eq(compose(s, identity_sim(dst)), s)


# compose(s, add(t, t')) ~ add(compose(s, t), compose(s, t')) and dually
def test_composition_distributes_over_add(rng):
    for _ in range(15):
        a = rng.choice(FIXTURE_GAMES)
        b = rng.choice(FIXTURE_GAMES)
        c = rng.choice(FIXTURE_GAMES)
        s = random_simulation(rng, a, b)
        t1 = random_simulation(rng, b, c)
        t2 = random_simulation(rng, b, c)
        assert eq(compose(s, add(t1, t2)), add(compose(s, t1), compose(s, t2)))
        u = random_simulation(rng, c, a)
        assert eq(compose(add(t1, t2), u), add(compose(t1, u), compose(t2, u)))


def test_zero_annihilates_composition(rng):
    s = random_simulation(rng, COIN, TRAP)
    z = zero_sim(TRAP, ONEWAY)
    out = compose(s, z)
    assert len(out.apex) == 0
    assert eq(out, zero_sim(COIN, ONEWAY))


def test_add_is_commutative_and_unital(rng):
    s = random_simulation(rng, COIN, COIN)
    t = random_simulation(rng, COIN, COIN)
    assert eq(add(s, t), add(t, s))
    assert eq(add(s, zero_sim(COIN, COIN)), s)


def test_underlying_span_is_functorial(rng):
    for _ in range(20):
        s, t, _ = composable_triple(rng)
        left = span_compose(underlying_span(s), underlying_span(t))
        right = underlying_span(compose(s, t))
        assert span_equal(left, right)
    g = rng.choice(FIXTURE_GAMES)
    assert span_equal(underlying_span(identity_sim(g)), span_identity(g.states))


def test_equivalence_is_reflexive_and_symmetric(rng):
    for _ in range(20):
        s = random_simulation(rng, rng.choice(FIXTURE_GAMES), rng.choice(FIXTURE_GAMES))
        assert eq(s, s)
        assert eq(s, s, "span_only")
    s = random_simulation(rng, COIN, COIN)
    t = random_simulation(rng, COIN, COIN)
    assert eq(s, t) == eq(t, s)
    assert eq(s, t, "span_only") == eq(t, s, "span_only")


def test_full_equivalence_refines_span_equivalence(rng):
    for _ in range(30):
        s = random_simulation(rng, rng.choice(FIXTURE_GAMES), rng.choice(FIXTURE_GAMES))
        t = random_simulation(rng, s.src, s.dst)
        if eq(s, t):
            assert eq(s, t, "span_only")


def test_equivalence_distinguishes_transports():
    # two strategies for COIN over the same span: always-heads vs always-tails
    best = max_simulation(COIN, COIN)
    h = [s for s in COIN.states if s.key[1] == "h"][0]
    (flip,) = COIN.moves_at(h)
    land_h, land_t = sorted(COIN.counters_at(h, flip))
    s = best
    twisted_beta = {}
    for (r, a1, d2), d1 in best.beta.items():
        twisted_beta[(r, a1, d2)] = land_t if d1 == land_h else land_h
    # rebuild gamma to stay valid after the twist
    by_pair = {(best.leg1[r], best.leg2[r]): r for r in best.apex}
    twisted_gamma = {}
    ok = True
    for (r, a1, d2) in best.gamma:
        i1, i2 = best.leg1[r], best.leg2[r]
        n1 = COIN.next_state(i1, a1, twisted_beta[(r, a1, d2)])
        n2 = COIN.next_state(i2, best.alpha[(r, a1)], d2)
        if (n1, n2) not in by_pair:
            ok = False
            break
        twisted_gamma[(r, a1, d2)] = by_pair[(n1, n2)]
    assert ok
    t = Simulation(src=COIN, dst=COIN, apex=best.apex, leg1=best.leg1,
                   leg2=best.leg2, alpha=best.alpha, beta=twisted_beta,
                   gamma=twisted_gamma)
    assert check_simulation(t) == []
    assert eq(s, t, "span_only")
    assert not eq(s, t, "full")


def test_duplicated_apex_points_are_observable(rng):
    plain = random_simulation(rng, UNIT, COIN, dup_chance=0.0)
    fat = random_simulation(rng, UNIT, COIN, dup_chance=1.0)
    assert len(fat.apex) > len(plain.apex)
    assert not eq(plain, fat, "span_only")
    assert not eq(plain, fat, "full")


def test_search_bound_refusal_is_uniform():
    big = max_simulation(COIN, COIN)  # apex 4
    with pytest.raises(SearchRefused):
        equivalent(big, big, "full", search_bound=3)
    with pytest.raises(SearchRefused):
        equivalent(big, big, "span_only", search_bound=3)
    assert equivalent(big, big, "full", search_bound=4) is not None


def test_equivalence_rejects_mismatched_endpoints():
    with pytest.raises(ValueError):
        equivalent(identity_sim(COIN), identity_sim(TRAP))


def test_equivalent_returns_an_iso_that_matches_legs(rng):
    s = random_simulation(rng, COIN, COIN, dup_chance=0.5)
    t = random_simulation(rng, COIN, COIN, dup_chance=0.5)
    iso = equivalent(s, s, "full", search_bound=16)
    assert iso is not None
    for r, q in iso.mapping.items():
        assert s.leg1[r] == s.leg1[q]
        assert s.leg2[r] == s.leg2[q]
