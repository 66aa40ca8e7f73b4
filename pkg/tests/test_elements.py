"""The element grammar: ordering, canonical forms, function enumeration."""

import hypothesis
import hypothesis.strategies as strat
import pytest

from polygame.elements import (
    FiniteSet,
    atom,
    canonicalize,
    enumerate_functions,
    fun,
    mset,
    pair,
    product_elements,
    star,
    tup,
)

from conftest import element_pool


def elements(max_depth: int = 3):
    leaf = strat.one_of(
        strat.sampled_from("abcxyz").map(atom),
        strat.just(star()),
    )
    return strat.recursive(
        leaf,
        lambda inner: strat.one_of(
            strat.tuples(inner, inner).map(lambda p: pair(*p)),
            strat.lists(inner, max_size=3).map(lambda xs: tup(*xs)),
            strat.lists(inner, max_size=3).map(mset),
            strat.lists(strat.tuples(leaf, inner), max_size=3, unique_by=lambda kv: kv[0]).map(fun),
        ),
        max_leaves=2 ** max_depth,
    )


def test_total_order_is_deterministic():
    pool = element_pool()
    once = sorted(pool)
    again = sorted(reversed(pool))
    assert once == again


def test_equality_is_structural():
    assert atom("a") == atom("a")
    assert pair(atom("a"), star()) == pair(atom("a"), star())
    assert tup(atom("a")) != mset([atom("a")])
    assert tup() != star()


def test_star_atom_name_is_reserved():
    with pytest.raises(ValueError):
        atom("star")


def test_mset_ignores_insertion_order():
    a, b = atom("a"), atom("b")
    assert mset([b, a, b]) == mset([b, b, a])
    assert mset([a]) != mset([a, a])


# canonicalize(canonicalize(e)) = canonicalize(e)
@hypothesis.given(elements())
def test_canonicalize_idempotent(e):
    assert canonicalize(canonicalize(e)) == canonicalize(e)


@hypothesis.given(strat.lists(elements(), max_size=4))
def test_canonicalize_mset_order_insensitive(xs):
    assert canonicalize(mset(xs)) == canonicalize(mset(list(reversed(xs))))


@hypothesis.given(elements())
def test_key_round_trips_to_same_element(e):
    # the sort key doubles as identity: equal keys, equal elements
    assert (e.key == e.key) and (e == e)
    other = canonicalize(e)
    assert (other.key == e.key) == (other == e)


def test_fun_application_and_duplicate_keys():
    f = fun({atom("x"): atom("u"), atom("y"): atom("v")})
    assert f.apply(atom("x")) == atom("u")
    with pytest.raises(KeyError):
        f.apply(atom("w"))
    with pytest.raises(ValueError):
        fun([(atom("x"), atom("u")), (atom("x"), atom("v"))])


def test_enumerate_functions_counts():
    a, b, c = atom("a"), atom("b"), atom("c")
    x, y = atom("x"), atom("y")
    # |cod| ^ |dom|: 0^0 = 1, 2^1 = 2, 3^2 = 9
    assert len(enumerate_functions(FiniteSet([]), FiniteSet([]))) == 1
    assert len(enumerate_functions(FiniteSet([a]), FiniteSet([x, y]))) == 2
    fns = enumerate_functions(FiniteSet([a, b]), FiniteSet([x, y, c]))
    assert len(fns) == 9
    assert len(set(fns)) == 9
    for f in fns:
        assert f.apply(a) in (x, y, c)
        assert f.apply(b) in (x, y, c)


def test_enumerate_functions_empty_cod_nonempty_dom():
    assert enumerate_functions(FiniteSet([atom("a")]), FiniteSet([])) == []


def test_product_elements_counts():
    xs = FiniteSet([atom("a"), atom("b")])
    ys = FiniteSet([atom("x"), atom("y"), atom("z")])
    assert len(product_elements(xs, ys)) == 6
    assert product_elements() == [()]


def test_finite_set_is_ordered_and_deduplicated():
    s = FiniteSet([atom("b"), atom("a"), atom("b")])
    assert list(s) == sorted([atom("a"), atom("b")])
    assert len(s) == 2
    assert atom("a") in s and atom("c") not in s
