"""Ground values and finite sets.

Every set-like thing in this library -- the states of a game, a fiber of
moves, the apex of a simulation -- is a finite set of *elements*.  An element
is a closed term over a small grammar:

    atom        a named token ("h", "go", "land_heads", ...)
    star        the unit point
    pair        an ordered pair of elements
    tuple       a finite word of elements (any length, order matters)
    mset        a finite multiset of elements (order ignored, copies kept)
    fun         a finite function, stored as its graph

Elements are immutable, hashable, and totally ordered by a global order, so
every enumeration downstream is reproducible byte for byte.  Multisets and
function graphs are canonicalised at construction; building the "same" value
twice always yields equal objects.

The atom name "star" is reserved (the wire format prints the unit point as
that bare string, and round-tripping must stay faithful).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping


_RANKS = ("atom", "star", "pair", "tuple", "mset", "fun")
_RANK_OF = {kind: n for n, kind in enumerate(_RANKS)}


class Element:
    """One immutable term of the ground grammar.

    Do not call the constructor directly -- use :func:`atom`, :func:`star`,
    :func:`pair`, :func:`tup`, :func:`mset`, :func:`fun`.  ``key`` is a nested
    tuple encoding used for ordering, hashing and equality.
    """

    __slots__ = ("kind", "data", "key", "_hash")

    def __init__(self, kind: str, data, key):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Element is immutable")

    # -- structure accessors ------------------------------------------------

    @property
    def name(self) -> str:
        """Atom name."""
        if self.kind != "atom":
            raise ValueError(f"not an atom: {self!r}")
        return self.data

    @property
    def fst(self) -> "Element":
        if self.kind != "pair":
            raise ValueError(f"not a pair: {self!r}")
        return self.data[0]

    @property
    def snd(self) -> "Element":
        if self.kind != "pair":
            raise ValueError(f"not a pair: {self!r}")
        return self.data[1]

    @property
    def items(self) -> tuple:
        """Components of a tuple or mset, or the (key, value) pairs of a fun."""
        if self.kind not in ("tuple", "mset", "fun"):
            raise ValueError(f"no items: {self!r}")
        return self.data

    def apply(self, arg: "Element") -> "Element":
        """Look ``arg`` up in a fun element's graph."""
        if self.kind != "fun":
            raise ValueError(f"not a fun: {self!r}")
        for k, v in self.data:
            if k == arg:
                return v
        raise KeyError(f"{arg!r} not in domain of {self!r}")

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Element) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.key < other.key

    def __le__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.key <= other.key

    def __gt__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.key > other.key

    def __ge__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.key >= other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.text()

    def text(self) -> str:
        """Compact human-readable rendering (diagnostics, not the wire format)."""
        k = self.kind
        if k == "atom":
            return self.data
        if k == "star":
            return "*"
        if k == "pair":
            return f"({self.data[0].text()}, {self.data[1].text()})"
        if k == "tuple":
            return "[" + ", ".join(e.text() for e in self.data) + "]"
        if k == "mset":
            return "{" + ", ".join(e.text() for e in self.data) + "}"
        if k == "fun":
            if not self.data:
                return "{=>}"
            return "{" + ", ".join(f"{a.text()}=>{b.text()}" for a, b in self.data) + "}"
        raise AssertionError(k)


def atom(name: str) -> Element:
    """A named token.  The name must be a nonempty string, and not "star"."""
    if not isinstance(name, str) or not name:
        raise ValueError("atom name must be a nonempty string")
    if name == "star":
        raise ValueError('atom name "star" is reserved for the unit point')
    return Element("atom", name, (0, name))


_STAR = Element("star", None, (1,))


def star() -> Element:
    """The unit point."""
    return _STAR


def pair(a: Element, b: Element) -> Element:
    _want(a)
    _want(b)
    return Element("pair", (a, b), (2, a.key, b.key))


def tup(*items: Element) -> Element:
    """A word: finite ordered sequence, any length (including zero)."""
    for e in items:
        _want(e)
    data = tuple(items)
    return Element("tuple", data, (3, tuple(e.key for e in data)))


def mset(items: Iterable[Element]) -> Element:
    """A finite multiset; the canonical form stores copies in sorted order."""
    data = sorted(items, key=lambda e: e.key)
    for e in data:
        _want(e)
    data = tuple(data)
    return Element("mset", data, (4, tuple(e.key for e in data)))


def fun(graph: Mapping[Element, Element] | Iterable[tuple[Element, Element]]) -> Element:
    """A finite function given by its graph; keys must be distinct."""
    if isinstance(graph, Mapping):
        entries = list(graph.items())
    else:
        entries = list(graph)
    for k, v in entries:
        _want(k)
        _want(v)
    entries.sort(key=lambda kv: kv[0].key)
    for (k1, _), (k2, _) in zip(entries, entries[1:]):
        if k1 == k2:
            raise ValueError(f"duplicate key in function graph: {k1!r}")
    data = tuple(entries)
    return Element("fun", data, (5, tuple((k.key, v.key) for k, v in data)))


def _want(e) -> None:
    if not isinstance(e, Element):
        raise TypeError(f"expected an Element, got {type(e).__name__}")


def canonicalize(e: Element) -> Element:
    """Rebuild an element bottom-up into canonical form.

    Constructors already canonicalise, so this is the identity on every value
    built through the public API; it exists as an explicit normaliser (and as
    the thing property tests pin down: idempotent, order-preserving).
    """
    k = e.kind
    if k in ("atom", "star"):
        return e
    if k == "pair":
        return pair(canonicalize(e.data[0]), canonicalize(e.data[1]))
    if k == "tuple":
        return tup(*(canonicalize(x) for x in e.data))
    if k == "mset":
        return mset(canonicalize(x) for x in e.data)
    if k == "fun":
        return fun([(canonicalize(a), canonicalize(b)) for a, b in e.data])
    raise AssertionError(k)


class FiniteSet:
    """An immutable finite set of elements, kept in canonical sorted order.

    Iteration order is the global element order, so two equal sets always
    enumerate identically.  Duplicates in the input collapse.
    """

    __slots__ = ("_items", "_index")

    def __init__(self, items: Iterable[Element] = ()):
        seen = {}
        for e in items:
            _want(e)
            seen[e] = None
        ordered = tuple(sorted(seen, key=lambda e: e.key))
        object.__setattr__(self, "_items", ordered)
        object.__setattr__(self, "_index", frozenset(ordered))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("FiniteSet is immutable")

    @property
    def items(self) -> tuple:
        return self._items

    def __iter__(self) -> Iterator[Element]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, e) -> bool:
        return e in self._index

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and self._items == other._items

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return "FiniteSet{" + ", ".join(e.text() for e in self._items) + "}"

    def union(self, other: "FiniteSet") -> "FiniteSet":
        return FiniteSet(self._items + other._items)


EMPTY_SET = FiniteSet()


def product_elements(*sets: FiniteSet) -> list[tuple[Element, ...]]:
    """Cartesian product in canonical (lexicographic) order."""
    return list(itertools.product(*(s.items for s in sets)))


def enumerate_functions(dom: FiniteSet, cod: FiniteSet) -> list[Element]:
    """Every function ``dom -> cod`` as a fun element, in canonical order.

    The order is lexicographic in the choice of value along the sorted domain.
    An empty domain yields exactly the empty function; an empty codomain with
    a nonempty domain yields nothing.
    """
    keys = dom.items
    out = []
    for choice in itertools.product(cod.items, repeat=len(keys)):
        out.append(fun(zip(keys, choice)))
    return out
