"""Sizing and search guards.

Several constructions (linear implication, negation, the bounded exponential)
can blow up combinatorially even on tiny inputs.  The library never silently
truncates: before materialising a fiber it computes the exact count
arithmetically and *refuses* past a ceiling.  Likewise the span-bijection
search behind morphism equality refuses, rather than guesses, above its
bound -- "refused" is a distinct outcome from "no".
"""

DEFAULT_MAX_ENUM = 10_000
DEFAULT_SEARCH_BOUND = 8


class SizeRefused(Exception):
    """A construction would enumerate more objects than the ceiling allows."""

    def __init__(self, what: str, count: int, ceiling: int):
        self.what = what
        self.count = count
        self.ceiling = ceiling
        super().__init__(f"{what}: would enumerate {count} objects (ceiling {ceiling})")


class SearchRefused(Exception):
    """An exhaustive search was declined because its space exceeds the bound."""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: search space of size {size} exceeds bound {bound}")


class EnumBudget:
    """A cumulative enumeration allowance for one construction.

    Per-fiber counts alone let a construction sneak past the ceiling by
    spreading work over many small fibers (a thousand states of ten moves
    each).  Every fiber's arithmetic precount is charged here *before* that
    fiber is materialised, so a construction refuses as soon as its running
    total would cross the ceiling, having built nothing oversized.
    """

    def __init__(self, what: str, ceiling: int):
        self.what = what
        self.ceiling = ceiling
        self.used = 0

    def charge(self, n: int) -> None:
        self.used += n
        if self.used > self.ceiling:
            raise SizeRefused(f"{self.what} (cumulative)", self.used, self.ceiling)
