"""Who survives? Winning regions and strategies by greatest fixpoint.

Run with:  python3 demos/winning_regions.py
"""

from polygame.fixtures import COIN, ONEWAY, TRAP
from polygame.monoidal import dual
from polygame.simulation import check_simulation
from polygame.synthesis import (
    alfred_region,
    dominic_region,
    dominic_strategy,
    max_simulation,
)


def show_region(label, region):
    inside = ", ".join(sorted(e.key[1] for e in region.states)) or "(empty)"
    print(f"  {label:28s} {inside}")


def main():
    print("Alfred picks moves, Dominic picks counters.  A player's region is")
    print("the largest set of states they can keep the play inside forever.\n")

    show_region("alfred_region(TRAP)", alfred_region(TRAP))
    print("    ^ the only move at ok risks the trap counter, so nothing is safe")
    show_region("alfred_region(ONEWAY)", alfred_region(ONEWAY))
    print("    ^ same game minus the trap counter: ok loops safely")
    show_region("dominic_region(TRAP)", dominic_region(TRAP))
    print("    ^ Dominic may simply answer 'safe' -- every state is fine\n")

    print("A strategy is itself a simulation touching the one-point game;")
    print("the synthesizer's outputs always pass the validity checker:")
    st = dominic_strategy(ONEWAY)
    print(f"  dominic_strategy(ONEWAY): apex {len(st.apex)},"
          f" problems: {check_simulation(st) or 'none'}\n")

    print("The largest relation-shaped simulation between two games comes from")
    print("the same downward iteration, on pairs of states:")
    best = max_simulation(COIN, COIN)
    pairs = sorted(f"({best.leg1[r].key[1]},{best.leg2[r].key[1]})" for r in best.apex)
    print(f"  max_simulation(COIN, COIN): {' '.join(pairs)}\n")

    print("Duality bridge: Alfred's region in the dual is Dominic's region,")
    print("because dual moves are exactly counter-choosing functions:")
    for g, name in [(TRAP, "TRAP"), (ONEWAY, "ONEWAY"), (COIN, "COIN")]:
        lhs = sorted(e.key[1] for e in alfred_region(dual(g)).states)
        rhs = sorted(e.key[1] for e in dominic_region(g).states)
        print(f"  {name:7s} alfred(dual) = {lhs} == dominic = {rhs}: {lhs == rhs}")


if __name__ == "__main__":
    main()
