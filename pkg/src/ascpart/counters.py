"""Operation tallies for the instrumented algorithm variants.

The counting convention, used consistently by `traversal` and `generate`:
each executed assignment line counts once (a line assigning a pair like
``(x, y) <- ...`` is still one line), every evaluation of a while/if
condition counts once, and ``visits`` counts visited nodes / emitted
compositions rather than visit statements.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OpCounters:
    assignments: int = 0
    bool_evals: int = 0
    pushes: int = 0
    pops: int = 0
    visits: int = 0

    def __post_init__(self):
        if min(self.assignments, self.bool_evals, self.pushes, self.pops, self.visits) < 0:
            raise ValueError("counters must be nonnegative")
