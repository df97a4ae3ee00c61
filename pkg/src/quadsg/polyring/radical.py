"""Radical membership via the Rabinowitsch trick.

``f`` lies in the radical of ``I`` exactly when ``1`` lies in
``I + <1 - y*f>`` for a fresh variable ``y``.  Before building that larger
ideal, a cheap sound check tests whether ``f`` itself lies in ``I``; a
positive answer there settles membership without the extra variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import PreconditionError
from .groebner import Budget, groebner
from .poly import MultiPoly


@dataclass(frozen=True)
class RadicalAnswer:
    member: bool
    method: str  # "ideal" (f itself in the ideal), "rabinowitsch" or "trivial"
    pairs_processed: int = 0


def radical_query(
    f: MultiPoly,
    gens: Sequence[MultiPoly],
    budget: Budget | None = None,
    ideal_first: bool = True,
) -> RadicalAnswer:
    """Decide ``f in sqrt(<gens>)`` and report how the answer was reached."""
    gens = [g for g in gens if not g.is_zero()]
    if any(g.n != f.n for g in gens):
        raise PreconditionError("polynomials live in different rings")
    if f.is_zero():
        return RadicalAnswer(True, "trivial")
    if not gens:
        return RadicalAnswer(False, "trivial")
    budget = budget or Budget()
    if ideal_first:
        gb = groebner(gens, "degrevlex", budget)
        if gb.contains(f, budget.max_terms):
            return RadicalAnswer(True, "ideal", gb.stats.get("pairs_processed", 0))
    n = f.n
    y = MultiPoly.var(n, n + 1)
    lifted = [g.extend(1) for g in gens]
    lifted.append(MultiPoly.one(n + 1) - y * f.extend(1))
    gb = groebner(lifted, "degrevlex", budget, stop_on_unit=True)
    return RadicalAnswer(gb.is_unit(), "rabinowitsch", gb.stats.get("pairs_processed", 0))


def radical_member(
    f: MultiPoly,
    gens: Sequence[MultiPoly],
    budget: Budget | None = None,
    ideal_first: bool = True,
) -> bool:
    """True iff some power of ``f`` lies in the ideal generated by ``gens``.

    Raises ``ResourceLimitExceeded`` when the Groebner computation exceeds
    ``budget``; that outcome is "undecided", never "no".
    """
    return radical_query(f, gens, budget, ideal_first).member
