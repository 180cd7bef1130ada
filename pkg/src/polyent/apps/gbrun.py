"""Reduced Groebner basis runs with elimination and consistency verdicts."""

from __future__ import annotations

from ..groebner import elimination_ideal, groebner
from ..poly import MonomialOrder


def run_gb(ring, polys, order_kind="lex", eliminate=None):
    """Compute the reduced basis; optionally also the elimination ideal
    for a list of variable names (made greatest in the order)."""
    eliminate = list(eliminate or [])
    if eliminate:
        if order_kind != "lex":
            raise ValueError("elimination requires the lex order")
        rest = [v for v in ring if v not in eliminate]
        precedence = tuple([ring.index(v) for v in eliminate]
                           + [ring.index(v) for v in rest])
        order = MonomialOrder("lex", precedence)
    else:
        order = MonomialOrder(order_kind)
    gb = groebner(polys, order)
    consistent = not gb.is_trivial()
    elim = None
    if eliminate:
        elim = elimination_ideal(gb, len(eliminate))
    return {
        "order": order,
        "basis": gb,
        "consistent": consistent,
        "elimination": elim,
    }
