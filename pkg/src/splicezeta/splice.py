"""Splicing a diagram along an edge, and exact verification of the identity.

Splicing keeps both endpoints of the edge.  On each output diagram the far
endpoint loses its subtree and arrowheads and instead carries one arrowhead
whose decoration is its former outer product and whose (N, nu) pair is the
function/form weight of the removed side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import RatFuncS
from .diagram import (
    Arrowhead,
    Diagram,
    SpliceData,
    check_valid,
    edge_sides,
    ensure_cached,
    splice_data,
)
from .errors import DegenerateDenominator, NotAnEdge
from .refine import refine_all_arrows
from .zeta import L_MINUS_1_SQ, ZetaExpr, motivic_zeta, top_zeta


@dataclass(frozen=True)
class SpliceResult:
    left: Diagram
    right: Diagram
    data: SpliceData


def splice(diagram, edge_key):
    """Split the diagram along a node-edge into two decorated halves.

    `edge_key` is a pair of node ids.  Decorated arrowheads are refined away
    internally before the side weights are computed, so the result is well
    defined for spliced diagrams as well.
    """
    u, v = edge_key
    d = ensure_cached(diagram)
    d = refine_all_arrows(d)
    e = d.edge_between(u, v)
    if e is None:
        raise NotAnEdge(f"{u}-{v} is not a node-edge")
    u, v = e.u, e.v
    data = splice_data(d, e)
    u_side, v_side = edge_sides(d, e)

    def half(keep, stub, stub_pair):
        """Diagram keeping `keep` plus the stub endpoint with one arrowhead."""
        nodes = sorted(keep | {stub})
        edges = [f for f in d.edges if f.u in keep and f.v in keep]
        edges.append(e)
        arrows = [a for a in d.arrows if a.node in keep]
        outer = d.outer_product(stub, exclude_edge=e)
        arrows.append(Arrowhead(stub, outer, stub_pair[0], stub_pair[1]))
        caches = {k: val for k, val in d.caches.items() if k in keep or k == stub}
        return check_valid(Diagram(nodes, edges, arrows, caches))

    left = half(u_side, v, (data.M, data.i))
    right = half(v_side, u, (data.M_prime, data.i_prime))
    return SpliceResult(left=left, right=right, data=data)


def correction_term(m, m_prime, i, i_prime):
    """(L - 1)^2 * T^(M + M') / ((L^i - T^M) (L^i' - T^M'))."""
    if (m, i) == (0, 0) or (m_prime, i_prime) == (0, 0):
        raise DegenerateDenominator("correction term needs (M, i) != (0, 0)")
    return ZetaExpr.term(L_MINUS_1_SQ, ((i, m), (i_prime, m_prime)))


def correction_term_top(m, m_prime, i, i_prime):
    """1 / ((M s + i) (M' s + i'))."""
    if (m, i) == (0, 0) or (m_prime, i_prime) == (0, 0):
        raise DegenerateDenominator("correction term needs (M, i) != (0, 0)")
    return RatFuncS.from_term(1, [(m, i), (m_prime, i_prime)])


def verify_splice_motivic(diagram, edge_key):
    """Exact check of Z(G) = Z(G_L) + Z(G_R) - correction."""
    r = splice(diagram, edge_key)
    lhs = motivic_zeta(diagram)
    rhs = motivic_zeta(r.left) + motivic_zeta(r.right) - correction_term(
        *r.data.as_tuple())
    return lhs == rhs


def verify_splice_top(diagram, edge_key):
    """Exact check of the topological specialization of the splice identity."""
    r = splice(diagram, edge_key)
    lhs = top_zeta(diagram)
    rhs = top_zeta(r.left) + top_zeta(r.right) - correction_term_top(
        *r.data.as_tuple())
    return lhs == rhs
