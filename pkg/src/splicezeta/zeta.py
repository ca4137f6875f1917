"""Motivic, topological, and twisted topological zeta functions of diagrams.

All three are sums over the nodes, edges, and arrowheads of a realizable
refinement.  The node coefficient uses the full valency (node-edges plus
every arrowhead); this is the choice that reproduces the Euler number of
the punctured exceptional curve and the classical values.
"""

from __future__ import annotations

from .algebra import Poly2, RatFuncS, eval_at_one_with_cancellation
from .diagram import valency
from .errors import DegenerateDenominator, PoleAtOne
from .refine import realizable_refine

L_MINUS_1 = Poly2({(1, 0): 1, (0, 0): -1})
L_MINUS_1_SQ = L_MINUS_1 * L_MINUS_1


class ZetaExpr:
    """Finite sum of coeff(L) * prod of T^N / (L^nu - T^N) factors.

    Keys are sorted tuples of (nu, N) pairs; coefficients are integer
    Laurent polynomials in L.  Equality clears denominators over the union
    of the pairs of both sides and compares polynomials, so it is exact and
    independent of how the expression was assembled.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, coeff in (terms or {}).items():
            if coeff.is_zero():
                continue
            if any(p == (0, 0) for p in key):
                raise DegenerateDenominator(f"pair (0, 0) in term {key}")
            self.terms[tuple(sorted(key))] = coeff

    @staticmethod
    def zero():
        return ZetaExpr()

    @staticmethod
    def term(coeff, pairs):
        return ZetaExpr({tuple(sorted(tuple(p) for p in pairs)): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        z = ZetaExpr()
        z.terms = out
        return z

    def __neg__(self):
        z = ZetaExpr()
        z.terms = {k: -c for k, c in self.terms.items()}
        return z

    def __sub__(self, other):
        return self + (-other)

    def pairs(self):
        """Multiset of pairs: pair -> largest multiplicity in any term."""
        out = {}
        for key in self.terms:
            counts = {}
            for p in key:
                counts[p] = counts.get(p, 0) + 1
            for p, m in counts.items():
                out[p] = max(out.get(p, 0), m)
        return out

    def cleared_numerator(self, denominator=None):
        """Numerator over the common denominator prod (L^nu - T^N)^mult.

        With the default denominator (this expression's own pair multiset)
        the expression equals the returned polynomial divided by the product
        of the denominator binomials.
        """
        den = dict(denominator) if denominator is not None else self.pairs()
        total = Poly2.zero()
        for key, coeff in self.terms.items():
            counts = {}
            t_deg = 0
            for (nu, n) in key:
                counts[(nu, n)] = counts.get((nu, n), 0) + 1
                t_deg += n
            part = coeff.mul_monomial(1, 0, t_deg)
            for (nu, n), m in den.items():
                for _ in range(m - counts.get((nu, n), 0)):
                    part = part.mul_binomial(nu, n)
            total = total + part
        return total

    def __eq__(self, other):
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        diff = self - other
        if not diff.terms:
            return True
        return diff.cleared_numerator().is_zero()

    def __hash__(self):
        raise TypeError("unhashable")

    def is_zero(self):
        return self == ZetaExpr.zero()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def render(self, compact=False):
        if not self.terms:
            return "0"
        chunks = []
        for key, coeff in self.sorted_terms():
            t_deg = sum(n for (_, n) in key)
            t_str = "1" if t_deg == 0 else ("T" if t_deg == 1 else f"T^{t_deg}")
            facs = []
            for (nu, n) in key:
                left = "1" if nu == 0 else ("L" if nu == 1 else f"L^{nu}")
                right = "1" if n == 0 else ("T" if n == 1 else f"T^{n}")
                facs.append(f"({left} - {right})")
            den = "*".join(facs)
            if len(facs) > 1:
                den = f"({den})"
            chunks.append(f"({coeff}) * {t_str}/{den}")
        out = " + ".join(chunks)
        if compact:
            out = out.replace(" ", "")
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"ZetaExpr({len(self.terms)} terms)"


def _strata(d):
    """(pair(v), full valency) per node, pair lists for edges and arrows."""
    table = {v: tuple(d.cache(v)) for v in d.nodes}
    for v, (n, nu) in table.items():
        if (n, nu) == (0, 0):
            raise DegenerateDenominator(f"node {v} has (N, nu) = (0, 0)")
    nodes = [( (table[v][1], table[v][0]), valency(d, v, "full")) for v in d.nodes]
    edges = [((table[e.u][1], table[e.u][0]), (table[e.v][1], table[e.v][0]))
             for e in d.edges]
    arrows = []
    for a in d.arrows:
        if (a.N, a.nu) == (0, 0):
            raise DegenerateDenominator(f"arrowhead at {a.node} has (N, nu) = (0, 0)")
        arrows.append(((table[a.node][1], table[a.node][0]), (a.nu, a.N)))
    return nodes, edges, arrows


def motivic_zeta(diagram):
    """Motivic zeta function of the diagram as an exact ZetaExpr."""
    d = realizable_refine(diagram)
    nodes, edges, arrows = _strata(d)
    acc = ZetaExpr.zero()
    for pair, delta in nodes:
        coeff = L_MINUS_1 * Poly2({(1, 0): 1, (0, 0): 1 - delta})
        acc = acc + ZetaExpr.term(coeff, (pair,))
    for pu, pv in edges:
        acc = acc + ZetaExpr.term(L_MINUS_1_SQ, (pu, pv))
    for pv, pa in arrows:
        acc = acc + ZetaExpr.term(L_MINUS_1_SQ, (pv, pa))
    return acc


def _top_terms(d, order=None):
    """RatFuncS terms of the (possibly twisted) topological zeta function."""
    nodes, edges, arrows = _strata(d)

    def ok(*pairs):
        return order is None or all(n % order == 0 for (_, n) in pairs)

    terms = []
    for pair, delta in nodes:
        if ok(pair) and delta != 2:
            terms.append((2 - delta, (pair,)))
    for pu, pv in edges:
        if ok(pu, pv):
            terms.append((1, (pu, pv)))
    for pv, pa in arrows:
        if ok(pv, pa):
            terms.append((1, (pv, pa)))
    return terms


def _sum_terms(terms):
    acc = RatFuncS.zero()
    for chi, pairs in terms:
        acc = acc + RatFuncS.from_term(chi, [(n, nu) for (nu, n) in pairs])
    return acc


def top_zeta(diagram):
    """Topological zeta function, fully cancelled."""
    return _sum_terms(_top_terms(realizable_refine(diagram)))


def twisted_top_zeta(diagram, order):
    """Topological zeta restricted to strata whose N's are divisible by order."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    return _sum_terms(_top_terms(realizable_refine(diagram), order))


def specialize_chi_top(zeta, n):
    """Euler-characteristic value of the motivic zeta at T = L^(-n).

    Substituting turns every factor into L^(nu + n*N) - 1; the result is a
    single rational function of L evaluated at 1 after cancelling the
    common (L - 1) powers.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    exps = {}
    for key in zeta.terms:
        for (nu, nn) in key:
            m = nu + n * nn
            if m == 0:
                raise PoleAtOne(f"pair {(nu, nn)} degenerates at T = L^-{n}")
            exps[(nu, nn)] = m
    den_mult = zeta.pairs()
    num = Poly2.zero()
    for key, coeff in zeta.terms.items():
        counts = {}
        shift = 0
        for p in key:
            counts[p] = counts.get(p, 0) + 1
            shift -= n * p[1]
        part = coeff.mul_monomial(1, shift, 0)
        for p, m in den_mult.items():
            need = m - counts.get(p, 0)
            for _ in range(need):
                part = part.mul_binomial(exps[p], 0)
        num = num + part
    den = Poly2.one()
    for p, m in den_mult.items():
        for _ in range(m):
            den = den.mul_binomial(exps[p], 0)
    return eval_at_one_with_cancellation(num, den)


def poles(ratfunc):
    """Poles of a cancelled rational function as (value, multiplicity)."""
    return ratfunc.pole_list()


def candidate_poles_motivic(diagram):
    """(nu, N) pairs of the canonical realizable refinement with N >= 1.

    This is a superset of the actual motivic poles; certified poles are
    only provided at the topological level.
    """
    d = realizable_refine(diagram)
    out = set()
    for v in d.nodes:
        n, nu = d.cache(v)
        if n >= 1:
            out.add((nu, n))
    for a in d.arrows:
        if a.N >= 1:
            out.add((a.nu, a.N))
    return out
