"""Monodromy zeta function, eigenvalues, allowed forms, and the pole report.

Eigenvalue classes are reduced rationals q in [0, 1) standing for the root
of unity exp(2*pi*i*q).  The zeta exponent at a node is its valency counted
with f-arrows minus two, which makes chain nodes invisible and reproduces
the classical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import CycloProduct
from .diagram import splice_data, valency
from .errors import NoFArrow, NonPolynomialDelta1
from .refine import realizable_refine, reduce
from .zeta import poles, top_zeta, twisted_top_zeta


@dataclass(frozen=True, order=True)
class EigenvalueClass:
    q: Fraction
    multiplicity: int
    source: str  # "h0" or "h1"


def _f_arrow_gcd(d):
    ns = [a.N for a in d.arrows if a.N >= 1]
    if not ns:
        raise NoFArrow("diagram has no arrowhead with N >= 1")
    return gcd(*ns)


def monodromy_zeta(diagram):
    """Characteristic-polynomial quotient as a cyclotomic product.

    Computed on the realizable refinement; inserted chain nodes have
    exponent zero, so the value only depends on the diagram itself.
    """
    d = realizable_refine(diagram)
    _f_arrow_gcd(d)
    acc = {}
    for v in d.nodes:
        e = valency(d, v, "with_f_arrows") - 2
        if e == 0:
            continue
        n = d.cache(v)[0]
        if n <= 0:
            raise NoFArrow(f"node {v} has N = {n}; no f-branch through it")
        acc[n] = acc.get(n, 0) + e
    return CycloProduct(acc)


def delta0(diagram):
    """t^d - 1 for d the gcd of the f-arrow multiplicities."""
    d_val = _f_arrow_gcd(realizable_refine(diagram))
    return CycloProduct({d_val: 1})


def delta1(diagram):
    """Characteristic polynomial of h1 as a cyclotomic product."""
    out = monodromy_zeta(diagram) * delta0(diagram)
    if not out.is_polynomial():
        raise NonPolynomialDelta1(
            "monodromy zeta times Delta_0 has a negative root multiplicity")
    return out


def eigenvalues(diagram):
    """All eigenvalue classes of h0 and h1 with their multiplicities."""
    d1 = delta1(diagram)
    d0_order = _f_arrow_gcd(realizable_refine(diagram))
    out = set()
    denominators = set()
    for n in d1.exps:
        for m in range(1, n + 1):
            if n % m == 0:
                denominators.add(m)
    for m in sorted(denominators):
        mult = d1.multiplicity(Fraction(1, m) if m > 1 else Fraction(0))
        if mult > 0:
            for a in range(m):
                if gcd(a, m) == 1 and (a > 0 or m == 1):
                    out.add(EigenvalueClass(Fraction(a, m), mult, "h1"))
    for a in range(d0_order):
        out.add(EigenvalueClass(Fraction(a, d0_order) % 1, 1, "h0"))
    return out


def is_eigenvalue(diagram, q):
    """True when exp(2*pi*i*q) is an eigenvalue of h0 or h1."""
    q = Fraction(q) % 1
    d1 = delta1(diagram)
    if d1.multiplicity(q) > 0:
        return True
    d0_order = _f_arrow_gcd(realizable_refine(diagram))
    return d0_order % q.denominator == 0


# ---------------------------------------------------------------------------
# Allowed forms.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarRecord:
    node: str
    n: int
    r: int
    legs: tuple  # (near decoration, far-side form weight) per node-edge
    divisible: int
    equal: int
    ok: bool


@dataclass(frozen=True)
class AllowedReport:
    allowed: bool
    arrow_ok: bool
    stars: tuple

    def __bool__(self):
        return self.allowed


def is_allowed(diagram):
    """Star-shaped divisibility test for the form data on the diagram.

    For each node of the reduced diagram, the legs are its node-edges with
    near decoration d and far-side form weight i.  If d divides i on at
    least n + r - 2 legs (r counting f-arrows at the node), then i = d must
    also hold on at least n + r - 2 legs.
    """
    d = reduce(diagram)
    arrow_ok = all((a.N, a.nu) != (0, 0) for a in d.arrows)
    stars = []
    verdict = arrow_ok
    for v in d.nodes:
        legs = []
        for e in d.node_edges(v):
            data = splice_data(d, e)
            i_far = data.i if e.u == v else data.i_prime
            legs.append((e.dec_at(v), i_far))
        n = len(legs)
        r = sum(1 for a in d.arrows_at(v) if a.N >= 1)
        need = n + r - 2
        divisible = sum(1 for dec, i in legs if i % dec == 0)
        equal = sum(1 for dec, i in legs if i == dec)
        ok = not (divisible >= need) or equal >= need
        stars.append(StarRecord(v, n, r, tuple(legs), divisible, equal, ok))
        verdict = verdict and ok
    return AllowedReport(verdict, arrow_ok, tuple(stars))


# ---------------------------------------------------------------------------
# Pole-versus-eigenvalue report.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoleRecord:
    location: Fraction
    multiplicity: int
    eigenvalue_class: Fraction
    induces_eigenvalue: bool
    via: str  # "h0", "h1", "branch", or "none"


@dataclass(frozen=True)
class ZetaReport:
    kind: str  # "top" or "twisted-<e>"
    zeta: object
    poles: tuple


@dataclass(frozen=True)
class MCReport:
    allowed: AllowedReport
    zetas: tuple

    def all_poles_induce(self):
        return all(p.induces_eigenvalue for z in self.zetas for p in z.poles)


def mc_report(diagram, twisted_orders=()):
    """Poles, eigenvalue classes, and verdicts for the plain and twisted zetas.

    A report, not an assertion: twisted zeta functions are known to have
    poles whose classes are not eigenvalues even for allowed form data.
    The verdict counts a class as induced when it is an eigenvalue at the
    origin (h0 or h1) or an eigenvalue of the local monodromy at a generic
    point of a branch of multiplicity N >= 2, the way a function with
    non-reduced components contributes poles like -1/2 for a square factor.
    """
    refined = realizable_refine(diagram)
    d1 = delta1(diagram)
    d0_order = _f_arrow_gcd(refined)
    branch_orders = sorted({a.N for a in refined.arrows if a.N >= 2})

    def classify(z, kind):
        recs = []
        for s0, mult in poles(z):
            q = Fraction(s0) % 1
            if d0_order % q.denominator == 0:
                via = "h0"
            elif d1.multiplicity(q) > 0:
                via = "h1"
            elif any(n % q.denominator == 0 for n in branch_orders):
                via = "branch"
            else:
                via = "none"
            recs.append(PoleRecord(s0, mult, q, via != "none", via))
        return ZetaReport(kind, z, tuple(recs))

    zetas = [classify(top_zeta(diagram), "top")]
    for e in twisted_orders:
        zetas.append(classify(twisted_top_zeta(diagram, e), f"twisted-{e}"))
    return MCReport(allowed=is_allowed(diagram), zetas=tuple(zetas))


def auto_twisted_orders(diagram, bound=None):
    """Divisors >= 2 of the node N-values, up to an optional bound."""
    d = realizable_refine(diagram)
    ns = {d.cache(v)[0] for v in d.nodes if d.cache(v)[0] >= 1}
    out = set()
    for n in ns:
        for e in range(2, n + 1):
            if n % e == 0 and (bound is None or e <= bound):
                out.add(e)
    return sorted(out)
