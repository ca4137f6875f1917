"""Independent oracles used to freeze expected values.

Nothing in here goes through the package's diagram machinery: multiplicities
come from explicit blow-up charts, subdivisions from exhaustive search, root
orders from expanded polynomials.
"""

from fractions import Fraction
from math import gcd

import sympy as sp


def det(a, b):
    return a[0] * b[1] - a[1] * b[0]


# ---------------------------------------------------------------------------
# Blow-up chart oracle for the cusp x^3 - y^2 with form x^a y^b dx dy.
# ---------------------------------------------------------------------------

def cusp_chart_multiplicities(a, b):
    """(N, nu) along the three exceptional curves, from explicit charts.

    Chart maps for the three point blow-ups resolving the cusp; in each
    chart the named variable cuts out the exceptional curve.  Returned in
    the order: curve met by the x-axis branch, central curve (met by the
    strict transform of the cusp), curve met by the y-axis branch.
    """
    u, v = sp.symbols("u v")
    f = lambda X, Y: X**3 - Y**2
    charts = [
        (u, u * v, u),            # first blow-up
        (u * v**2, u * v**3, v),  # third blow-up (central curve)
        (u * v, u * v**2, v),     # second blow-up
    ]
    out = []
    for X, Y, exc in charts:
        jac = sp.expand(sp.diff(X, u) * sp.diff(Y, v) - sp.diff(X, v) * sp.diff(Y, u))
        n_val = _ord(sp.expand(f(X, Y)), exc)
        nu_val = _ord(sp.expand(X**a * Y**b * jac), exc) + 1
        out.append((n_val, nu_val))
    return out


def _ord(expr, var):
    poly = sp.Poly(expr, var)
    return min(m[0] for m in poly.monoms())


# ---------------------------------------------------------------------------
# Exhaustive smooth-chain search.
# ---------------------------------------------------------------------------

def primitive_vectors(bound):
    return [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)
            if gcd(a, b) == 1]


def all_chains(u, v, length, bound):
    """Every chain u -> ... -> v of the given interior length with det-1 steps.

    Interior vectors range over all primitive vectors with entries up to
    `bound` lying strictly inside the cone.
    """
    rays = [w for w in primitive_vectors(bound)
            if det(u, w) > 0 and det(w, v) > 0]
    chains = []

    def extend(chain):
        if len(chain) == length + 1:
            if det(chain[-1], v) == 1:
                chains.append(chain + [v])
            return
        for w in rays:
            if det(chain[-1], w) == 1:
                extend(chain + [w])

    extend([u])
    return chains


def brute_minimal_chains(u, v, bound):
    """All minimal-length smooth chains from u to v (entries up to bound)."""
    for length in range(0, 2 * bound + 2):
        found = all_chains(u, v, length, bound)
        if found:
            return found
    raise AssertionError("no chain found within the bound")


# ---------------------------------------------------------------------------
# Cyclotomic expansion oracle.
# ---------------------------------------------------------------------------

def expand_cyclo(exps):
    """Expand prod (t^n - 1)^(e_n) with e_n >= 0 as a sympy polynomial."""
    t = sp.symbols("t")
    acc = sp.Integer(1)
    for n, e in exps.items():
        if e < 0:
            raise ValueError("only nonnegative exponents expand to a polynomial")
        acc *= (t**n - 1) ** e
    return sp.Poly(sp.expand(acc), t)


def root_order(exps, q):
    """Order of vanishing of prod (t^n - 1)^(e_n) at exp(2 pi i q).

    Splits into positive and negative parts, expands both, and counts how
    often the cyclotomic polynomial of q's denominator divides each.
    """
    q = Fraction(q)
    pos = {n: e for n, e in exps.items() if e > 0}
    neg = {n: -e for n, e in exps.items() if e < 0}
    return _phi_multiplicity(pos, q.denominator) - _phi_multiplicity(neg, q.denominator)


def _phi_multiplicity(exps, d):
    if not exps:
        return 0
    t = sp.symbols("t")
    poly = expand_cyclo(exps)
    phi = sp.Poly(sp.cyclotomic_poly(d, t), t)
    count = 0
    while True:
        quo, rem = sp.div(poly, phi)
        if not rem.is_zero:
            return count
        poly = sp.Poly(quo, t)
        count += 1


# ---------------------------------------------------------------------------
# Term-by-term rational summation.
# ---------------------------------------------------------------------------

def sum_terms_at(terms, s):
    """Exact value at s of sum chi / prod (N s + nu)."""
    s = Fraction(s)
    acc = Fraction(0)
    for chi, pairs in terms:
        val = Fraction(chi)
        for (n, nu) in pairs:
            val /= n * s + nu
        acc += val
    return acc


# ---------------------------------------------------------------------------
# Toric model of a monomial with form weights.
# ---------------------------------------------------------------------------

def toric_values(ray, m, m_prime, i, i_prime):
    """(N, nu) along the divisor of a primitive quadrant ray (a, b)."""
    a, b = ray
    return (a * m + b * m_prime, a * i + b * i_prime)
