#!/usr/bin/env python3
"""Walkthrough: the cusp diagram and its zeta functions.

The cusp is the plane curve x^3 - y^2.  Its minimal embedded resolution has
three exceptional curves in a chain; the corresponding diagram has three
nodes decorated 1-3 / 2-2, the strict transform as an arrowhead (1, 1) at
the central node, and two form arrowheads at the outer nodes recording the
differential form x^a y^b dx^dy.
"""

from fractions import Fraction

from splicezeta import (
    builder_cusp,
    motivic_zeta,
    multiplicities,
    poles,
    specialize_chi_top,
    top_zeta,
    twisted_top_zeta,
    validate,
    write_sd,
)

# The standard form dx^dy corresponds to exponents (0, 0).
cusp = builder_cusp(0, 0)
print("diagram document:")
print(write_sd(cusp))
print("violations:", validate(cusp) or "none")

# Multiplicities (N, nu): N is the order of the function along each
# exceptional curve, nu - 1 the order of the form.
print("\nmultiplicities:", dict(multiplicities(cusp)))

# The topological zeta function collapses to the classical value.
z = top_zeta(cusp)
print("\ntopological zeta:", z)
print("poles:", poles(z))

# The motivic zeta function is an exact sum of T^N/(L^nu - T^N) terms.
mz = motivic_zeta(cusp)
print("\nmotivic zeta has", len(mz.terms), "terms:")
print(mz)

# Specializing T = L^(-n) and applying the Euler characteristic recovers
# the topological zeta function at every positive integer.
for n in (1, 2, 3):
    lhs = specialize_chi_top(mz, n)
    rhs = z.evaluate(n)
    print(f"chi_top at T = L^-{n}: {lhs}  (topological zeta there: {rhs})")
    assert lhs == rhs

# Twisted zeta functions keep only strata whose N-values share a divisor.
for e in (2, 3, 6):
    print(f"twisted, order {e}:", twisted_top_zeta(cusp, e))

# A nontrivial form shifts the nu-data; x^4 y^5 dx^dy is the running example.
rich = builder_cusp(4, 5)
print("\nwith form x^4 y^5:", dict(multiplicities(rich)))
print("its topological zeta:", top_zeta(rich))
print("value at s = 1:", top_zeta(rich).evaluate(Fraction(1)))
