#!/usr/bin/env python3
"""Walkthrough: monodromy eigenvalues, allowed forms, and a counterexample.

Every pole s0 of the topological zeta function taken with respect to an
"allowed" differential form induces a monodromy eigenvalue exp(2 pi i s0).
The twisted zeta functions break this: an allowed form can produce a
twisted pole whose class is not an eigenvalue.  Both effects are exact
computations on diagrams.
"""

from fractions import Fraction

from splicezeta import (
    builder_cusp,
    builder_nv_example2,
    delta0,
    delta1,
    eigenvalues,
    is_allowed,
    is_eigenvalue,
    mc_report,
    monodromy_zeta,
    twisted_top_zeta,
)

cusp = builder_cusp(0, 0)
print("cusp monodromy zeta:", monodromy_zeta(cusp))
print("Delta_0:", delta0(cusp))
print("Delta_1:", delta1(cusp))
print("eigenvalue classes:",
      sorted((e.q, e.source) for e in eigenvalues(cusp)))

# The two-pair example: eigenvalues include the order-110 classes.
nv = builder_nv_example2(1, 1, 1, 1)
print("\ntwo-pair example monodromy zeta:", monodromy_zeta(nv))
print("is exp(2 pi i / 110) an eigenvalue?", is_eigenvalue(nv, Fraction(1, 110)))

# Allowed forms: the star condition on each node of the reduced diagram.
for a, b in [(2, 4), (3, 3)]:
    d = builder_cusp(a, b)
    rep = is_allowed(d)
    print(f"\nform x^{a} y^{b}: allowed = {rep.allowed}")
    for star in rep.stars:
        print(f"  node {star.node}: legs {list(star.legs)}, "
              f"divisible {star.divisible}, equal {star.equal}, "
              f"{'ok' if star.ok else 'violated'}")

# The allowed form x^2 y^4 nevertheless has a twisted pole at -7/2 whose
# class 1/2 is not an eigenvalue: the pole-to-eigenvalue statement does not
# survive twisting.
d = builder_cusp(2, 4)
print("\ntwisted zeta of order 6:", twisted_top_zeta(d, 6))
report = mc_report(d, [6])
for z in report.zetas:
    for p in z.poles:
        verdict = "eigenvalue" if p.induces_eigenvalue else "NOT an eigenvalue"
        print(f"  {z.kind}: pole {p.location} -> class {p.eigenvalue_class}: {verdict}")
