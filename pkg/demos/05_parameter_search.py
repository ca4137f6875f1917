#!/usr/bin/env python3
"""Walkthrough: searching form parameters for the two-pair example.

The two-pair diagram carries four integer form parameters (i1, i2, i3, k).
The order-330 twisted zeta always has exactly one pole, so one can ask for
parameters placing that pole in the class of exp(-2 pi i / 110) while every
pole of the order-60 twisted zeta still induces a monodromy eigenvalue.
The search below shows the two demands are incompatible: landing anywhere
near the target class forces 2*i1 + 3*i2 = 3 (mod 6), and that congruence
already dooms the order-60 pole.
"""

from fractions import Fraction

from splicezeta import builder_nv_example2, delta1, poles, twisted_top_zeta
from splicezeta.errors import SpliceZetaError

d1 = delta1(builder_nv_example2(1, 1, 1, 1))  # independent of the form data


def induces(q):
    return d1.multiplicity(q) > 0 or q.denominator == 1


target = {Fraction(1, 110), Fraction(-1, 110) % 1}
exact_hits = []
near_hits = []      # pole class of order exactly 110
doomed = 0

for i1 in range(6):
    for i2 in range(6):
        for i3 in range(10):
            for k in range(10):
                try:
                    d = builder_nv_example2(i1, i2, i3, k)
                except SpliceZetaError:
                    continue  # zero form weights give no valid diagram
                z330 = twisted_top_zeta(d, 330)
                classes = [Fraction(s) % 1 for s, _ in poles(z330)]
                if any(q in target for q in classes):
                    exact_hits.append((i1, i2, i3, k))
                if any(q.denominator == 110 for q in classes):
                    near_hits.append((i1, i2, i3, k))
                    z60 = twisted_top_zeta(d, 60)
                    if not all(induces(Fraction(s) % 1)
                               for s, _ in poles(z60)):
                        doomed += 1

print("tuples hitting the exact class +-1/110:", len(exact_hits))
print("tuples whose pole class has order 110:", len(near_hits))
print("of those, tuples whose order-60 pole fails to induce:", doomed)
congruent = [(i1, i2) for (i1, i2, _, _) in near_hits]
print("all satisfy 2*i1 + 3*i2 = 3 (mod 6):",
      all((2 * a + 3 * b) % 6 == 3 for a, b in congruent))
