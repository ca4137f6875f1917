"""Acceptance suite: ten exact criteria, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -s` to see the verdict lines;
every check is exact integer or rational arithmetic, no tolerances.
"""

import random
from fractions import Fraction

from splicezeta.algebra import CycloProduct, Poly2, RatFuncS
from splicezeta.diagram import ensure_cached, multiplicities
from splicezeta.errors import SpliceZetaError
from splicezeta.monodromy import is_allowed, is_eigenvalue, mc_report
from splicezeta.refine import (
    Subdivision,
    isomorphic,
    realizable_refine,
    reduce,
    refine_edge,
    smooth_subdivide_minimal,
)
from splicezeta.diagram import cone_vector
from splicezeta.sdio import EXAMPLES, builder_cusp, builder_monomial, builder_nv_example2, random_diagram
from splicezeta.splice import verify_splice_motivic, verify_splice_top
from splicezeta.zeta import (
    ZetaExpr,
    motivic_zeta,
    poles,
    specialize_chi_top,
    top_zeta,
    twisted_top_zeta,
)

from oracles import cusp_chart_multiplicities


def verdict(number, label):
    """Context manager printing one PASS/FAIL line per criterion."""

    class _Verdict:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            state = "PASS" if exc_type is None else "FAIL"
            print(f"criterion {number:2d} [{state}] {label}")
            return False

    return _Verdict()


def bundled():
    return {name: build() for name, build in EXAMPLES.items()}


def test_criterion_01_example2_monodromy_zeta():
    with verdict(1, "monodromy zeta of the two-pair example and 1/110 eigenvalue"):
        from splicezeta.monodromy import monodromy_zeta

        d = builder_nv_example2(1, 1, 1, 1)
        assert monodromy_zeta(d) == CycloProduct(
            {330: 1, 60: 1, 66: -1, 15: -1, 20: -1})
        assert is_eigenvalue(d, Fraction(1, 110))


def test_criterion_02_twisted_counterexample():
    with verdict(2, "twisted order-6 counterexample and its sibling variant"):
        d = builder_cusp(2, 4)  # form arrowheads (0, 3), (0, 5)
        z = twisted_top_zeta(d, 6)
        assert str(z) == "-1 / (6*s + 21)"
        assert poles(z) == [(Fraction(-7, 2), 1)]
        assert not is_eigenvalue(d, Fraction(-7, 2) % 1)
        assert is_allowed(d).allowed

        sibling = builder_cusp(3, 3)  # form arrowheads (0, 4), (0, 4)
        assert str(twisted_top_zeta(sibling, 6)) == "-1 / (6*s + 20)"
        assert not is_allowed(sibling).allowed


def test_criterion_03_splicing_identity():
    with verdict(3, "splice identity on cusp variants, the two-pair example, "
                    "and 200 generated diagrams"):
        for d in [builder_cusp(0, 0), builder_cusp(4, 5),
                  builder_cusp(2, 4), builder_cusp(3, 3),
                  builder_nv_example2(1, 1, 1, 1)]:
            for e in d.edges:
                assert verify_splice_motivic(d, (e.u, e.v))
                assert verify_splice_top(d, (e.u, e.v))
        rng = random.Random(202)
        checked = 0
        seed = 0
        while checked < 200:
            d = reduce(random_diagram(seed, rng.randint(2, 6)))
            seed += 1
            if not d.edges:
                continue
            e = rng.choice(list(d.edges))
            try:
                ok_m = verify_splice_motivic(d, (e.u, e.v))
                ok_t = verify_splice_top(d, (e.u, e.v))
            except SpliceZetaError:
                # a side with weights (0, 0) cannot be collapsed to a branch
                continue
            assert ok_m and ok_t, (seed - 1, e)
            checked += 1


def test_criterion_04_classical_cusp():
    with verdict(4, "classical cusp zeta, poles, and eigenvalue classes"):
        d = builder_cusp(0, 0)
        z = top_zeta(d)
        assert str(z) == "(4*s + 5) / ((1*s + 1)*(6*s + 5))"
        assert poles(z) == [(Fraction(-1), 1), (Fraction(-5, 6), 1)]
        for s0, _ in poles(z):
            assert is_eigenvalue(d, Fraction(s0) % 1)


def test_criterion_05_multiplicity_oracle():
    with verdict(5, "cusp multiplicities against the blow-up chart oracle"):
        table = multiplicities(builder_cusp(4, 5))
        assert table == {"n1": (2, 11), "n2": (6, 28), "n3": (3, 17)}
        o1, o2, o3 = cusp_chart_multiplicities(4, 5)
        assert (table["n1"], table["n2"], table["n3"]) == (o1, o2, o3)


def test_criterion_06_monomial_identity():
    with verdict(6, "monomial diagrams match the closed form for all "
                    "1 <= M, M', i, i' <= 6"):
        l1sq = Poly2({(2, 0): 1, (1, 0): -2, (0, 0): 1})
        for m in range(1, 7):
            for mp in range(1, 7):
                for i in range(1, 7):
                    for ip in range(1, 7):
                        d = builder_monomial(m, mp, i, ip)
                        assert motivic_zeta(d) == ZetaExpr.term(
                            l1sq, ((i, m), (ip, mp)))
                        assert top_zeta(d) == RatFuncS.from_term(
                            1, [(m, i), (mp, ip)])


def test_criterion_07_avatar_identity():
    with verdict(7, "Euler specialization equals the topological zeta at "
                    "n = 1, 2, 3 on bundled and 100 generated diagrams"):
        diagrams = list(bundled().values())
        diagrams += [reduce(random_diagram(seed, 4)) for seed in range(100)]
        for d in diagrams:
            z = motivic_zeta(d)
            t = top_zeta(d)
            for n in (1, 2, 3):
                assert specialize_chi_top(z, n) == t.evaluate(n)


def _random_smooth_refinement(d, rng):
    d = ensure_cached(d)
    if not d.edges:
        return d
    e = rng.choice(list(d.edges))
    w_l = cone_vector(d, e, e.u)
    dv, outer = cone_vector(d, e, e.v)
    chain = list(smooth_subdivide_minimal(w_l, (outer, dv)).vectors)
    for _ in range(rng.randint(1, 3)):
        k = rng.randrange(len(chain) - 1)
        chain.insert(k + 1, (chain[k][0] + chain[k + 1][0],
                             chain[k][1] + chain[k + 1][1]))
    return refine_edge(d, e, Subdivision(chain))


def test_criterion_08_refinement_invariance():
    with verdict(8, "all zeta functions invariant under 3 random non-minimal "
                    "refinements on 100 generated diagrams; reduce o refine = reduce"):
        from splicezeta.monodromy import monodromy_zeta

        rng = random.Random(808)
        for seed in range(100):
            d = reduce(random_diagram(seed, 4))
            base = (motivic_zeta(d), top_zeta(d),
                    {e: twisted_top_zeta(d, e) for e in (1, 2, 3, 6)},
                    monodromy_zeta(d))
            r = ensure_cached(d)
            for _ in range(3):
                r = _random_smooth_refinement(r, rng)
            assert motivic_zeta(r) == base[0]
            assert top_zeta(r) == base[1]
            for e in (1, 2, 3, 6):
                assert twisted_top_zeta(r, e) == base[2][e]
            assert monodromy_zeta(r) == base[3]
            assert isomorphic(reduce(realizable_refine(d)), reduce(ensure_cached(d)))


def test_criterion_09_impossibility_search():
    with verdict(9, "no parameters give a 1/110-class twisted pole while "
                    "keeping the order-60 pole eigenvalue-inducing"):
        from splicezeta.monodromy import delta1

        d1 = delta1(builder_nv_example2(1, 1, 1, 1))  # form-independent

        def at_origin(q):
            return d1.multiplicity(q) > 0 or q.denominator == 1

        target_classes = {Fraction(1, 110), Fraction(-1, 110) % 1}
        hits_a = []
        congruent = []
        denom110 = []
        both = 0
        for i1 in range(6):
            for i2 in range(6):
                for i3 in range(10):
                    for k in range(10):
                        try:
                            d = builder_nv_example2(i1, i2, i3, k)
                        except SpliceZetaError:
                            continue  # a zero form weight gives no diagram
                        classes = [Fraction(s) % 1
                                   for s, _ in poles(twisted_top_zeta(d, 330))]
                        a_holds = any(q in target_classes for q in classes)
                        b_holds = all(
                            at_origin(Fraction(s) % 1)
                            for s, _ in poles(twisted_top_zeta(d, 60)))
                        tup = (i1, i2, i3, k)
                        if a_holds:
                            hits_a.append(tup)
                        if a_holds and b_holds:
                            both += 1
                        if (2 * i1 + 3 * i2) % 6 == 3:
                            congruent.append(tup)
                            assert not b_holds, tup
                        if any(q.denominator == 110 for q in classes):
                            denom110.append(tup)
        assert both == 0
        # the congruence is necessary for (a): every (a)-tuple satisfies it,
        # and already every tuple whose pole class has denominator 110 does
        assert all((2 * i1 + 3 * i2) % 6 == 3 for (i1, i2, _, _) in hits_a)
        assert denom110 and set(denom110) <= set(congruent)


def test_criterion_10_allowed_baseline():
    with verdict(10, "trivial form data is allowed and all plain poles "
                     "induce eigenvalues on every bundled diagram"):
        for name, d in bundled().items():
            if not all(a.nu == 1 for a in d.arrows):
                continue
            assert is_allowed(d).allowed, name
            rep = mc_report(d, [])
            assert rep.all_poles_induce(), (name, rep)
