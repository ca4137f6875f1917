"""Exact arithmetic substrate.

Everything here is exact: arbitrary-precision integers, `fractions.Fraction`
for rationals, sparse integer Laurent polynomials in the two formal symbols
L and T, rational functions in one variable s with factored denominators,
and cyclotomic products recorded as integer exponent tables.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import PoleAtOne

# ---------------------------------------------------------------------------
# Sparse polynomials in (L, T).
#
# Terms are stored as {(L-exponent, T-exponent): coefficient}.  L-exponents
# may be negative (the coefficient ring is localized at L), T-exponents are
# kept nonnegative.  No zero coefficients are stored.
# ---------------------------------------------------------------------------


class Poly2:
    """Sparse integer Laurent polynomial in L and T."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {k: c for k, c in terms.items() if c != 0}
        else:
            self.terms = {}

    @staticmethod
    def const(c):
        return Poly2({(0, 0): int(c)})

    @staticmethod
    def zero():
        return Poly2()

    @staticmethod
    def one():
        return Poly2.const(1)

    @staticmethod
    def lvar(exp=1):
        return Poly2({(exp, 0): 1})

    @staticmethod
    def binomial_l_minus_t(nu, n):
        """L^nu - T^n."""
        d = {(nu, 0): 1}
        key = (0, n)
        d[key] = d.get(key, 0) - 1
        return Poly2(d)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly2({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        p = Poly2()
        p.terms = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly2()
            return Poly2({k: c * other for k, c in self.terms.items()})
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        p = Poly2()
        p.terms = out
        return p

    __rmul__ = __mul__

    def mul_binomial(self, nu, n):
        """Multiply by (L^nu - T^n) without building the factor."""
        out = {}
        for (a, b), c in self.terms.items():
            k = (a + nu, b)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
            k = (a, b + n)
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        p = Poly2()
        p.terms = out
        return p

    def mul_monomial(self, c, el, et):
        return Poly2({(a + el, b + et): cc * c for (a, b), cc in self.terms.items()})

    def subs_t_power(self, n):
        """Substitute T = L^(-n); the result is a Laurent polynomial in L."""
        out = {}
        for (a, b), c in self.terms.items():
            k = (a - n * b, 0)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        p = Poly2()
        p.terms = out
        return p

    def is_univariate_l(self):
        return all(b == 0 for (_, b) in self.terms)

    def value_at_one(self):
        return sum(self.terms.values())

    def min_l_exp(self):
        return min((a for (a, _) in self.terms), default=0)

    def div_l_minus_one(self):
        """Exact division of a univariate-in-L polynomial by (L - 1)."""
        shift = self.min_l_exp()
        coeffs = {}
        for (a, b), c in self.terms.items():
            if b != 0:
                raise ValueError("not univariate in L")
            coeffs[a - shift] = c
        deg = max(coeffs)
        out = {}
        carry = 0
        # synthetic division by the root 1, highest degree first
        for k in range(deg, 0, -1):
            carry += coeffs.get(k, 0)
            if carry:
                out[(k - 1 + shift, 0)] = carry
        if carry + coeffs.get(0, 0) != 0:
            raise ValueError("not divisible by (L - 1)")
        p = Poly2()
        p.terms = out
        return p

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        return render_poly2(self)

    def __repr__(self):
        return f"Poly2({self})"


def _monomial_str(el, et):
    parts = []
    if el == 1:
        parts.append("L")
    elif el != 0:
        parts.append(f"L^{el}")
    if et == 1:
        parts.append("T")
    elif et != 0:
        parts.append(f"T^{et}")
    return "*".join(parts)


def render_poly2(p):
    if not p.terms:
        return "0"
    chunks = []
    for (el, et), c in p.sorted_terms():
        mono = _monomial_str(el, et)
        if mono:
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(chunks)


def eval_at_one_with_cancellation(num, den):
    """Value of num/den at L = 1 after cancelling common (L - 1) factors.

    Both arguments are integer (Laurent) polynomials in L alone.  Laurent
    shifts are harmless: L^k is 1 at L = 1 and coprime to (L - 1).
    """
    if den.is_zero():
        raise ValueError("denominator is identically zero")
    if not num.is_univariate_l() or not den.is_univariate_l():
        raise ValueError("inputs must be univariate in L")
    if num.is_zero():
        return Fraction(0)
    while num.value_at_one() == 0 and den.value_at_one() == 0:
        num = num.div_l_minus_one()
        den = den.div_l_minus_one()
    dv = den.value_at_one()
    if dv == 0:
        raise PoleAtOne("denominator still vanishes at L = 1")
    return Fraction(num.value_at_one(), dv)


# ---------------------------------------------------------------------------
# Rational functions in s with factored linear denominators.
# ---------------------------------------------------------------------------


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def _poly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_div_linear(a, n, nu):
    """Exact division of a by (n*s + nu); coefficients may become Fractions."""
    root = Fraction(-nu, n)
    out = [Fraction(0)] * (len(a) - 1)
    carry = Fraction(0)
    for k in range(len(a) - 1, 0, -1):
        carry = carry + a[k]
        out[k - 1] = carry
        carry = carry * root
    if carry + a[0] != 0:
        raise ValueError("not divisible")
    return _poly_trim([c / n for c in out])


class RatFuncS:
    """Rational function of s kept as num / (scale * prod (N*s + nu)^mult).

    The numerator is an integer polynomial sharing no roots with the retained
    denominator factors; the positive integer `scale` absorbs constant factors
    and whatever cannot be pushed into the numerator without breaking
    integrality.  Equality compares values, not representations, so the same
    function reached along different routes always compares equal.
    """

    __slots__ = ("num", "den", "scale")

    def __init__(self, num, den, scale):
        self.num = tuple(num)
        self.den = tuple(sorted(den))
        self.scale = scale

    @staticmethod
    def zero():
        return RatFuncS((), (), 1)

    @staticmethod
    def from_term(chi, pairs):
        """chi / prod (N*s + nu) for integer chi and (N, nu) pairs."""
        den = {}
        for p in pairs:
            if p == (0, 0):
                raise ValueError("factor (0, 0)")
            den[p] = den.get(p, 0) + 1
        return _normalize([Fraction(chi)], den, 1)

    def is_zero(self):
        return not self.num

    def degree(self):
        return len(self.num) - 1

    def __neg__(self):
        return RatFuncS(tuple(-c for c in self.num), self.den, self.scale)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        da, db = dict(self.den), dict(other.den)
        union = {p: max(da.get(p, 0), db.get(p, 0)) for p in set(da) | set(db)}
        sc = lcm(self.scale, other.scale)
        na = [Fraction(c) for c in self.num] or [Fraction(0)]
        nb = [Fraction(c) for c in other.num] or [Fraction(0)]
        na = _poly_scale(na, Fraction(sc, self.scale))
        nb = _poly_scale(nb, Fraction(sc, other.scale))
        for p, m in union.items():
            f = [p[1], p[0]]  # nu + N*s
            for _ in range(m - da.get(p, 0)):
                na = _poly_mul(na, f)
            for _ in range(m - db.get(p, 0)):
                nb = _poly_mul(nb, f)
        return _normalize(_poly_add(na, nb), union, sc)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RatFuncS):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("unhashable")

    def evaluate(self, x):
        x = Fraction(x)
        dv = Fraction(self.scale)
        for (n, nu), m in self.den:
            dv *= (n * x + nu) ** m
        if dv == 0:
            raise ZeroDivisionError(f"pole at s = {x}")
        return _poly_eval(self.num, x) / dv

    def pole_list(self):
        """Surviving poles as (location, multiplicity), grouped by location."""
        acc = {}
        for (n, nu), m in self.den:
            if n > 0:
                r = Fraction(-nu, n)
                acc[r] = acc.get(r, 0) + m
        return sorted(acc.items())

    def _num_str(self, compact):
        if not self.num:
            return "0"
        chunks = []
        for k in range(len(self.num) - 1, -1, -1):
            c = self.num[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            elif k == 1:
                body = "s" if abs(c) == 1 else f"{abs(c)}*s"
            else:
                body = f"s^{k}" if abs(c) == 1 else f"{abs(c)}*s^{k}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        s = "".join(chunks)
        if compact:
            s = s.replace(" ", "")
        return s

    def render(self, compact=False):
        if not self.num:
            return "0"
        num = self._num_str(compact)
        if sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        if not self.den and self.scale == 1:
            return num
        facs = []
        for (n, nu), m in self.den:
            if n == 0:
                body = str(nu)
            elif nu > 0:
                body = f"({n}*s + {nu})"
            elif nu < 0:
                body = f"({n}*s - {-nu})"
            else:
                body = f"({n}*s)"
            facs.append(body if m == 1 else f"{body}^{m}")
        if self.scale != 1:
            facs.insert(0, str(self.scale))
        den = "*".join(facs)
        if len(facs) > 1:
            den = f"({den})"
        out = f"{num} / {den}"
        if compact:
            out = out.replace(" ", "")
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RatFuncS({self})"


def _normalize(num, den, scale):
    """Cancel shared roots, fold constants, restore integer coefficients."""
    num = _poly_trim(num)
    if not num:
        return RatFuncS.zero()
    den = {p: m for p, m in den.items() if m > 0}
    # cancel proportional factors largest first, so the primitive ones survive
    for p in sorted(den, reverse=True):
        n, nu = p
        if n == 0:
            continue
        root = Fraction(-nu, n)
        while den.get(p, 0) > 0 and _poly_eval(num, root) == 0:
            num = _poly_div_linear(num, n, nu)
            den[p] -= 1
        if den.get(p) == 0:
            del den[p]
    sign = 1
    for p in list(den):
        n, nu = p
        if n == 0:
            m = den.pop(p)
            scale *= nu ** m
    if scale < 0:
        sign = -1
        scale = -scale
    mult = lcm(*(c.denominator for c in num)) if num else 1
    ints = [int(c * mult) for c in num]
    scale *= mult
    g = gcd(*(abs(c) for c in ints), scale)
    if g > 1:
        ints = [c // g for c in ints]
        scale //= g
    if sign < 0:
        ints = [-c for c in ints]
    return RatFuncS(ints, {p: m for p, m in den.items()}.items(), scale)


# ---------------------------------------------------------------------------
# Cyclotomic products prod (t^n - 1)^{e_n}.
# ---------------------------------------------------------------------------


class CycloProduct:
    """Finite exponent table n -> e_n for the product of (t^n - 1)^{e_n}."""

    __slots__ = ("exps",)

    def __init__(self, exps=None):
        self.exps = {int(n): int(e) for n, e in (exps or {}).items() if e != 0}
        if any(n <= 0 for n in self.exps):
            raise ValueError("exponents of t must be positive")

    def __eq__(self, other):
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(frozenset(self.exps.items()))

    def __mul__(self, other):
        out = dict(self.exps)
        for n, e in other.exps.items():
            v = out.get(n, 0) + e
            if v:
                out[n] = v
            else:
                del out[n]
        return CycloProduct(out)

    def multiplicity(self, q):
        """Order of vanishing at exp(2*pi*i*q) for a reduced q in [0, 1)."""
        q = Fraction(q)
        if not 0 <= q < 1:
            raise ValueError("q must lie in [0, 1)")
        d = q.denominator
        return sum(e for n, e in self.exps.items() if n % d == 0)

    def is_polynomial(self):
        """True when every root has nonnegative total multiplicity."""
        divisors = set()
        for n in self.exps:
            for d in range(1, n + 1):
                if n % d == 0:
                    divisors.add(d)
        return all(self.multiplicity(Fraction(1, d) % 1 if d > 1 else Fraction(0)) >= 0
                   for d in divisors)

    def __str__(self):
        if not self.exps:
            return "1"
        pos = [(n, e) for n, e in sorted(self.exps.items()) if e > 0]
        neg = [(n, -e) for n, e in sorted(self.exps.items()) if e < 0]

        def fmt(items):
            return "*".join(
                f"(t^{n} - 1)" + (f"^{e}" if e != 1 else "") for n, e in items
            )

        if not neg:
            return fmt(pos)
        den = fmt(neg)
        if len(neg) > 1:
            den = f"({den})"
        return f"{fmt(pos) if pos else '1'} / {den}"

    def __repr__(self):
        return f"CycloProduct({self.exps})"


def cyclo_multiplicity(product, q):
    """Order of vanishing of the product at the root of unity exp(2*pi*i*q)."""
    return product.multiplicity(q)
