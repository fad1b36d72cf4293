"""Exact univariate arithmetic over the rationals.

QPoly is a polynomial in q with Fraction coefficients, stored dense with no
trailing zeros.  RatFuncQ is the field element: a reduced quotient of two
polynomials in q.  Internally a RatFuncQ is kept in the normal form

    scale * num / den

where num and den are primitive integer polynomials with positive leading
coefficients, gcd(num, den) = 1, and scale is a Fraction carrying sign and
content.  That form is in bijection with the monic-denominator canonical
form the public .num/.den properties expose, so two values are equal exactly
when their stored fields are equal.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _intpoly as _ip


def _fraction_text(f: Fraction) -> str:
    return str(f)


def _poly_text(coeffs) -> str:
    """Sparse rendering, highest power first: '3*q^2 - 1', 'q', '0'."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = _fraction_text(mag)
        elif mag == 1:
            body = "q" if e == 1 else f"q^{e}"
        else:
            body = f"{_fraction_text(mag)}*q" if e == 1 else f"{_fraction_text(mag)}*q^{e}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


class QPoly:
    """Immutable polynomial in q over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        vals = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while vals and not vals[-1]:
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def eval_at(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other):
        out = list(self.coeffs) + [Fraction(0)] * (len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return QPoly(out)

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent on a polynomial")
        out = QPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        lb = other.coeffs[-1]
        q = [Fraction(0)] * max(len(r) - len(other.coeffs) + 1, 0)
        for i in range(len(r) - len(other.coeffs), -1, -1):
            c = r[i + len(other.coeffs) - 1] / lb
            if c:
                q[i] = c
                for j, bj in enumerate(other.coeffs):
                    r[i + j] -= c * bj
        return QPoly(q), QPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def to_text(self) -> str:
        return _poly_text(self.coeffs)

    def __repr__(self):
        return f"QPoly({self.to_text()!r})"


def _to_int_core(obj) -> tuple[Fraction, tuple]:
    """Coerce a poly-like object to (prefactor, primitive int coefficients)."""
    if isinstance(obj, QPoly):
        fracs = obj.coeffs
    elif isinstance(obj, (int, Fraction)):
        fracs = (Fraction(obj),)
    else:
        fracs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in obj)
    fracs = _trim_fracs(fracs)
    if not fracs:
        return Fraction(0), ()
    lcm = 1
    for c in fracs:
        lcm = math.lcm(lcm, c.denominator)
    ints = [int(c * lcm) for c in fracs]
    content, prim = _ip.content_primitive(ints)
    return Fraction(content, lcm), prim


def _trim_fracs(fracs):
    n = len(fracs)
    while n and not fracs[n - 1]:
        n -= 1
    return fracs[:n]


class RatFuncQ:
    """Canonical reduced quotient of two polynomials in q."""

    __slots__ = ("_scale", "_num", "_den")

    def __init__(self, num=0, den=1):
        fn, pn = _to_int_core(num)
        fd, pd = _to_int_core(den)
        if not pd:
            raise ZeroDivisionError("zero denominator")
        if not pn:
            self._install(Fraction(0), (), (1,))
            return
        g, qn, qd = _ip.gcd_cofactors(pn, pd)
        sn = 1 if qn[-1] > 0 else -1
        sd = 1 if qd[-1] > 0 else -1
        self._install(
            (fn / fd) * sn * sd,
            _ip.scale(qn, sn),
            _ip.scale(qd, sd),
        )

    def _install(self, scale, num, den):
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFuncQ is immutable")

    @classmethod
    def _raw(cls, scale: Fraction, num: tuple, den: tuple) -> "RatFuncQ":
        out = object.__new__(cls)
        if not scale or not num:
            out._install(Fraction(0), (), (1,))
        else:
            out._install(scale, num, den)
        return out

    # --- views -------------------------------------------------------------

    @property
    def num(self) -> QPoly:
        """Numerator of the monic-denominator canonical form."""
        if not self._scale:
            return QPoly()
        s = self._scale / self._den[-1]
        return QPoly([s * c for c in self._num])

    @property
    def den(self) -> QPoly:
        """Monic denominator of the canonical form."""
        lc = self._den[-1]
        return QPoly([Fraction(c, lc) for c in self._den])

    def is_zero(self) -> bool:
        return not self._scale

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self._scale if self._scale else Fraction(0)

    # --- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFuncQ):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFuncQ._raw(Fraction(other), (1,), (1,))
        if isinstance(other, QPoly):
            return RatFuncQ(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._scale:
            return other
        if not other._scale:
            return self
        g1, da_r, db_r = _ip.gcd_cofactors(self._den, other._den)
        sa, sb = self._scale, other._scale
        w = math.lcm(sa.denominator, sb.denominator)
        ua = sa.numerator * (w // sa.denominator)
        ub = sb.numerator * (w // sb.denominator)
        t = _ip.add(
            _ip.mul(_ip.scale(self._num, ua), db_r),
            _ip.mul(_ip.scale(other._num, ub), da_r),
        )
        if not t:
            return _RF_ZERO
        _g2, t_r, g1_r = _ip.gcd_cofactors(t, g1)
        den = _ip.mul(da_r, _ip.mul(db_r, g1_r))
        ct, tp = _ip.content_primitive(t_r)
        return RatFuncQ._raw(Fraction(ct, w), tp, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ._raw(-self._scale, self._num, self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._scale or not other._scale:
            return _RF_ZERO
        _g1, na_r, db_r = _ip.gcd_cofactors(self._num, other._den)
        _g2, nb_r, da_r = _ip.gcd_cofactors(other._num, self._den)
        num = _ip.mul(na_r, nb_r)
        den = _ip.mul(da_r, db_r)
        sn = 1 if num[-1] > 0 else -1
        return RatFuncQ._raw(
            self._scale * other._scale * sn,
            _ip.scale(num, sn),
            den,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFuncQ":
        if not self._scale:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFuncQ._raw(1 / self._scale, self._den, self._num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        if not self._scale:
            return _RF_ZERO if e else _RF_ONE
        return RatFuncQ._raw(
            self._scale**e, _ip.pow_(self._num, e), _ip.pow_(self._den, e)
        )

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self._scale == other._scale
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self):
        return hash((self._scale, self._num, self._den))

    def __bool__(self):
        return bool(self._scale)

    # --- substitutions and evaluation ----------------------------------------

    def subst_q_inverse(self) -> "RatFuncQ":
        """The image under q -> 1/q, re-expressed as a reduced quotient."""
        if not self._scale:
            return self
        num_r = _ip.trim(tuple(reversed(self._num)))
        den_r = _ip.trim(tuple(reversed(self._den)))
        k = (len(self._den) - 1) - (len(self._num) - 1)
        if k >= 0:
            num2, den2 = _ip.shift(num_r, k), den_r
        else:
            num2, den2 = num_r, _ip.shift(den_r, -k)
        sn = 1 if num2[-1] > 0 else -1
        sd = 1 if den2[-1] > 0 else -1
        return RatFuncQ._raw(
            self._scale * sn * sd, _ip.scale(num2, sn), _ip.scale(den2, sd)
        )

    def eval_at(self, q0) -> Fraction:
        """Exact value at a rational point; raises ZeroDivisionError on a pole."""
        q0 = Fraction(q0)
        if not self._scale:
            return Fraction(0)
        d = _ip.eval_frac(self._den, q0)
        if not d:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return self._scale * _ip.eval_frac(self._num, q0) / d

    def to_text(self) -> str:
        return f"{self.num.to_text()} / {self.den.to_text()}"

    def __repr__(self):
        return f"RatFuncQ({self.to_text()!r})"


_RF_ZERO = RatFuncQ._raw(Fraction(0), (), (1,))
_RF_ONE = RatFuncQ._raw(Fraction(1), (1,), (1,))


def rf_zero() -> RatFuncQ:
    return _RF_ZERO


def rf_one() -> RatFuncQ:
    return _RF_ONE


def rf_arith(a: RatFuncQ, b: RatFuncQ, op: str) -> RatFuncQ:
    """Field operations by name; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _q_valuation(a: tuple) -> int:
    v = 0
    while not a[v]:
        v += 1
    return v


def rf_linear_combination(terms) -> RatFuncQ:
    """Sum of coeff * value over a shared denominator with one final reduction.

    terms is an iterable of (coeff, value) pairs; coeff may be an int, a
    Fraction, or a RatFuncQ.  Much faster than repeated binary addition when
    the denominators nest, which is how chained Euler-number denominators
    behave: only one full gcd runs at the end instead of one per term.
    """
    flat = []
    for c, v in terms:
        if isinstance(v, (int, Fraction)):
            v = RatFuncQ._coerce(v)
        if isinstance(c, RatFuncQ):
            if c.is_zero() or v.is_zero():
                continue
            s = c._scale * v._scale
            num = _ip.mul(c._num, v._num)
            den = _ip.mul(c._den, v._den)
        else:
            if not c or v.is_zero():
                continue
            s = v._scale * c
            num, den = v._num, v._den
        flat.append((s, _q_valuation(num), num, _q_valuation(den), den))
    if not flat:
        return _RF_ZERO
    # strip pure q-power factors so the lcm loop only sees constant-term-1 parts
    flat = [
        (s, vn, num[vn:] if vn else num, vd, den[vd:] if vd else den)
        for s, vn, num, vd, den in flat
    ]
    rest = flat[0][4]
    for _s, _vn, _num, _vd, den in flat[1:]:
        _g, _r, extra = _ip.gcd_cofactors(rest, den)
        rest = _ip.mul(rest, extra)
    vmax = max(vd for _s, _vn, _num, vd, _den in flat)
    w = 1
    for s, *_ in flat:
        w = math.lcm(w, s.denominator)
    total: tuple = ()
    for s, vn, num, vd, den in flat:
        u = s.numerator * (w // s.denominator)
        part = _ip.mul(num, _ip.div_exact(rest, den))
        total = _ip.add(total, _ip.shift(_ip.scale(part, u), vn + vmax - vd))
    if not total:
        return _RF_ZERO
    vt = _q_valuation(total)
    total = total[vt:] if vt else total
    _g, num_r, den_r = _ip.gcd_cofactors(total, rest)
    knet = vt - vmax
    if knet >= 0:
        num_r = _ip.shift(num_r, knet)
    else:
        den_r = _ip.shift(den_r, -knet)
    ct, num_p = _ip.content_primitive(num_r)
    return RatFuncQ._raw(Fraction(ct, w), num_p, den_r)


def rf_subst_q_inverse(a: RatFuncQ) -> RatFuncQ:
    return a.subst_q_inverse()
