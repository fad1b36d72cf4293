"""q-analog special values.

This module holds the mathematical content the rest of the library is built
around: q-numbers, basis (Bernstein-type) polynomials in the q-number and its
inverted-q complement, the twisted weighted Euler numbers and polynomials in
two independent forms (a solved recurrence and a finite closed rational
form), and the moment functional that turns polynomial integrands in the
q-number into linear combinations of Euler numbers.

Values live in the cyclotomic ring CycloRF at the level fixed by an
EulerParams triple (p, m, h): p an odd prime, m the power of the root of
unity twisting the weight, h the integer weight exponent.  Arguments x of
polynomials are restricted to integers so that q^(l*x) and the twist raised
to x are exact ring elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloRF, cyclo_linear_combination, is_odd_prime
from .qpoly import RatFuncQ, rf_one, rf_zero


@lru_cache(maxsize=None)
def q_pow(k: int) -> RatFuncQ:
    """q^k as a rational function; negative k becomes 1/q^|k|."""
    if k >= 0:
        return RatFuncQ([0] * k + [1])
    return RatFuncQ(1, [0] * (-k) + [1])


@lru_cache(maxsize=None)
def q_number(x: int) -> RatFuncQ:
    """The q-analogue [x]_q = (1 - q^x) / (1 - q) of an integer."""
    if x >= 0:
        return RatFuncQ([1] * x) if x else rf_zero()
    # (1 - q^x)/(1 - q) = -(1 + q + ... + q^(|x|-1)) / q^|x|
    return RatFuncQ([-1] * (-x), [0] * (-x) + [1])


@lru_cache(maxsize=None)
def q_number_inv_arg(x: int) -> RatFuncQ:
    """[x] evaluated in the inverted base, i.e. [x]_q with q -> 1/q."""
    return q_number(x).subst_q_inverse()


@lru_cache(maxsize=None)
def _q_number_pow(x: int, e: int) -> RatFuncQ:
    return q_number(x) ** e


@dataclass(frozen=True)
class EulerParams:
    """Parameter triple (p, m, h) selecting the twisted Euler family."""

    p: int
    m: int
    h: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.m < 0:
            raise ValueError("level m must be >= 0")


@dataclass(frozen=True)
class MomentPoly:
    """Polynomial integrand in the moment variable t = [x]_q.

    coeffs[j] is the scalar multiplying t^j; the implied integrand is the sum
    of coeffs[j] * [x]_q^j against the alternating measure with the weight
    q^((h-1)x) * twist^x supplied at integration time.
    """

    coeffs: tuple

    def __init__(self, coeffs):
        vals = [c if isinstance(c, RatFuncQ) else RatFuncQ(c) for c in coeffs]
        while vals and vals[-1].is_zero():
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "MomentPoly") -> "MomentPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return MomentPoly(())
        out = [rf_zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return MomentPoly(out)

    @classmethod
    def t_power(cls, k: int) -> "MomentPoly":
        return cls([0] * k + [1])

    @classmethod
    def one_minus_t_power(cls, n: int) -> "MomentPoly":
        return cls([Fraction((-1) ** l) * math.comb(n, l) for l in range(n + 1)])


def bernstein(k: int, n: int, x: int) -> RatFuncQ:
    """Degree-n basis polynomial at integer x: C(n,k) [x]^k [1-x]_inv^(n-k)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return math.comb(n, k) * _q_number_pow(x, k) * (q_number_inv_arg(1 - x) ** (n - k))


def bernstein_moment_poly(k: int, n: int) -> MomentPoly:
    """The same basis polynomial expanded in the moment variable.

    Via the complement identity the factor in the inverted base becomes
    (1 - t)^(n-k), so the coefficient of t^(k+l) is
    C(n,k) C(n-k,l) (-1)^l.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    cnk = math.comb(n, k)
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n - k + 1):
        coeffs[k + l] = Fraction((-1) ** l * cnk * math.comb(n - k, l))
    return MomentPoly(coeffs)


class EulerCache:
    """Memoized twisted Euler values for one parameter triple.

    All stored values are immutable ring elements; the cache itself is plain
    mutable state and should be confined to a single worker (or guarded) when
    parameter points are evaluated in parallel.
    """

    def __init__(self, params: EulerParams):
        self.params = params
        p, m = params.p, params.m
        self.zeta = CycloRF.zeta_power(p, m, 1)
        self.one = CycloRF.one(p, m)
        self.two_q = RatFuncQ([1, 1])
        self._values: list[CycloRF] = []
        self._closed: dict[int, CycloRF] = {}
        self._reflected: dict[int, CycloRF] = {}
        self._inv_one_plus: dict[int, CycloRF] = {}
        self._poly: dict[tuple[int, int], CycloRF] = {}
        self._poly_closed: dict[tuple[int, int], CycloRF] = {}
        self._reflected_poly: dict[tuple[int, int], CycloRF] = {}
        self._moments: dict[tuple, CycloRF] = {}
        self._alt_sums: dict[tuple[int, int], CycloRF] = {}

    # --- building blocks -----------------------------------------------------

    def constant(self, value) -> CycloRF:
        return CycloRF.constant(self.params.p, self.params.m, value)

    def zeta_power(self, e: int) -> CycloRF:
        return CycloRF.zeta_power(self.params.p, self.params.m, e)

    def inv_one_plus(self, a: int) -> CycloRF:
        """Inverse of 1 + q^a * zeta, the recurring denominator element."""
        got = self._inv_one_plus.get(a)
        if got is None:
            got = (self.one + self.zeta * q_pow(a)).inv()
            self._inv_one_plus[a] = got
        return got

    # --- Euler numbers ---------------------------------------------------------

    def euler_number(self, n: int) -> CycloRF:
        """E_n from the solved recurrence.

        E_0 = (1+q)/(1 + q^h zeta); for n > 0 the umbral relation
        q^h zeta (qE + 1)^n + E_n = 0 isolates
        E_n = -q^h zeta * sum_{l<n} C(n,l) q^l E_l / (1 + q^(h+n) zeta).
        """
        if n < 0:
            raise ValueError("degree must be >= 0")
        h = self.params.h
        v = self._values
        while len(v) <= n:
            k = len(v)
            if k == 0:
                e = self.inv_one_plus(h) * self.two_q
            else:
                acc = cyclo_linear_combination(
                    (math.comb(k, l) * q_pow(l), v[l]) for l in range(k)
                )
                e = -(acc * self.inv_one_plus(h + k) * self.zeta * q_pow(h))
            v.append(e)
        return v[n]

    def euler_number_closed(self, n: int) -> CycloRF:
        """E_n from the finite closed rational form

        (1+q)/(1-q)^n * sum_l C(n,l) (-1)^l / (1 + q^(h+l) zeta).
        """
        if n < 0:
            raise ValueError("degree must be >= 0")
        got = self._closed.get(n)
        if got is None:
            h = self.params.h
            acc = cyclo_linear_combination(
                ((-1) ** l * math.comb(n, l), self.inv_one_plus(h + l))
                for l in range(n + 1)
            )
            pref = self.two_q * (RatFuncQ([1, -1]) ** -n)
            got = acc * pref
            self._closed[n] = got
        return got

    def reflected_euler(self, n: int) -> CycloRF:
        """E_n with q -> 1/q and the twist inverted, from the cached value."""
        got = self._reflected.get(n)
        if got is None:
            got = self.euler_number(n).subst_q_inverse().conj()
            self._reflected[n] = got
        return got

    # --- Euler polynomials -------------------------------------------------------

    def euler_poly(self, n: int, x: int) -> CycloRF:
        """E_n(x) = sum_l C(n,l) [x]^(n-l) q^(l x) E_l."""
        if n < 0:
            raise ValueError("degree must be >= 0")
        if x == 0:
            return self.euler_number(n)
        got = self._poly.get((n, x))
        if got is None:
            self.euler_number(n)
            got = cyclo_linear_combination(
                (
                    math.comb(n, l) * _q_number_pow(x, n - l) * q_pow(l * x),
                    self.euler_number(l),
                )
                for l in range(n + 1)
            )
            self._poly[(n, x)] = got
        return got

    def euler_poly_closed(self, n: int, x: int) -> CycloRF:
        """E_n(x) in closed form:
        (1+q)/(1-q)^n * sum_l C(n,l) (-1)^l q^(l x) / (1 + q^(h+l) zeta)."""
        if n < 0:
            raise ValueError("degree must be >= 0")
        got = self._poly_closed.get((n, x))
        if got is None:
            h = self.params.h
            acc = cyclo_linear_combination(
                (((-1) ** l * math.comb(n, l)) * q_pow(l * x), self.inv_one_plus(h + l))
                for l in range(n + 1)
            )
            got = acc * (self.two_q * (RatFuncQ([1, -1]) ** -n))
            self._poly_closed[(n, x)] = got
        return got

    def reflected_euler_poly(self, n: int, x: int) -> CycloRF:
        """E_n(x) for the (1/q, inverted-twist) family, by automorphisms."""
        got = self._reflected_poly.get((n, x))
        if got is None:
            got = self.euler_poly(n, x).subst_q_inverse().conj()
            self._reflected_poly[(n, x)] = got
        return got

    # --- the moment functional ------------------------------------------------------

    def integrate(self, mp: MomentPoly) -> CycloRF:
        """Integrate a moment polynomial: t^j contributes E_j by linearity."""
        got = self._moments.get(mp.coeffs)
        if got is None:
            if not mp.coeffs:
                got = CycloRF.zero(self.params.p, self.params.m)
            else:
                self.euler_number(mp.degree)
                got = cyclo_linear_combination(
                    (c, self.euler_number(j)) for j, c in enumerate(mp.coeffs) if c
                )
            self._moments[mp.coeffs] = got
        return got

    def reflected_alternating_sum(self, total: int, width: int) -> CycloRF:
        """sum_{l=0}^{width} C(width,l) (-1)^(width+l) * reflected E_(total-l)."""
        got = self._alt_sums.get((total, width))
        if got is None:
            self.reflected_euler(total)
            got = cyclo_linear_combination(
                ((-1) ** (width + l) * math.comb(width, l), self.reflected_euler(total - l))
                for l in range(width + 1)
            )
            self._alt_sums[(total, width)] = got
        return got


def _cache_for(params: EulerParams, cache: EulerCache | None) -> EulerCache:
    if cache is None:
        return EulerCache(params)
    if cache.params != params:
        raise ValueError("cache built for different parameters")
    return cache


def euler_number(n: int, params: EulerParams, cache: EulerCache | None = None) -> CycloRF:
    return _cache_for(params, cache).euler_number(n)


def euler_number_closed(n: int, params: EulerParams, cache: EulerCache | None = None) -> CycloRF:
    return _cache_for(params, cache).euler_number_closed(n)


def euler_poly(n: int, x: int, params: EulerParams, cache: EulerCache | None = None) -> CycloRF:
    return _cache_for(params, cache).euler_poly(n, x)


def euler_poly_closed(n: int, x: int, params: EulerParams, cache: EulerCache | None = None) -> CycloRF:
    return _cache_for(params, cache).euler_poly_closed(n, x)


def integrate_moments(mp: MomentPoly, params: EulerParams, cache: EulerCache | None = None) -> CycloRF:
    return _cache_for(params, cache).integrate(mp)


def integral_reflected_power(n: int, params: EulerParams, cache: EulerCache | None = None) -> CycloRF:
    """Integral of [1-x]_inv^n against the weighted alternating measure,
    computed through the moment expansion of (1 - t)^n."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _cache_for(params, cache).integrate(MomentPoly.one_minus_t_power(n))


def classical_euler_numbers(count: int) -> list[Fraction]:
    """Values at 0 of the classical Euler polynomials, from the plain
    recurrence 2 E_n + sum_{l<n} C(n,l) E_l = 0 with E_0 = 1.

    Independent of the q-machinery; used as the q -> 1 regression oracle.
    """
    out = [Fraction(1)]
    for n in range(1, count):
        s = sum(math.comb(n, l) * out[l] for l in range(n))
        out.append(Fraction(-s, 2))
    return out
