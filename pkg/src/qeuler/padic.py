"""Numeric p-adic engine.

Arithmetic happens in (Z/p^K)[z]/Phi(z) with Phi the p^m-th cyclotomic
polynomial: plain coefficient residues mod p^K, no per-element precision
tracking.  That is enough for what the library measures, namely p-adic
valuations of differences between the exact engine specialized at a rational
q0 and the truncated alternating sums that define the integral.

The truncated integral of the weighted power integrand is

    (1 + q0) / (1 + q0^(p^N)) * sum_{x=0}^{p^N - 1} [x]^n zeta^x q0^((h-1)x) (-q0)^x

evaluated with [x] the q0-number built incrementally, the twist read off a
period-p^m residue table, and the alternating weight folded into a single
running multiplier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloRF, euler_phi_prime_power, is_odd_prime
from .qspecial import EulerParams


class NonUnitError(ValueError):
    """An element (or a required denominator) is not a unit in the ring."""


@dataclass(frozen=True)
class PadicConfig:
    """Ring selection: odd prime p, precision exponent K, level m, base q0.

    q0 must be congruent to 1 mod p (the p-adically-close-to-1 assumption);
    it defaults to 1 + p.
    """

    p: int
    K: int
    m: int
    q0: int | None = None

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.K < 1:
            raise ValueError("precision exponent K must be >= 1")
        if self.m < 0:
            raise ValueError("level m must be >= 0")
        if self.q0 is None:
            object.__setattr__(self, "q0", 1 + self.p)
        if self.q0 % self.p != 1:
            raise ValueError(f"q0 must be congruent to 1 mod p, got {self.q0}")

    @property
    def modulus(self) -> int:
        return self.p**self.K


def _reduce_zeta_int(vec: list[int], p: int, m: int, pK: int) -> list[int]:
    phi = euler_phi_prime_power(p, m)
    s = p ** (m - 1) if m else 1
    work = list(vec) + [0] * max(phi - len(vec), 0)
    for i in range(len(work) - 1, phi - 1, -1):
        c = work[i]
        if c:
            for j in range(p - 1):
                k = i - phi + j * s
                work[k] = (work[k] - c) % pK
    return [c % pK for c in work[:phi]]


class PadicExt:
    """Element of (Z/p^K)[z]/Phi(z), coefficients lowest power first."""

    __slots__ = ("p", "K", "m", "coeffs")

    def __init__(self, p: int, K: int, m: int, coeffs):
        phi = euler_phi_prime_power(p, m)
        vals = [c % (p**K) for c in coeffs]
        if len(vals) != phi:
            raise ValueError(f"expected {phi} coefficients, got {len(vals)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("PadicExt is immutable")

    @classmethod
    def zero(cls, cfg: PadicConfig) -> "PadicExt":
        return cls(cfg.p, cfg.K, cfg.m, [0] * euler_phi_prime_power(cfg.p, cfg.m))

    @classmethod
    def from_int(cls, cfg: PadicConfig, value: int) -> "PadicExt":
        phi = euler_phi_prime_power(cfg.p, cfg.m)
        return cls(cfg.p, cfg.K, cfg.m, [value] + [0] * (phi - 1))

    @classmethod
    def one(cls, cfg: PadicConfig) -> "PadicExt":
        return cls.from_int(cfg, 1)

    @classmethod
    def zeta_power(cls, cfg: PadicConfig, e: int) -> "PadicExt":
        if cfg.m == 0:
            return cls.one(cfg)
        order = cfg.p**cfg.m
        e %= order
        vec = [0] * (e + 1)
        vec[e] = 1
        return cls(cfg.p, cfg.K, cfg.m, _reduce_zeta_int(vec, cfg.p, cfg.m, cfg.modulus))

    def _same_ring(self, other: "PadicExt"):
        if (self.p, self.K, self.m) != (other.p, other.K, other.m):
            raise ValueError("ring mismatch between p-adic elements")

    def __add__(self, other):
        self._same_ring(other)
        pK = self.p**self.K
        return PadicExt(self.p, self.K, self.m,
                        [(a + b) % pK for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same_ring(other)
        pK = self.p**self.K
        return PadicExt(self.p, self.K, self.m,
                        [(a - b) % pK for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        pK = self.p**self.K
        return PadicExt(self.p, self.K, self.m, [-a % pK for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            pK = self.p**self.K
            return PadicExt(self.p, self.K, self.m,
                            [a * other % pK for a in self.coeffs])
        self._same_ring(other)
        pK = self.p**self.K
        a, b = self.coeffs, other.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] = (conv[i + j] + ai * bj) % pK
        return PadicExt(self.p, self.K, self.m,
                        _reduce_zeta_int(conv, self.p, self.m, pK))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PadicExt):
            return NotImplemented
        return ((self.p, self.K, self.m) == (other.p, other.K, other.m)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.K, self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"PadicExt(p={self.p}, K={self.K}, m={self.m}, {list(self.coeffs)})"

    def is_unit(self) -> bool:
        """Unit test: nonzero image modulo the maximal ideal (p, z - 1)."""
        return sum(self.coeffs) % self.p != 0

    def valuation(self) -> int:
        """Min coefficient valuation, capped at K (K means indistinguishable
        from zero at this precision)."""
        best = self.K
        for c in self.coeffs:
            if c:
                v = 0
                while c % self.p == 0:
                    c //= self.p
                    v += 1
                best = min(best, v)
                if best == 0:
                    return 0
        return best

    def inv(self) -> "PadicExt":
        """Inverse by Newton iteration from a seed inverse mod p.

        The seed inverts the image in the residue field; each step squares
        the error ideal, and the maximal ideal is nilpotent mod p^K, so the
        iteration reaches an exact inverse in O(log(K * phi)) steps.
        """
        s = sum(self.coeffs) % self.p
        if s == 0:
            raise NonUnitError("not a unit: zero image modulo the maximal ideal")
        cfg_one = PadicExt(self.p, self.K, self.m,
                           [1] + [0] * (len(self.coeffs) - 1))
        x = PadicExt(self.p, self.K, self.m,
                     [pow(s, -1, self.p)] + [0] * (len(self.coeffs) - 1))
        two = PadicExt(self.p, self.K, self.m,
                       [2] + [0] * (len(self.coeffs) - 1))
        for _ in range(64):
            ax = self * x
            if ax == cfg_one:
                return x
            x = x * (two - ax)
        raise ArithmeticError("inverse iteration failed to converge")


def pad_arith(a: PadicExt, b: PadicExt, op: str) -> PadicExt:
    """Ring operations by name; op is one of add, sub, mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def pad_inv(a: PadicExt) -> PadicExt:
    return a.inv()


def specialize(a: CycloRF, cfg: PadicConfig) -> PadicExt:
    """Map an exact ring element into the numeric ring at q = q0.

    Each coefficient is evaluated exactly as a rational number at q0 and then
    reduced mod p^K, which requires its reduced denominator to be a p-unit.
    """
    if a.p != cfg.p or a.m != cfg.m:
        raise ValueError("exact element and numeric config disagree on (p, m)")
    pK = cfg.modulus
    out = []
    for j, c in enumerate(a.coeffs):
        if c.is_zero():
            out.append(0)
            continue
        try:
            v = c.eval_at(Fraction(cfg.q0))
        except ZeroDivisionError:
            raise NonUnitError(
                f"coefficient of zeta^{j}: denominator vanishes at q0 = {cfg.q0}"
            ) from None
        if v.denominator % cfg.p == 0:
            raise NonUnitError(
                f"coefficient of zeta^{j}: denominator is not a unit at q0 = {cfg.q0}"
            )
        out.append(v.numerator * pow(v.denominator, -1, pK) % pK)
    return PadicExt(cfg.p, cfg.K, cfg.m, out)


def fermionic_integral_truncated(
    n: int, params: EulerParams, cfg: PadicConfig, N: int
) -> PadicExt:
    """Level-N truncation of the alternating-measure integral of
    [x]^n zeta^x q0^((h-1)x)."""
    if params.p != cfg.p or params.m != cfg.m:
        raise ValueError("parameters and numeric config disagree on (p, m)")
    if n < 0:
        raise ValueError("moment degree must be >= 0")
    if N < cfg.m:
        raise ValueError(f"truncation level N = {N} must be >= m = {cfg.m}")
    pK = cfg.modulus
    q0 = cfg.q0 % pK
    period = cfg.p**cfg.m
    qh = pow(q0, params.h, pK)
    sums = [0] * period
    bx = 0      # the q0-number of x
    w = 1       # q0^(h x)
    sign = 1    # (-1)^x
    for x in range(cfg.p**N):
        term = pow(bx, n, pK) * w
        i = x % period
        sums[i] = (sums[i] + sign * term) % pK
        bx = (1 + q0 * bx) % pK
        w = w * qh % pK
        sign = -sign
    vec = _reduce_zeta_int(sums, cfg.p, cfg.m, pK)
    den = 1 + pow(q0, cfg.p**N, pK)
    factor = (1 + q0) * pow(den, -1, pK) % pK
    return PadicExt(cfg.p, cfg.K, cfg.m, [c * factor % pK for c in vec])


@dataclass(frozen=True)
class ConvergenceProbe:
    """Witness of the defining limit: values per truncation level and the
    valuations of successive differences."""

    levels: tuple[int, ...]
    values: tuple[PadicExt, ...]
    diff_valuations: tuple[int, ...]

    def non_decreasing(self) -> bool:
        return all(
            a <= b for a, b in zip(self.diff_valuations, self.diff_valuations[1:])
        )


def convergence_probe(
    n: int, params: EulerParams, cfg: PadicConfig, levels
) -> ConvergenceProbe:
    levels = tuple(levels)
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be strictly increasing")
    values = tuple(
        fermionic_integral_truncated(n, params, cfg, N) for N in levels
    )
    diffs = tuple(
        (b - a).valuation() for a, b in zip(values, values[1:])
    )
    return ConvergenceProbe(levels, values, diffs)
