"""Cyclotomic quotient rings over the rational-function field.

CycloRF represents an element of Q(q)[z] / Phi(z) where Phi is the minimal
polynomial of a primitive p^m-th root of unity (p an odd prime).  Elements
are coefficient vectors of fixed length phi(p^m), lowest power of the root
first.  Level m = 0 is the degenerate ring where the root is 1, so the
vector has length one and the ring is Q(q) itself.
"""

from __future__ import annotations

from fractions import Fraction

from .qpoly import QPoly, RatFuncQ, rf_one, rf_zero


class PoleError(ValueError):
    """Evaluation at a rational point hit a vanishing denominator."""


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def euler_phi_prime_power(p: int, m: int) -> int:
    """phi(p^m) with the convention phi(p^0) = 1."""
    if m == 0:
        return 1
    return p ** (m - 1) * (p - 1)


def phi_cyclotomic(p: int, m: int) -> QPoly:
    """Minimal polynomial of a primitive p^m-th root of unity, m >= 1.

    This is 1 + X^s + X^(2s) + ... + X^((p-1)s) with s = p^(m-1).
    """
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1:
        raise ValueError("level m must be >= 1; level 0 has no modulus")
    s = p ** (m - 1)
    coeffs = [0] * ((p - 1) * s + 1)
    for j in range(p):
        coeffs[j * s] = 1
    return QPoly(coeffs)


def _reduce_vec(vec: list, p: int, m: int) -> list:
    """Fold powers >= phi(p^m) using X^phi = -(1 + X^s + ... + X^((p-2)s))."""
    phi = euler_phi_prime_power(p, m)
    s = p ** (m - 1) if m else 1
    if len(vec) < phi:
        vec = vec + [rf_zero()] * (phi - len(vec))
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            for j in range(p - 1):
                k = i - phi + j * s
                vec[k] = vec[k] - c
    return vec[:phi]


class CycloRF:
    """Element of the cyclotomic quotient ring over Q(q)."""

    __slots__ = ("p", "m", "coeffs")

    def __init__(self, p: int, m: int, coeffs):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if m < 0:
            raise ValueError("level m must be >= 0")
        phi = euler_phi_prime_power(p, m)
        vals = [c if isinstance(c, RatFuncQ) else RatFuncQ(c) for c in coeffs]
        if len(vals) != phi:
            raise ValueError(f"expected {phi} coefficients for (p, m) = ({p}, {m}), got {len(vals)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("CycloRF is immutable")

    # --- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, p: int, m: int) -> "CycloRF":
        phi = euler_phi_prime_power(p, m)
        return cls(p, m, [rf_zero()] * phi)

    @classmethod
    def one(cls, p: int, m: int) -> "CycloRF":
        return cls.constant(p, m, rf_one())

    @classmethod
    def constant(cls, p: int, m: int, value) -> "CycloRF":
        phi = euler_phi_prime_power(p, m)
        vals = [value if isinstance(value, RatFuncQ) else RatFuncQ(value)]
        vals += [rf_zero()] * (phi - 1)
        return cls(p, m, vals)

    @classmethod
    def zeta_power(cls, p: int, m: int, e: int) -> "CycloRF":
        """The e-th power of the distinguished primitive p^m-th root."""
        if m == 0:
            return cls.one(p, m)
        order = p**m
        e %= order
        vec = [rf_zero()] * (e + 1)
        vec[e] = rf_one()
        return cls(p, m, _reduce_vec(vec, p, m))

    def _same_ring(self, other: "CycloRF"):
        if self.p != other.p or self.m != other.m:
            raise ValueError(
                f"ring mismatch: (p, m) = ({self.p}, {self.m}) vs ({other.p}, {other.m})"
            )

    # --- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFuncQ)):
            other = CycloRF.constant(self.p, self.m, other)
        if not isinstance(other, CycloRF):
            return NotImplemented
        self._same_ring(other)
        return CycloRF(self.p, self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloRF(self.p, self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFuncQ)):
            other = CycloRF.constant(self.p, self.m, other)
        if not isinstance(other, CycloRF):
            return NotImplemented
        self._same_ring(other)
        return CycloRF(self.p, self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFuncQ)):
            return CycloRF(self.p, self.m, [c * other for c in self.coeffs])
        if not isinstance(other, CycloRF):
            return NotImplemented
        self._same_ring(other)
        a, b = self.coeffs, other.coeffs
        conv = [rf_zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] = conv[i + j] + ai * bj
        return CycloRF(self.p, self.m, _reduce_vec(conv, self.p, self.m))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = CycloRF.one(self.p, self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatFuncQ)):
            other = CycloRF.constant(self.p, self.m, other)
        if not isinstance(other, CycloRF):
            return NotImplemented
        return self.p == other.p and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    # --- inverse ---------------------------------------------------------------

    def inv(self) -> "CycloRF":
        """Multiplicative inverse via the extended Euclidean algorithm.

        The modulus is irreducible over Q(q), so every nonzero element is a
        unit; a nonconstant gcd would mean a zero divisor and is reported as
        an internal error.
        """
        if not self:
            raise ZeroDivisionError("inverse of zero in the cyclotomic ring")
        if self.m == 0:
            return CycloRF(self.p, 0, [self.coeffs[0].reciprocal()])
        s = self.p ** (self.m - 1)
        modulus = [rf_zero()] * ((self.p - 1) * s + 1)
        for j in range(self.p):
            modulus[j * s] = rf_one()
        a = _fp_trim(list(self.coeffs))
        r0, r1 = modulus, a
        t0, t1 = [rf_zero()], [rf_one()]
        while r1:
            q, r = _fp_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _fp_sub(t0, _fp_mul(q, t1))
        if len(r0) != 1:
            raise ArithmeticError("unexpected zero divisor in the cyclotomic ring")
        ginv = r0[0].reciprocal()
        u = [c * ginv for c in t0]
        return CycloRF(self.p, self.m, _reduce_vec(u, self.p, self.m))

    # --- substitutions and evaluation -------------------------------------------

    def conj(self) -> "CycloRF":
        """The ring automorphism sending the root to its inverse."""
        if self.m == 0:
            return self
        order = self.p**self.m
        acc = [rf_zero()] * order
        for j, c in enumerate(self.coeffs):
            if c:
                acc[(-j) % order] = acc[(-j) % order] + c
        return CycloRF(self.p, self.m, _reduce_vec(acc, self.p, self.m))

    def subst_q_inverse(self) -> "CycloRF":
        """Apply q -> 1/q coefficientwise; a ring homomorphism since the
        modulus has constant coefficients."""
        return CycloRF(self.p, self.m, [c.subst_q_inverse() for c in self.coeffs])

    def eval_at_q(self, q0) -> "CycloRF":
        q0 = Fraction(q0)
        out = []
        for j, c in enumerate(self.coeffs):
            try:
                out.append(RatFuncQ(c.eval_at(q0)))
            except ZeroDivisionError:
                raise PoleError(
                    f"pole at q = {q0} in the coefficient of zeta^{j}"
                ) from None
        return CycloRF(self.p, self.m, out)

    def to_text(self) -> str:
        return "; ".join(c.to_text() for c in self.coeffs)

    def __repr__(self):
        return f"CycloRF(p={self.p}, m={self.m}, {self.to_text()!r})"


# --- polynomial helpers over the coefficient field (used by inv) -------------

def _fp_trim(v: list) -> list:
    while v and not v[-1]:
        v.pop()
    return v


def _fp_sub(a: list, b: list) -> list:
    out = list(a) + [rf_zero()] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _fp_trim(out)


def _fp_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [rf_zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _fp_trim(out)


def _fp_divmod(a: list, b: list) -> tuple[list, list]:
    r = list(a)
    q = [rf_zero()] * max(len(a) - len(b) + 1, 0)
    inv_lead = b[-1].reciprocal()
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                r[i + j] = r[i + j] - c * bj
    return _fp_trim(q), _fp_trim(r)


# --- module-level operation surface -------------------------------------------

def cyclo_arith(a: CycloRF, b: CycloRF, op: str) -> CycloRF:
    """Ring operations by name; op is one of add, sub, mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def cyclo_inv(a: CycloRF) -> CycloRF:
    return a.inv()


def zeta_conj(a: CycloRF) -> CycloRF:
    return a.conj()


def eval_at_q_rational(a: CycloRF, q0) -> CycloRF:
    """Evaluate every coefficient at a rational q0 (classical-limit probe)."""
    return a.eval_at_q(q0)


def cyclo_linear_combination(terms) -> CycloRF:
    """Sum of scalar * element pairs, batched per coefficient slot.

    terms is a sequence of (coeff, element) with coeff an int, Fraction, or
    RatFuncQ and every element in the same ring.  Delegates each slot to
    rf_linear_combination so the shared-denominator fast path applies.
    """
    from .qpoly import rf_linear_combination

    terms = [(c, v) for c, v in terms]
    if not terms:
        raise ValueError("empty linear combination has no ring to live in")
    first = terms[0][1]
    for _c, v in terms[1:]:
        first._same_ring(v)
    phi = euler_phi_prime_power(first.p, first.m)
    slots = [
        rf_linear_combination((c, v.coeffs[j]) for c, v in terms)
        for j in range(phi)
    ]
    return CycloRF(first.p, first.m, slots)
