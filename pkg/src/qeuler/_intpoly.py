"""Dense integer-polynomial kernel behind the rational-function layer.

A polynomial is a tuple of Python ints indexed by exponent, with no trailing
zeros; the empty tuple is the zero polynomial.  Everything here is exact.
The fast paths (packed multiplication, evaluation-based gcd and division,
modular degree probes) only return after an exact verification step, and a
pseudo-remainder fallback covers the rare inputs the heuristics give up on.

Multiplication packs each operand into a single big integer (coefficients in
balanced base 2^B) so the product runs through CPython's native bignum
multiply.  GCDs use the evaluation-homomorphism heuristic: gcd of the two
packed values, unpacked back to a candidate polynomial, accepted only when
trial division confirms it and a modular Euclid probe confirms its degree is
maximal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

_SCHOOLBOOK_LIMIT = 1024       # len(a)*len(b) at or below this: nested loops
_SMALL_GCD_LEN = 24            # below this, plain pseudo-remainder gcd wins
_PROBE_PRIMES = (2147483629, 2147483587, 2147483579, 2147483563)


def trim(coeffs) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: tuple, b: tuple) -> tuple:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def neg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def scale(a: tuple, k: int) -> tuple:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def shift(a: tuple, k: int) -> tuple:
    """Multiply by q^k (k >= 0)."""
    if not a:
        return ()
    return (0,) * k + a


def max_abs(a: tuple) -> int:
    return max(abs(c) for c in a) if a else 0


def eval_int(a: tuple, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def eval_frac(a: tuple, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# multiplication

def _halfmask(n: int, B: int) -> int:
    # sum over i < n of 2^(B-1) * 2^(B*i)
    piece = (1 << (B - 1)).to_bytes(B // 8, "little")
    return int.from_bytes(piece * n, "little")


def _pack(a: tuple, B: int) -> int:
    # exact evaluation at 2^B, valid whenever max_abs(a) < 2^(B-1)
    nb = B // 8
    half = 1 << (B - 1)
    buf = b"".join((c + half).to_bytes(nb, "little") for c in a)
    return int.from_bytes(buf, "little") - _halfmask(len(a), B)


def _unpack(v: int, B: int, n: int) -> list:
    # inverse of _pack for results whose coefficients fit in balanced base 2^B;
    # raises OverflowError when the caller's bound was too small
    nb = B // 8
    half = 1 << (B - 1)
    raw = (v + _halfmask(n, B)).to_bytes(n * nb, "little")
    return [
        int.from_bytes(raw[i * nb:(i + 1) * nb], "little") - half
        for i in range(n)
    ]


def _mul_school(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    if len(a) * len(b) <= _SCHOOLBOOK_LIMIT:
        return _mul_school(a, b)
    bound = min(len(a), len(b)) * max_abs(a) * max_abs(b)
    B = ((bound.bit_length() + 2 + 7) // 8) * 8
    n = len(a) + len(b) - 1
    return trim(_unpack(_pack(a, B) * _pack(b, B), B, n))


def pow_(a: tuple, e: int) -> tuple:
    if e < 0:
        raise ValueError("negative exponent")
    out = (1,)
    base = a
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


# ---------------------------------------------------------------------------
# content and primitive part

def content_primitive(a: tuple) -> tuple[int, tuple]:
    """Return (content, primitive) with content carrying the leading sign.

    The primitive part has positive leading coefficient; content * primitive
    reconstructs the input exactly.  Zero maps to (0, ()).
    """
    if not a:
        return 0, ()
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if a[-1] < 0:
        g = -g
    return g, tuple(c // g for c in a)


# ---------------------------------------------------------------------------
# division

@lru_cache(maxsize=4096)
def _eval_pow2(a: tuple, B: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc << B) + c
    return acc


def _divmod_frac(a: tuple, b: tuple):
    """Schoolbook division over Q; returns (quotient, remainder) as Fraction lists."""
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] / lb
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                r[i + j] -= c * bj
    while r and not r[-1]:
        r.pop()
    return q, r


def _div_via_eval(a: tuple, b: tuple):
    """Exact quotient a // b when b divides a, else None.  Always certain."""
    if len(a) < len(b):
        return None
    n = len(a) - len(b) + 1
    B = ((max(max_abs(a), max_abs(b)).bit_length() + 10 + 7) // 8) * 8
    for _ in range(3):
        A = _eval_pow2(a, B)
        Bv = _eval_pow2(b, B)
        q, r = divmod(A, Bv)
        if r:
            return None  # b(t) does not divide a(t), so b cannot divide a
        try:
            cand = trim(_unpack(q, B, n))
        except OverflowError:
            B *= 2
            continue
        if mul(cand, b) == a:
            return cand
        B *= 2
    q, r = _divmod_frac(a, b)
    if r or any(c.denominator != 1 for c in q):
        return None
    return trim([int(c) for c in q])


def div_exact(a: tuple, b: tuple) -> tuple:
    """Quotient of an exact division; the divisor is known to divide a."""
    if not a:
        return ()
    q = _div_via_eval(a, b)
    if q is None:
        raise ArithmeticError("exact division failed: divisor does not divide")
    return q


# ---------------------------------------------------------------------------
# gcd

def _balanced_digits(v: int, base: int) -> list:
    digits = []
    while v:
        r = v % base
        if r > base // 2:
            r -= base
        digits.append(r)
        v = (v - r) // base
    return digits


def _np_trim(v):
    n = v.size
    while n and not v[n - 1]:
        n -= 1
    return v[:n]


@lru_cache(maxsize=1024)
def _np_image(a: tuple, P: int):
    v = _np_trim(np.fromiter((c % P for c in a), dtype=np.int64, count=len(a)))
    v.setflags(write=False)
    return v


def _gcd_degree_mod(a: tuple, b: tuple, P: int):
    """Degree of gcd(a mod P, b mod P); an upper bound for deg gcd(a, b)."""
    fa = _np_image(a, P)
    fb = _np_image(b, P)
    while fb.size:
        if fa.size < fb.size:
            fa, fb = fb, fa
            continue
        inv = pow(int(fb[-1]), -1, P)
        bm = (fb * inv) % P
        r = fa.copy()
        while r.size >= bm.size:
            c = int(r[-1])
            if c:
                r[-bm.size:] = (r[-bm.size:] - c * bm) % P
            r = r[:-1]
        fa, fb = fb, _np_trim(r)
    return fa.size - 1


def _gcd_degree_mod_small(a: tuple, b: tuple, P: int):
    # plain-int variant; faster than numpy below ~degree 50
    fa = [c % P for c in a]
    fb = [c % P for c in b]
    while fa and not fa[-1]:
        fa.pop()
    while fb and not fb[-1]:
        fb.pop()
    while fb:
        if len(fa) < len(fb):
            fa, fb = fb, fa
            continue
        inv = pow(fb[-1], -1, P)
        r = fa[:]
        nb = len(fb)
        while len(r) >= nb:
            c = r[-1] * inv % P
            if c:
                off = len(r) - nb
                for j in range(nb - 1):
                    r[off + j] = (r[off + j] - c * fb[j]) % P
            r.pop()
        while r and not r[-1]:
            r.pop()
        fa, fb = fb, r
    return len(fa) - 1


def _mod_degree_probe(a: tuple, b: tuple):
    small = len(a) <= 50
    for P in _PROBE_PRIMES:
        if a[-1] % P and b[-1] % P:
            if small:
                return _gcd_degree_mod_small(a, b, P)
            return _gcd_degree_mod(a, b, P)
    return None


def _heugcd(f: tuple, g: tuple, d: int):
    """Evaluation-homomorphism gcd attempt; returns (h, f//h, g//h) or None.

    d is the target degree from the modular probe; only candidates of that
    exact degree are accepted, which makes an accepted answer the true gcd.
    """
    xi = 2 * min(max_abs(f), max_abs(g)) + 29
    for _ in range(4):
        H = math.gcd(eval_int(f, xi), eval_int(g, xi))
        h = content_primitive(trim(_balanced_digits(H, xi)))[1]
        if len(h) - 1 == d:
            qf = _div_via_eval(f, h)
            if qf is not None:
                qg = _div_via_eval(g, h)
                if qg is not None:
                    return h, qf, qg
        xi = (xi * 11) // 4 + 29
    return None


def _pseudo_rem(a: tuple, b: tuple) -> tuple:
    r = a
    lcb = b[-1]
    while len(r) >= len(b):
        r = sub(scale(r, lcb), shift(scale(b, r[-1]), len(r) - len(b)))
    return r


def _prs_gcd(f: tuple, g: tuple):
    """Primitive pseudo-remainder gcd with cofactors; unconditionally correct."""
    A, B = f, g
    while B:
        A, B = B, content_primitive(_pseudo_rem(A, B))[1]
    g0 = A if A[-1] > 0 else neg(A)
    return g0, div_exact(f, g0), div_exact(g, g0)


def _gcd_primitive(f: tuple, g: tuple):
    # both primitive with positive leading coefficient, degree >= 1, f != g
    if len(f) < len(g):
        g0, qg, qf = _gcd_primitive(g, f)
        return g0, qf, qg
    vf = 0
    while not f[vf]:
        vf += 1
    vg = 0
    while not g[vg]:
        vg += 1
    v = min(vf, vg)
    if v:
        g0, qf, qg = _gcd_primitive_core(f[v:], g[v:])
        return shift(g0, v), qf, qg
    return _gcd_primitive_core(f, g)


def _gcd_primitive_core(f: tuple, g: tuple):
    if len(g) == 1:  # a primitive constant, so +/-1
        return (1,), f, g
    if len(f) == 1:
        return (1,), f, g
    q = _div_via_eval(f, g)  # denominators in this library usually nest
    if q is not None:
        return g, q, (1,)
    d = _mod_degree_probe(f, g)
    if d == 0:
        return (1,), f, g
    if d is not None:
        got = _heugcd(f, g, d)
        if got is not None:
            return got
    return _prs_gcd(f, g)


def gcd_cofactors(a: tuple, b: tuple):
    """Return (g, a // g, b // g) with g = gcd(a, b), leading coefficient > 0."""
    if not a and not b:
        return (), (), ()
    if not a:
        cb, pb = content_primitive(b)
        g = scale(pb, abs(cb))
        return g, (), ((1,) if cb > 0 else (-1,))
    if not b:
        ca, pa = content_primitive(a)
        g = scale(pa, abs(ca))
        return g, ((1,) if ca > 0 else (-1,)), ()
    ca, pa = content_primitive(a)
    cb, pb = content_primitive(b)
    cg = math.gcd(ca, cb)
    if pa == pb:
        g0, qa0, qb0 = pa, (1,), (1,)
    elif len(pa) == 1 or len(pb) == 1:
        g0, qa0, qb0 = (1,), pa, pb
    else:
        g0, qa0, qb0 = _gcd_primitive(pa, pb)
    return (
        scale(g0, cg),
        scale(qa0, ca // cg),
        scale(qb0, cb // cg),
    )


def gcd(a: tuple, b: tuple) -> tuple:
    return gcd_cofactors(a, b)[0]
