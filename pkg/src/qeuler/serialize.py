"""Canonical text interchange format.

A rational function prints as "num_poly / den_poly" with both polynomials in
sparse descending form, e.g. "3*q^2 - 1 / q^3 + 1/2".  Fractions print with
no interior spaces, so the " / " separator (with surrounding spaces) is
unambiguous.  A ring element prints as the "; "-joined list of its
coefficient strings, lowest power of the root first, always with the full
phi(p^m) entries.  Parsing a ring element needs (p, m) to fix the ring.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloRF, euler_phi_prime_power
from .qpoly import QPoly, RatFuncQ


def poly_to_text(poly: QPoly) -> str:
    return poly.to_text()


def poly_from_text(text: str) -> QPoly:
    text = text.strip()
    if text == "0":
        return QPoly()
    body = text.replace(" - ", " + -").split(" + ")
    coeffs: dict[int, Fraction] = {}
    for term in body:
        term = term.strip()
        if not term:
            raise ValueError(f"empty term in polynomial {text!r}")
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        if "*" in term:
            cpart, mpart = term.split("*", 1)
            coef = Fraction(cpart)
            exp = _parse_monomial(mpart)
        elif term.startswith("q"):
            coef = Fraction(1)
            exp = _parse_monomial(term)
        else:
            coef = Fraction(term)
            exp = 0
        if neg:
            coef = -coef
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    out = [Fraction(0)] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return QPoly(out)


def _parse_monomial(text: str) -> int:
    text = text.strip()
    if text == "q":
        return 1
    if text.startswith("q^"):
        return int(text[2:])
    raise ValueError(f"bad monomial {text!r}")


def rat_func_to_text(rf: RatFuncQ) -> str:
    return rf.to_text()


def rat_func_from_text(text: str) -> RatFuncQ:
    parts = text.split(" / ")
    if len(parts) != 2:
        raise ValueError(f"expected 'num / den', got {text!r}")
    return RatFuncQ(poly_from_text(parts[0]), poly_from_text(parts[1]))


def cyclo_to_text(a: CycloRF) -> str:
    return a.to_text()


def cyclo_from_text(text: str, p: int, m: int) -> CycloRF:
    parts = text.split("; ")
    phi = euler_phi_prime_power(p, m)
    if len(parts) != phi:
        raise ValueError(
            f"expected {phi} coefficients for (p, m) = ({p}, {m}), got {len(parts)}"
        )
    return CycloRF(p, m, [rat_func_from_text(s) for s in parts])
