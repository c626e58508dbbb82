"""Exact polynomial arithmetic over the rationals.

Polynomials are tuples of Fractions in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple.  Only the handful
of operations the model emitter needs live here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]

__all__ = [
    "Poly",
    "degree",
    "evaluate",
    "from_factors",
    "frac_from_str",
    "frac_to_str",
    "normalized",
    "poly_from_strings",
    "poly_mul",
    "poly_to_strings",
    "render",
    "root_multiplicity",
]


def normalized(coeffs: Iterable[Fraction | int]) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalized(out)


def from_factors(scale: Fraction, factors: Iterable[tuple[Fraction, int]]) -> Poly:
    """scale times the product of (x - root)^mult over the given factors."""
    p = normalized([scale])
    for root, mult in factors:
        lin = normalized([-Fraction(root), 1])
        for _ in range(mult):
            p = poly_mul(p, lin)
    return p


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def root_multiplicity(p: Poly, r: Fraction) -> int:
    """Multiplicity of r as a root of p (0 when p(r) != 0)."""
    mult = 0
    while p and evaluate(p, r) == 0:
        # synthetic division by (x - r)
        q = [Fraction(0)] * (len(p) - 1)
        carry = Fraction(0)
        for i in range(len(p) - 1, 0, -1):
            carry = p[i] + carry * r
            q[i - 1] = carry
        p = normalized(q)
        mult += 1
    return mult


def frac_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def frac_from_str(s: str) -> Fraction:
    return Fraction(s)


def poly_to_strings(p: Poly) -> list[str]:
    return [frac_to_str(c) for c in p]


def poly_from_strings(items: Sequence[str]) -> Poly:
    return normalized([Fraction(s) for s in items])


def render(p: Poly, var: str = "lambda") -> str:
    """Human-readable form, highest degree first: '2*lambda^2 - 1/3'."""
    if not p:
        return "0"
    parts: list[str] = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = frac_to_str(mag)
        else:
            pw = var if d == 1 else f"{var}^{d}"
            body = pw if mag == 1 else f"{frac_to_str(mag)}*{pw}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
