"""Quotient fibrations of the surface and their intersection numbers.

Each sequence vector v_a spans a one-parameter subgroup of the torus; the
quotient map by that subgroup restricts on the surface to a pencil whose
two distinguished fibers are invariant divisors.  The fiber over one end
collects the curves whose ray pairs positively against v_a, with the pairing
value as multiplicity; the fiber over the other end is its conjugate.

The pairing used throughout is phi_a(u) = det(u, v_a).  Both signs occur
over a complete fan, so both fibers are nonzero effective divisors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadIndices
from .lattice import Vector, det2
from .surface import Divisor, ToricSurface, intersect

__all__ = [
    "QuotientForm",
    "bimeromorphic_pairs",
    "invariant_fibers",
    "model_degree",
    "quotient_form",
]


@dataclass(frozen=True)
class QuotientForm:
    """Integer linear functional v -> det(v, v_alpha) for a sequence vector."""

    alpha: int
    vector: Vector

    def evaluate(self, v: Vector) -> int:
        return det2(v, self.vector)


def _check_alpha(surface: ToricSurface, alpha: int) -> None:
    if not 1 <= alpha <= surface.k:
        raise BadIndices(f"index {alpha} out of range 1..{surface.k}")


def quotient_form(surface: ToricSurface, alpha: int) -> QuotientForm:
    _check_alpha(surface, alpha)
    return QuotientForm(alpha=alpha, vector=surface.rays[alpha - 1])


def invariant_fibers(surface: ToricSurface, alpha: int) -> tuple[Divisor, Divisor]:
    """The two invariant fibers of the quotient pencil for index alpha.

    Returns (f, fbar); f holds the components with positive pairing, fbar
    those with negative pairing, and fbar is the conjugate of f.
    """
    form = quotient_form(surface, alpha)
    values = [form.evaluate(u) for u in surface.rays]
    f = tuple(max(x, 0) for x in values)
    fbar = tuple(max(-x, 0) for x in values)
    return f, fbar


def model_degree(surface: ToricSurface, i: int, j: int) -> int:
    """Intersection number of the i-th and j-th invariant fibers.

    This is the degree of the rational map attached to the pair (i, j);
    the map is bimeromorphic exactly when the degree is 1.
    """
    if not 1 <= i < j <= surface.k:
        raise BadIndices(f"need 1 <= i < j <= {surface.k}, got ({i}, {j})")
    fi, _ = invariant_fibers(surface, i)
    fj, _ = invariant_fibers(surface, j)
    return intersect(fi, fj, surface)


def bimeromorphic_pairs(surface: ToricSurface) -> list[tuple[int, int]]:
    """All index pairs i < j whose model degree is 1, in lexicographic order."""
    k = surface.k
    return [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1) if model_degree(surface, i, j) == 1]
