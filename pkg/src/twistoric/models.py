"""Explicit equations of the projective twistor-space models.

A pair of divisor data records (for indices i and j, with pencil
multiplicities m_i >= m_j) plus a normalized tuple of pencil roots yields
the model: a hypersurface pair inside the projectivized bundle
O(m_i)^2 + O(m_j)^2 over the projective line,

    xi_1 xi_2 = P_1(lambda),   xi_3 xi_4 = P_2(lambda),

where P_1 = c_1 prod (lambda - r_b)^{l_ib} over the finite root labels and
P_2 likewise with the l_jb.  The full chain of models adds one equation per
step between m_j and m_i, each picking up a factor lambda^2.

Roots are labelled 2 .. k; label 1 sits at infinity, label 2 at zero.  A
polynomial vanishes at infinity exactly when its degree falls short of twice
the pencil multiplicity, and the deficit is the multiplicity there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .divisors import TwistorDivisorData
from .errors import DegenerateConstants, RootCollision, RootOrderViolation
from .ratpoly import Poly, degree, evaluate, from_factors, root_multiplicity

GENERIC_FOUR_NODAL = "GenericFourNodal"
TWO_QUADRIC_CONES = "TwoQuadricCones"
FOUR_PLANES = "FourPlanes"

__all__ = [
    "FOUR_PLANES",
    "GENERIC_FOUR_NODAL",
    "TWO_QUADRIC_CONES",
    "ConformalRoots",
    "FiberClass",
    "LinearSystemMeta",
    "ModelEquations",
    "classify_fibers",
    "emit_full_model",
    "emit_open_model_description",
    "emit_reduced_model",
    "system_meta",
]


@dataclass(frozen=True)
class ConformalRoots:
    """Pencil root locations for a surface with k sequence vectors.

    tail holds the roots for labels 3 .. k; label 2 is pinned at zero and
    label 1 at infinity.  The tail must consist of nonzero rationals of one
    sign, strictly increasing when positive and strictly decreasing when
    negative, which in particular keeps all k root locations distinct.
    """

    k: int
    tail: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 2:
            raise RootOrderViolation("need k >= 2")
        if len(self.tail) != self.k - 2:
            raise RootOrderViolation(f"expected {self.k - 2} roots for labels 3..{self.k}, got {len(self.tail)}")
        object.__setattr__(self, "tail", tuple(Fraction(r) for r in self.tail))
        seen: set[Fraction] = set()
        for r in self.tail:
            if r in seen or r == 0:
                raise RootCollision(f"root {r} collides with an earlier root")
            seen.add(r)
        for a, b in zip(self.tail, self.tail[1:]):
            if a > 0 and not b > a:
                raise RootOrderViolation(f"positive roots must increase strictly: {a} then {b}")
            if a < 0 and not b < a:
                raise RootOrderViolation(f"negative roots must decrease strictly: {a} then {b}")

    @property
    def finite_roots(self) -> tuple[Fraction, ...]:
        """Root locations for labels 2 .. k; the label-2 root is zero."""
        return (Fraction(0),) + self.tail

    def to_json(self) -> dict:
        return {"k": self.k, "tail": [str(r) for r in self.tail]}

    @staticmethod
    def from_json(data: dict) -> "ConformalRoots":
        return ConformalRoots(k=int(data["k"]), tail=tuple(Fraction(s) for s in data["tail"]))


@dataclass(frozen=True)
class ModelEquations:
    """Equations xi_{2a-1} xi_{2a} = P_a(lambda) of one projective model.

    bundle lists the four line-bundle degrees (m_i, m_i, m_j, m_j); polys
    holds P_1, P_2 and, for a full chain, the remaining members up to
    P_{mu+2}.  Indices i, j are the pencil labels with m_i >= m_j.
    """

    i: int
    j: int
    mu: int
    bundle: tuple[int, int, int, int]
    constants: tuple[Fraction, ...]
    polys: tuple[Poly, ...]

    @property
    def p1(self) -> Poly:
        return self.polys[0]

    @property
    def p2(self) -> Poly:
        return self.polys[1]

    @property
    def m_i(self) -> int:
        return self.bundle[0]

    @property
    def m_j(self) -> int:
        return self.bundle[2]


def _ordered(data_i: TwistorDivisorData, data_j: TwistorDivisorData) -> tuple[TwistorDivisorData, TwistorDivisorData]:
    if data_i.alpha == data_j.alpha:
        raise ValueError("need two distinct pencil indices")
    if data_i.k != data_j.k:
        raise ValueError("divisor data come from different surfaces")
    # larger pencil multiplicity plays the role of i
    return (data_i, data_j) if data_i.m >= data_j.m else (data_j, data_i)


def _check_constants(constants: Sequence[Fraction | int], count: int) -> tuple[Fraction, ...]:
    if len(constants) != count:
        raise ValueError(f"expected {count} scale constants, got {len(constants)}")
    out = tuple(Fraction(c) for c in constants)
    for c in out:
        if c == 0:
            raise DegenerateConstants("scale constants must be nonzero")
    return out


def _pencil_poly(data: TwistorDivisorData, roots: ConformalRoots, scale: Fraction) -> Poly:
    finite = roots.finite_roots
    ltot = data.l_total
    # labels 2..k carry the finite roots; label 1 is the point at infinity
    return from_factors(scale, ((finite[b - 2], ltot[b - 1]) for b in range(2, data.k + 1)))


def emit_reduced_model(
    data_i: TwistorDivisorData,
    data_j: TwistorDivisorData,
    roots: ConformalRoots,
    constants: Sequence[Fraction | int] = (1, 1),
) -> ModelEquations:
    """The two-equation model for a pair of pencils.

    Swaps the roles of i and j internally when m_i < m_j so the recorded
    bundle degrees never decrease.
    """
    di, dj = _ordered(data_i, data_j)
    if roots.k != di.k:
        raise ValueError(f"roots are for k = {roots.k}, divisor data for k = {di.k}")
    cs = _check_constants(constants, 2)
    p1 = _pencil_poly(di, roots, cs[0])
    p2 = _pencil_poly(dj, roots, cs[1])
    return ModelEquations(
        i=di.alpha,
        j=dj.alpha,
        mu=di.m - dj.m,
        bundle=(di.m, di.m, dj.m, dj.m),
        constants=cs,
        polys=(p1, p2),
    )


def emit_full_model(
    data_i: TwistorDivisorData,
    data_j: TwistorDivisorData,
    roots: ConformalRoots,
    constants: Sequence[Fraction | int] | None = None,
) -> ModelEquations:
    """The full chain of models: one equation per step from m_j up to m_i.

    Equation a (for a = 2 .. mu + 2) is xi_{2a-1} xi_{2a} =
    c_a lambda^{2(a-2)} P(lambda) with P the label-j factor product, so the
    chain starts at the reduced second equation and gains lambda^2 each step.
    Takes mu + 2 scale constants, all ones when omitted.
    """
    di, dj = _ordered(data_i, data_j)
    if roots.k != di.k:
        raise ValueError(f"roots are for k = {roots.k}, divisor data for k = {di.k}")
    mu = di.m - dj.m
    if constants is None:
        constants = (1,) * (mu + 2)
    cs = _check_constants(constants, mu + 2)
    p1 = _pencil_poly(di, roots, cs[0])
    base_j = _pencil_poly(dj, roots, Fraction(1))
    polys = [p1]
    for a in range(2, mu + 3):
        shifted = (Fraction(0),) * (2 * (a - 2)) + tuple(cs[a - 1] * c for c in base_j)
        polys.append(shifted)
    return ModelEquations(
        i=di.alpha,
        j=dj.alpha,
        mu=mu,
        bundle=(di.m, di.m, dj.m, dj.m),
        constants=cs,
        polys=tuple(polys),
    )


@dataclass(frozen=True)
class FiberClass:
    """Singularity type of the model fiber over one pencil location.

    location None means the point at infinity; generic marks the sample
    point standing in for every unlisted location.
    """

    location: Fraction | None
    kind: str
    non_reduced: bool
    generic: bool = False

    def to_json(self) -> dict:
        at = "inf" if self.location is None else str(self.location)
        return {"at": at, "kind": self.kind, "nonReduced": self.non_reduced, "generic": self.generic}

    @staticmethod
    def from_json(data: dict) -> "FiberClass":
        at = None if data["at"] == "inf" else Fraction(data["at"])
        return FiberClass(
            location=at,
            kind=str(data["kind"]),
            non_reduced=bool(data["nonReduced"]),
            generic=bool(data.get("generic", False)),
        )


def _kind(mult1: int, mult2: int) -> str:
    if mult1 > 0 and mult2 > 0:
        return FOUR_PLANES
    if mult1 > 0 or mult2 > 0:
        return TWO_QUADRIC_CONES
    return GENERIC_FOUR_NODAL


def classify_fibers(eqs: ModelEquations, roots: ConformalRoots) -> list[FiberClass]:
    """Classify the fiber over each root location, plus one generic sample.

    A fiber degenerates from four nodes to two quadric cones when exactly
    one of P_1, P_2 vanishes there, and to four planes when both do; a
    vanishing order of two or more flags a non-reduced pencil member.
    """
    out: list[FiberClass] = []
    m1 = 2 * eqs.m_i - degree(eqs.p1)
    m2 = 2 * eqs.m_j - degree(eqs.p2)
    out.append(FiberClass(location=None, kind=_kind(m1, m2), non_reduced=m1 >= 2 or m2 >= 2))
    for r in roots.finite_roots:
        m1 = root_multiplicity(eqs.p1, r)
        m2 = root_multiplicity(eqs.p2, r)
        out.append(FiberClass(location=r, kind=_kind(m1, m2), non_reduced=m1 >= 2 or m2 >= 2))
    sample = Fraction(1)
    while sample in roots.finite_roots:
        sample += 1
    assert evaluate(eqs.p1, sample) != 0 and evaluate(eqs.p2, sample) != 0
    out.append(FiberClass(location=sample, kind=GENERIC_FOUR_NODAL, non_reduced=False, generic=True))
    return out


@dataclass(frozen=True)
class LinearSystemMeta:
    """Dimension counts for the linear systems behind one model."""

    mu: int
    dim_w_i: int
    dim_w_j: int
    dim_combined: int
    num_coords: int

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "dimWi": self.dim_w_i,
            "dimWj": self.dim_w_j,
            "dimCombined": self.dim_combined,
            "N": self.num_coords,
        }


def system_meta(data_i: TwistorDivisorData, data_j: TwistorDivisorData) -> LinearSystemMeta:
    """Dimension bookkeeping for the pair; requires m_i >= m_j."""
    if data_i.m < data_j.m:
        raise ValueError("need m_i >= m_j; swap the arguments")
    mi, mj = data_i.m, data_j.m
    return LinearSystemMeta(
        mu=mi - mj,
        dim_w_i=mi + 3,
        dim_w_j=mj + 3,
        dim_combined=3 * mi - 2 * mj + 5,
        num_coords=5 + 3 * mi - 2 * mj,
    )


def emit_open_model_description(eqs: ModelEquations, map_degree: int = 1) -> dict:
    """Describe the affine model cut out by the equations.

    The record names the total space, lists the equations, and states which
    open piece of the twistor space the model covers; when the attached map
    has degree above one a warning marks the model as non-bimeromorphic.
    """
    from .ratpoly import render

    equations = []
    for a, p in enumerate(eqs.polys, start=1):
        equations.append(f"xi{2 * a - 1}*xi{2 * a} = {render(p)}")
    record = {
        "totalSpace": {
            "base": "CP1",
            "bundleDegrees": list(eqs.bundle),
        },
        "equations": equations,
        "openSubset": (
            "the twistor space of the hyperbolic-plane times torus piece embeds as the "
            "complement of the anticanonical cycle together with the lines over the "
            "degenerate pencil members"
        ),
        "warnings": [],
    }
    if map_degree > 1:
        record["warnings"].append(f"map is {map_degree}:1, not a projective model")
    return record
