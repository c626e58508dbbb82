"""Assembly and serialization of full analysis reports.

A report gathers everything derived from one action sequence: the surface,
the invariant fibers and their pairwise degrees, the divisor data of every
pencil, model equations for the chosen index pairs, fiber classifications,
and warnings.  Reports serialize to a single JSON document; rationals are
encoded as 'p/q' strings so the round trip is lossless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .divisors import TwistorDivisorData, solve_divisor_data
from .errors import CapExceeded
from .fibers import bimeromorphic_pairs, invariant_fibers, model_degree
from .lattice import ActionSequence, enumerate_sequences, validate
from .models import (
    ConformalRoots,
    FiberClass,
    ModelEquations,
    classify_fibers,
    emit_full_model,
    emit_reduced_model,
)
from .ratpoly import poly_from_strings, poly_to_strings
from .surface import Divisor, ToricSurface, build_surface

DEFAULT_CAP = 8

__all__ = [
    "DEFAULT_CAP",
    "AnalysisReport",
    "analyze_sequence",
    "default_roots",
    "model_record",
    "parse_model_record",
    "run_analyze",
    "run_enumerate",
    "run_model",
]


def default_roots(k: int) -> ConformalRoots:
    """Deterministic root choice 1, 2, ... for labels 3 .. k."""
    return ConformalRoots(k=k, tail=tuple(Fraction(t) for t in range(1, k - 1)))


def model_record(eqs: ModelEquations, classes: Sequence[FiberClass]) -> dict:
    """JSON form of one model: equations plus fiber classification."""
    return {
        "i": eqs.i,
        "j": eqs.j,
        "mu": eqs.mu,
        "bundle": list(eqs.bundle),
        "c": [str(c) for c in eqs.constants],
        "P": [poly_to_strings(p) for p in eqs.polys],
        "fibers": [fc.to_json() for fc in classes],
    }


def parse_model_record(data: dict) -> tuple[ModelEquations, tuple[FiberClass, ...]]:
    polys = tuple(poly_from_strings(p) for p in data["P"])
    constants = tuple(Fraction(s) for s in data["c"])
    eqs = ModelEquations(
        i=int(data["i"]),
        j=int(data["j"]),
        mu=int(data["mu"]),
        bundle=tuple(int(b) for b in data["bundle"]),
        constants=constants,
        polys=polys,
    )
    classes = tuple(FiberClass.from_json(fc) for fc in data["fibers"])
    return eqs, classes


@dataclass(frozen=True)
class AnalysisReport:
    """Everything derived from one action sequence, ready to serialize."""

    sequence: ActionSequence
    surface: ToricSurface
    roots: ConformalRoots
    fibers: tuple[tuple[Divisor, Divisor], ...]
    degree_matrix: tuple[tuple[int, ...], ...]
    bimeromorphic: tuple[tuple[int, int], ...]
    divisors: tuple[TwistorDivisorData, ...]
    models: tuple[tuple[ModelEquations, tuple[FiberClass, ...]], ...]
    warnings: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "input": self.sequence.to_json(),
            "surface": self.surface.to_json(),
            "roots": self.roots.to_json(),
            "fibers": [
                {"alpha": a + 1, "f": list(f), "fbar": list(fbar)}
                for a, (f, fbar) in enumerate(self.fibers)
            ],
            "degreeMatrix": [list(row) for row in self.degree_matrix],
            "bimeromorphicPairs": [list(p) for p in self.bimeromorphic],
            "divisors": [d.to_json() for d in self.divisors],
            "models": [model_record(eqs, classes) for eqs, classes in self.models],
            "warnings": list(self.warnings),
        }

    @staticmethod
    def from_json(data: dict) -> "AnalysisReport":
        sequence = ActionSequence.from_json(data["input"])
        surface = build_surface(sequence)
        roots = ConformalRoots.from_json(data["roots"])
        return AnalysisReport(
            sequence=sequence,
            surface=surface,
            roots=roots,
            fibers=tuple((tuple(b["f"]), tuple(b["fbar"])) for b in data["fibers"]),
            degree_matrix=tuple(tuple(row) for row in data["degreeMatrix"]),
            bimeromorphic=tuple((p[0], p[1]) for p in data["bimeromorphicPairs"]),
            divisors=tuple(TwistorDivisorData.from_json(d) for d in data["divisors"]),
            models=tuple(parse_model_record(m) for m in data["models"]),
            warnings=tuple(data["warnings"]),
        )


def analyze_sequence(
    seq: ActionSequence,
    roots: ConformalRoots | None = None,
    constants: Sequence[Fraction | int] = (1, 1),
) -> AnalysisReport:
    """Full analysis of one sequence; models for every adjacent index pair."""
    surface = build_surface(seq)
    k = surface.k
    if roots is None:
        roots = default_roots(k)
    fibers = tuple(invariant_fibers(surface, a) for a in range(1, k + 1))
    degrees = tuple(
        tuple(model_degree(surface, min(i, j), max(i, j)) if i != j else 0 for j in range(1, k + 1))
        for i in range(1, k + 1)
    )
    divisors = tuple(solve_divisor_data(surface, a) for a in range(1, k + 1))
    models = []
    for i in range(1, k):
        eqs = emit_reduced_model(divisors[i - 1], divisors[i], roots, constants)
        models.append((eqs, tuple(classify_fibers(eqs, roots))))
    warnings: list[dict] = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            d = degrees[i - 1][j - 1]
            if d > 1:
                warnings.append({"type": "degree", "i": i, "j": j, "d": d})
    for data in divisors:
        for b, l in enumerate(data.l_total, start=1):
            if l > 1:
                warnings.append({"type": "nonReducedComponent", "alpha": data.alpha, "beta": b, "l": l})
    return AnalysisReport(
        sequence=seq,
        surface=surface,
        roots=roots,
        fibers=fibers,
        degree_matrix=degrees,
        bimeromorphic=tuple(bimeromorphic_pairs(surface)),
        divisors=divisors,
        models=tuple(models),
        warnings=tuple(warnings),
    )


def run_analyze(
    pairs: Sequence[Sequence[int]],
    roots_tail: Sequence[Fraction] | None = None,
    constants: Sequence[Fraction | int] | None = None,
) -> dict:
    """Validate raw vectors and produce the full report as JSON data."""
    seq = validate(pairs)
    roots = None if roots_tail is None else ConformalRoots(k=seq.k, tail=tuple(roots_tail))
    report = analyze_sequence(seq, roots=roots, constants=constants or (1, 1))
    return report.to_json()


def run_enumerate(n: int, count_only: bool = False, cap: int = DEFAULT_CAP) -> dict:
    """Enumerate all sequences for n and summarize each one."""
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")
    seqs = enumerate_sequences(n)
    out: dict = {"n": n, "count": len(seqs)}
    if count_only:
        return out
    summaries = []
    for seq in seqs:
        surface = build_surface(seq)
        divisors = [solve_divisor_data(surface, a) for a in range(1, surface.k + 1)]
        summaries.append(
            {
                "vectors": [list(v) for v in seq.vectors],
                "selfInt": list(surface.self_int),
                "m": [d.m for d in divisors],
                "bimeromorphicPairs": [list(p) for p in bimeromorphic_pairs(surface)],
            }
        )
    out["sequences"] = summaries
    return out


def run_model(
    pairs: Sequence[Sequence[int]],
    i: int,
    j: int,
    roots_tail: Sequence[Fraction] | None = None,
    constants: Sequence[Fraction | int] | None = None,
    full: bool = False,
) -> dict:
    """Emit the model for one index pair of the given sequence, as JSON data."""
    seq = validate(pairs)
    surface = build_surface(seq)
    model_degree(surface, i, j)  # validates the index pair
    roots = (
        default_roots(surface.k)
        if roots_tail is None
        else ConformalRoots(k=surface.k, tail=tuple(roots_tail))
    )
    data_i = solve_divisor_data(surface, i)
    data_j = solve_divisor_data(surface, j)
    if full:
        mu = abs(data_i.m - data_j.m)
        eqs = emit_full_model(data_i, data_j, roots, constants or (1,) * (mu + 2))
    else:
        eqs = emit_reduced_model(data_i, data_j, roots, constants or (1, 1))
    classes = classify_fibers(eqs, roots)
    return model_record(eqs, classes)
