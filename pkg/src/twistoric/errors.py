"""Exception types shared across the package.

Every domain error derives from TwistoricError so callers (in particular the
command line driver) can catch the whole family at once.  Validation of an
action sequence reports all problems together rather than stopping at the
first one; the individual findings are Violation records carried by
SequenceValidationError.
"""

from __future__ import annotations

from dataclasses import dataclass


class TwistoricError(Exception):
    """Base class for all domain errors raised by this package."""


# Violation codes used by lattice.check / lattice.validate.
NON_PRIMITIVE_VECTOR = "NonPrimitiveVector"
ENDPOINT_MISMATCH = "EndpointMismatch"
POSITIVITY_VIOLATION = "PositivityViolation"
DETERMINANT_VIOLATION = "DeterminantViolation"
EMPTY_SEQUENCE = "EmptySequence"


@dataclass(frozen=True)
class Violation:
    """One failed validity condition.

    code is one of the module-level constants above; index is the 1-based
    position of the offending vector (for determinant violations, the first
    vector of the offending consecutive pair), or None when the condition is
    not tied to a position.
    """

    code: str
    index: int | None
    message: str


class SequenceValidationError(TwistoricError):
    """An action sequence failed validation; carries every violation found."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"invalid action sequence: {lines}")


class NotNormalizable(TwistoricError):
    """No unimodular coordinate change brings the input to normalized form."""


class NonSmoothFan(TwistoricError):
    """Ray data does not define a smooth complete fan (corrupt input)."""


class IndexMismatch(TwistoricError):
    """Divisor coefficient vector has the wrong length for the surface."""


class BadIndices(TwistoricError):
    """Fiber indices out of range or not strictly increasing."""


class InconsistentSystem(TwistoricError):
    """Half-cycle decomposition consistency checks failed.

    Indicates an implementation bug or an orientation mismatch; cannot occur
    for surfaces built from validated action sequences.
    """


class NegativeMultiplicity(TwistoricError):
    """Half-cycle decomposition produced a non-positive pencil multiplicity."""


class DegenerateConstants(TwistoricError):
    """A scale constant in a model equation is zero."""


class RootCollision(TwistoricError):
    """Two prescribed pencil roots coincide."""


class RootOrderViolation(TwistoricError):
    """Pencil roots are not nonzero, of one sign, and strictly monotone."""


class CapExceeded(TwistoricError):
    """Requested enumeration size exceeds the configured cap."""
