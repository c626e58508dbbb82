"""Integer data of torus actions: validation, normalization, enumeration.

A two-torus action on a connected sum of n complex projective planes is
encoded by a sequence of k = n + 2 primitive integer vectors v_1, ..., v_k
in normalized form:

  * v_1 = (0, 1) and v_k = (1, 0),
  * the first coordinate of v_i is positive for every i > 1,
  * det(v_i, v_{i+1}) = -1 for consecutive pairs.

Any sequence satisfying only the determinant chain can be brought to this
form by a unimodular change of lattice coordinates when one exists
(normalize); the normalized representatives for fixed n form a finite set
(enumerate_sequences).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import (
    DETERMINANT_VIOLATION,
    EMPTY_SEQUENCE,
    ENDPOINT_MISMATCH,
    NON_PRIMITIVE_VECTOR,
    POSITIVITY_VIOLATION,
    NotNormalizable,
    SequenceValidationError,
    Violation,
)

Vector = tuple[int, int]
Matrix = tuple[tuple[int, int], tuple[int, int]]  # rows

__all__ = [
    "ActionSequence",
    "Matrix",
    "Vector",
    "apply_matrix",
    "check",
    "det2",
    "enumerate_sequences",
    "fib",
    "is_primitive",
    "normalize",
    "reversal_dual",
    "validate",
]


def det2(u: Vector, v: Vector) -> int:
    """Determinant of the 2x2 matrix with columns u, v."""
    return u[0] * v[1] - u[1] * v[0]


def is_primitive(v: Vector) -> bool:
    return v != (0, 0) and gcd(abs(v[0]), abs(v[1])) == 1


def fib(m: int) -> int:
    """Fibonacci number F(m) with F(0) = 0, F(1) = 1."""
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def apply_matrix(mat: Matrix, v: Vector) -> Vector:
    return (mat[0][0] * v[0] + mat[0][1] * v[1], mat[1][0] * v[0] + mat[1][1] * v[1])


@dataclass(frozen=True)
class ActionSequence:
    """Normalized integer data of a torus action; k = n + 2 vectors."""

    n: int
    vectors: tuple[Vector, ...]

    @property
    def k(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {"n": self.n, "vectors": [list(v) for v in self.vectors]}

    @staticmethod
    def from_json(data: dict) -> "ActionSequence":
        return validate([tuple(v) for v in data["vectors"]])


def check(pairs: Sequence[Sequence[int]]) -> list[Violation]:
    """Return every violated validity condition, with 1-based positions."""
    out: list[Violation] = []
    vs = [tuple(int(c) for c in p) for p in pairs]
    if not vs:
        return [Violation(EMPTY_SEQUENCE, None, "sequence is empty")]
    if any(len(v) != 2 for v in vs):
        return [Violation(NON_PRIMITIVE_VECTOR, None, "entries must be integer pairs")]
    k = len(vs)
    for i, v in enumerate(vs, start=1):
        if not is_primitive(v):
            out.append(Violation(NON_PRIMITIVE_VECTOR, i, f"vector {i} = {v} is not primitive"))
    if vs[0] != (0, 1):
        out.append(Violation(ENDPOINT_MISMATCH, 1, f"first vector is {vs[0]}, expected (0, 1)"))
    if vs[-1] != (1, 0):
        out.append(Violation(ENDPOINT_MISMATCH, k, f"last vector is {vs[-1]}, expected (1, 0)"))
    for i in range(2, k + 1):
        if vs[i - 1][0] <= 0:
            out.append(
                Violation(POSITIVITY_VIOLATION, i, f"vector {i} = {vs[i - 1]} has first coordinate <= 0")
            )
    for i in range(1, k):
        d = det2(vs[i - 1], vs[i])
        if d != -1:
            out.append(
                Violation(DETERMINANT_VIOLATION, i, f"det(v_{i}, v_{i + 1}) = {d}, expected -1")
            )
    return out


def validate(pairs: Sequence[Sequence[int]]) -> ActionSequence:
    """Validate raw vector data and wrap it as an ActionSequence.

    Raises SequenceValidationError carrying every violated condition.
    """
    violations = check(pairs)
    if violations:
        raise SequenceValidationError(violations)
    vs = tuple((int(a), int(b)) for a, b in pairs)
    return ActionSequence(n=len(vs) - 2, vectors=vs)


def normalize(pairs: Sequence[Sequence[int]]) -> tuple[ActionSequence, Matrix]:
    """Bring a determinant chain to normalized form by a unimodular matrix.

    Returns the unique normalized sequence together with the matrix M such
    that M v_i is the i-th normalized vector; M absorbs a global sign flip
    of the input when one is needed.  Raises NotNormalizable when no
    unimodular change of coordinates works.
    """
    vs = [tuple(int(c) for c in p) for p in pairs]
    if len(vs) < 2 or any(len(v) != 2 for v in vs):
        raise NotNormalizable("need at least two integer pairs")
    first, last = vs[0], vs[-1]
    dv = det2(first, last)
    # The endpoints must map to (0, 1) and (1, 0), so M is forced:
    # M [v_1 | v_k] = [(0,1) | (1,0)], solvable over Z only when det = +-1.
    if dv not in (1, -1):
        raise NotNormalizable(f"det(v_1, v_k) = {dv}, no unimodular matrix fixes the endpoints")
    adj = ((last[1], -last[0]), (-first[1], first[0]))  # adjugate of [v_1 | v_k]
    w = ((0, 1), (1, 0))  # target endpoints as columns
    mat = tuple(
        tuple((w[r][0] * adj[0][c] + w[r][1] * adj[1][c]) // dv for c in range(2)) for r in range(2)
    )
    mapped = [apply_matrix(mat, v) for v in vs]
    violations = check(mapped)
    if violations:
        detail = "; ".join(v.message for v in violations)
        raise NotNormalizable(f"endpoint-determined matrix does not normalize the chain: {detail}")
    return validate(mapped), mat


def reversal_dual(seq: ActionSequence) -> ActionSequence:
    """Reverse the sequence and swap coordinates; an involution on valid data."""
    return validate([(b, a) for (a, b) in reversed(seq.vectors)])


def enumerate_sequences(n: int) -> list[ActionSequence]:
    """All normalized sequences for n, in lexicographic order.

    Works by closing { ((0,1), (1,0)) } under insertion of the mediant
    v_i + v_{i+1} between consecutive entries, n times.  Inserting a mediant
    preserves the determinant chain, and every valid chain arises this way:
    a vector of maximal coordinate sum in the interior always equals the sum
    of its neighbours, so chains blow down step by step to the base chain.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    chains: set[tuple[Vector, ...]] = {((0, 1), (1, 0))}
    for _ in range(n):
        grown: set[tuple[Vector, ...]] = set()
        for ch in chains:
            for i in range(len(ch) - 1):
                med = (ch[i][0] + ch[i + 1][0], ch[i][1] + ch[i + 1][1])
                grown.add(ch[: i + 1] + (med,) + ch[i + 1 :])
        chains = grown
    return [validate(ch) for ch in sorted(chains)]
