"""Independent oracles used by the test suite.

Everything here recomputes expected values by a different route than the
package: enumeration by bounded brute-force search instead of mediant
closure, and half-cycle decomposition by exhaustive search over bounded
complementary multiplicity vectors instead of the difference solve.
"""

from __future__ import annotations

from itertools import product
from math import gcd

import numpy as np

Vec = tuple[int, int]


def fib(m: int) -> int:
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def det2(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def brute_force_sequences(n: int) -> list[tuple[Vec, ...]]:
    """All valid chains for n by depth-first search over a Fibonacci box.

    Candidate vectors have first coordinate in 1..F(n+2) and second in
    -F(n+2)..F(n+2); the determinant chain condition prunes the walk.
    """
    k = n + 2
    if k == 2:
        return [((0, 1), (1, 0))]
    bound = fib(k)
    box = [
        (a, b)
        for a in range(1, bound + 1)
        for b in range(-bound, bound + 1)
        if gcd(a, abs(b)) == 1
    ]
    found: list[tuple[Vec, ...]] = []

    def extend(chain: tuple[Vec, ...]) -> None:
        if len(chain) == k - 1:
            if det2(chain[-1], (1, 0)) == -1:
                found.append(chain + ((1, 0),))
            return
        for v in box:
            if det2(chain[-1], v) == -1:
                extend(chain + (v,))

    extend(((0, 1),))
    return sorted(found)


def half_cycle_indicators(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Indicator matrices (k x 2k) of the plus and minus half-cycles."""
    plus = np.zeros((k, 2 * k), dtype=np.int64)
    minus = np.zeros((k, 2 * k), dtype=np.int64)
    for b in range(k):
        for t in range(k):
            plus[b, (b + 1 + t) % (2 * k)] = 1
            minus[b, (b + 1 + k + t) % (2 * k)] = 1
    return plus, minus


def exhaustive_divisor_solutions(
    f: tuple[int, ...], fbar: tuple[int, ...], entry_cap: int = 8
) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """All (m, l_plus, l_minus) with complementary entries <= entry_cap that
    satisfy the component equations, found by exhaustive search."""
    k = len(f) // 2
    plus_ind, minus_ind = half_cycle_indicators(k)
    g = np.array([fbar[r] - f[r] for r in range(2 * k)], dtype=np.int64)
    # complementary options per label: (0,0), (p,0), (0,q)
    options = [(0, 0)] + [(p, 0) for p in range(1, entry_cap + 1)] + [
        (0, q) for q in range(1, entry_cap + 1)
    ]
    solutions = []
    for combo in product(options, repeat=k):
        total = np.zeros(2 * k, dtype=np.int64)
        for b, (p, q) in enumerate(combo):
            if p:
                total += p * plus_ind[b]
            if q:
                total += q * minus_ind[b]
        diff = total - g
        if np.all(diff == diff[0]) and diff[0] >= 1:
            lp = tuple(p for p, _ in combo)
            lm = tuple(q for _, q in combo)
            solutions.append((int(diff[0]), lp, lm))
    return solutions


# elementary unimodular matrices for scrambling tests (rows)
ROT = ((0, -1), (1, 0))
SHEAR = ((1, 1), (0, 1))
SHEAR_INV = ((1, -1), (0, 1))
FLIP = ((0, 1), (1, 0))
NEG = ((-1, 0), (0, -1))


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(2)) for c in range(2)) for r in range(2)
    )


def mat_apply(mat, v: Vec) -> Vec:
    return (mat[0][0] * v[0] + mat[0][1] * v[1], mat[1][0] * v[0] + mat[1][1] * v[1])
