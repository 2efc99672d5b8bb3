"""Exact signature of symmetric rational matrices.

Two independent algorithms are provided and are required to agree:
symmetric congruence reduction, and root counting on the exact
characteristic polynomial. Both are pivot-order deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NotSymmetricError, SingularError


@dataclass(frozen=True)
class Signature:
    n_plus: int
    n_minus: int
    n_zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def _check_symmetric(S, who: str) -> list[list[Fraction]]:
    n = len(S)
    M = [[Fraction(x) for x in row] for row in S]
    if any(len(row) != n for row in M):
        raise NotSymmetricError(f"{who}: matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if M[i][j] != M[j][i]:
                raise NotSymmetricError(f"{who}: entries ({i},{j}) and ({j},{i}) differ")
    return M


def inertia_congruence(S) -> Signature:
    """Signature by symmetric congruence reduction.

    Pivot choice: the nonzero diagonal entry of largest absolute value
    (ties by lowest index). When the active diagonal is all zero but an
    off-diagonal entry survives, the lexicographically first such pair
    (i, j) is folded onto the diagonal by adding row/column j to
    row/column i, which creates the diagonal entry 2*S[i][j].
    """
    M = _check_symmetric(S, "inertia_congruence")
    n = len(M)
    active = list(range(n))
    n_plus = n_minus = n_zero = 0
    while active:
        p = None
        for i in active:
            if M[i][i] and (p is None or abs(M[i][i]) > abs(M[p][p])):
                p = i
        if p is None:
            pair = None
            for a, i in enumerate(active):
                for j in active[a + 1:]:
                    if M[i][j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                n_zero += len(active)
                break
            i, j = pair
            for k in active:
                M[i][k] += M[j][k]
            for k in active:
                M[k][i] += M[k][j]
            continue
        piv = M[p][p]
        if piv > 0:
            n_plus += 1
        else:
            n_minus += 1
        others = [i for i in active if i != p]
        factors = {i: M[i][p] / piv for i in others if M[i][p]}
        for i, f in factors.items():
            row_i, row_p = M[i], M[p]
            for k in active:
                row_i[k] -= f * row_p[k]
        for i, f in factors.items():
            for k in active:
                M[k][i] -= f * M[k][p]
        active.remove(p)
    return Signature(n_plus, n_minus, n_zero)


def _charpoly_coeffs(A) -> list[int]:
    """Characteristic polynomial of an integer matrix, low to high degree.

    Uses the trace recurrence: all intermediate divisions are exact over
    the integers.
    """
    n = len(A)
    coeffs_high = [1]  # x^n, then c_1, ..., c_n
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(AM[i][i] for i in range(n))
        q, r = divmod(-trace, k)
        assert r == 0, "trace recurrence produced a non-integer coefficient"
        coeffs_high.append(q)
        M = [[AM[i][j] + (q if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs_high[::-1]


def inertia_charpoly(S) -> Signature:
    """Signature by exact characteristic polynomial root counting.

    Denominators are cleared first (a positive scaling of a symmetric
    matrix preserves its signature). The matrix is symmetric, so all
    roots are real: after dividing out the zero roots, the number of
    positive roots is exactly the number of sign variations in the
    remaining coefficient sequence.
    """
    M = _check_symmetric(S, "inertia_charpoly")
    n = len(M)
    if n == 0:
        return Signature(0, 0, 0)
    scale = lcm(*(x.denominator for row in M for x in row))
    A = [[int(x * scale) for x in row] for row in M]
    coeffs = _charpoly_coeffs(A)
    n_zero = 0
    while coeffs[n_zero] == 0:
        n_zero += 1
    reduced = [c for c in coeffs[n_zero:] if c != 0]
    variations = sum(1 for a, b in zip(reduced, reduced[1:]) if (a > 0) != (b > 0))
    n_plus = variations
    n_minus = n - n_zero - n_plus
    return Signature(n_plus, n_minus, n_zero)


def check_sylvester(S, A) -> bool:
    """Verify inertia(A^T S A) == inertia(S) for an invertible A."""
    M = _check_symmetric(S, "check_sylvester")
    n = len(M)
    B = [[Fraction(x) for x in row] for row in A]
    if len(B) != n or any(len(row) != n for row in B):
        raise SingularError("check_sylvester: A must be square of matching size")
    if _det_fraction(B) == 0:
        raise SingularError("check_sylvester: A is singular")
    SA = [[sum(M[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    AtSA = [[sum(B[t][i] * SA[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return inertia_congruence(AtSA) == inertia_congruence(M)


def _det_fraction(rows) -> Fraction:
    n = len(rows)
    work = [list(row) for row in rows]
    result = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            result = -result
        result *= work[c][c]
        inv = 1 / work[c][c]
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return result
