"""Exact integer and rational linear algebra over the standard lattice.

Vectors are tuples of Python ints, matrices are sequences of such rows;
rational data uses fractions.Fraction. Everything here is exact and
deterministic -- no floating point, no randomized pivoting.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import InSpanError, NotSquareError, TooSmallError, ZeroVectorError

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v) -> IntVec:
    """Divide a nonzero integer vector by the gcd of its entries.

    The result is parallel to v, points the same way, and has coprime
    coordinates.
    """
    g = vec_gcd(v)
    if g == 0:
        raise ZeroVectorError("cannot primitivize the zero vector")
    return tuple(x // g for x in v)


def _exgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _freeze(rows) -> IntMat:
    return tuple(tuple(row) for row in rows)


def _row_combine(mat, i, j, a, b, c, d) -> None:
    """Replace rows (i, j) by (a*ri + b*rj, c*ri + d*rj) in place."""
    ri, rj = mat[i], mat[j]
    mat[i] = [a * x + b * y for x, y in zip(ri, rj)]
    mat[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _col_combine(mat, i, j, a, b, c, d) -> None:
    """Replace columns (i, j) by (a*ci + b*cj, c*ci + d*cj) in place."""
    for row in mat:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def hermite_normal_form(A) -> tuple[IntMat, IntMat]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U @ A == H. Pivots are positive,
    entries above each pivot are reduced into [0, pivot), pivot columns
    strictly increase down the rows, and zero rows sink to the bottom.
    """
    H = [list(map(int, row)) for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity_matrix(m)
    piv_row = 0
    pivots = []
    for col in range(n):
        if piv_row >= m:
            break
        # gcd all entries of this column at or below piv_row into piv_row
        for i in range(piv_row + 1, m):
            if H[i][col] == 0:
                continue
            a, b = H[piv_row][col], H[i][col]
            if a == 0:
                H[piv_row], H[i] = H[i], H[piv_row]
                U[piv_row], U[i] = U[i], U[piv_row]
            elif b % a == 0:
                q = b // a
                H[i] = [x - q * y for x, y in zip(H[i], H[piv_row])]
                U[i] = [x - q * y for x, y in zip(U[i], U[piv_row])]
            else:
                g, x, y = _exgcd(a, b)
                _row_combine(H, piv_row, i, x, y, -(b // g), a // g)
                _row_combine(U, piv_row, i, x, y, -(b // g), a // g)
        p = H[piv_row][col]
        if p == 0:
            continue
        if p < 0:
            H[piv_row] = [-x for x in H[piv_row]]
            U[piv_row] = [-x for x in U[piv_row]]
            p = -p
        for i in range(piv_row):
            q = H[i][col] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[piv_row])]
                U[i] = [x - q * y for x, y in zip(U[i], U[piv_row])]
        pivots.append((piv_row, col))
        piv_row += 1
    return _freeze(H), _freeze(U)


def smith_normal_form(A) -> tuple[IntMat, IntMat, IntMat]:
    """Smith normal form: (S, U, V) with U @ A @ V == S.

    U and V are unimodular, S is diagonal with nonnegative entries
    d_1 | d_2 | ... Deterministic: the pivot is always the entry of
    smallest absolute value in the trailing block, ties broken by
    lowest (row, column).
    """
    S = [list(map(int, row)) for row in A]
    m = len(S)
    n = len(S[0]) if m else 0
    U = identity_matrix(m)
    V = identity_matrix(n)
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = S[i][j]
                if x and (best is None or abs(x) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            S[t], S[bi] = S[bi], S[t]
            U[t], U[bi] = U[bi], U[t]
        if bj != t:
            for row in S:
                row[t], row[bj] = row[bj], row[t]
            for row in V:
                row[t], row[bj] = row[bj], row[t]
        while True:
            for i in range(t + 1, m):
                if S[i][t] == 0:
                    continue
                a, b = S[t][t], S[i][t]
                if b % a == 0:
                    q = b // a
                    S[i] = [x - q * y for x, y in zip(S[i], S[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                else:
                    g, x, y = _exgcd(a, b)
                    _row_combine(S, t, i, x, y, -(b // g), a // g)
                    _row_combine(U, t, i, x, y, -(b // g), a // g)
            for j in range(t + 1, n):
                if S[t][j] == 0:
                    continue
                a, b = S[t][t], S[t][j]
                if b % a == 0:
                    q = b // a
                    for row in S:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                else:
                    g, x, y = _exgcd(a, b)
                    _col_combine(S, t, j, x, y, -(b // g), a // g)
                    _col_combine(V, t, j, x, y, -(b // g), a // g)
            if any(S[i][t] for i in range(t + 1, m)):
                continue  # column ops reintroduced entries below the pivot
            p = S[t][t]
            fix = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % p:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            S[t] = [x + y for x, y in zip(S[t], S[fix])]
            U[t] = [x + y for x, y in zip(U[t], U[fix])]
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return _freeze(S), _freeze(U), _freeze(V)


def det(A) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    rows = [list(map(int, row)) for row in A]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NotSquareError(f"determinant needs a square matrix, got {len(rows)} rows")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def minors_2x2(A) -> tuple[int, ...]:
    """All 2x2 minors, row-pair-major: (r1<r2) outer, (c1<c2) inner."""
    rows = [list(map(int, row)) for row in A]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m < 2 or n < 2:
        raise TooSmallError(f"2x2 minors need at least a 2x2 matrix, got {m}x{n}")
    out = []
    for r1, r2 in combinations(range(m), 2):
        a, b = rows[r1], rows[r2]
        for c1, c2 in combinations(range(n), 2):
            out.append(a[c1] * b[c2] - a[c2] * b[c1])
    return tuple(out)


def rank(rows) -> int:
    """Rank over the rationals of a sequence of integer vectors."""
    work = [list(map(int, row)) for row in rows if any(row)]
    if not work:
        return 0
    n = len(work[0])
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pr = work[r]
        for i in range(r + 1, len(work)):
            if work[i][col]:
                a, b = pr[col], work[i][col]
                work[i] = [a * x - b * y for x, y in zip(work[i], pr)]
        r += 1
        if r == len(work):
            break
    return r


def solve_coefficients(gens, target):
    """Solve sum(c_i * gens[i]) == target exactly over the rationals.

    Returns the tuple of Fractions, or None when the system is
    inconsistent. Requires the generators to be linearly independent.
    """
    k = len(gens)
    n = len(target)
    # augmented system: columns are the generators, last column the target
    aug = [[Fraction(gens[i][r]) for i in range(k)] + [Fraction(target[r])] for r in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        pivot = None
        for i in range(r, n):
            if aug[i][c]:
                pivot = i
                break
        if pivot is None:
            raise ValueError("generators are linearly dependent")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pr = aug[r]
        inv = 1 / pr[c]
        aug[r] = [x * inv for x in pr]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][k]:
            return None
    sol = [Fraction(0)] * k
    for row_idx, c in enumerate(piv_cols):
        sol[c] = aug[row_idx][k]
    return tuple(sol)


def nullspace(rows) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace {x : rows @ x == 0} over the rationals."""
    m = len(rows)
    if m == 0:
        raise ValueError("nullspace needs at least one row to know the width")
    n = len(rows[0])
    work = [[Fraction(x) for x in row] for row in rows]
    piv_cols = []
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(m):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    basis = []
    free_cols = [c for c in range(n) if c not in piv_cols]
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(piv_cols):
            vec[pc] = -work[row_idx][fc]
        basis.append(tuple(vec))
    return basis


def unimodular_inverse(V) -> IntMat:
    """Exact inverse of a unimodular integer matrix."""
    n = len(V)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(V)]
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        work[c], work[pivot] = work[pivot], work[c]
        inv = 1 / work[c][c]
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    out = []
    for row in work:
        entries = row[n:]
        if any(x.denominator != 1 for x in entries):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in entries))
    return tuple(out)


def quotient_map(gens, ambient_dim: int) -> IntMat:
    """Coordinate map onto the quotient of the lattice by a saturated span.

    Returns an integer matrix Q with ambient_dim rows such that the class
    of v in Z^n / sat(span(gens)) has coordinates v @ Q (length
    n - rank(gens)). The map depends only on the rational span of the
    generators: the saturation is first put into its unique Hermite basis,
    so any generating set with the same span yields the same Q.
    """
    rows = [tuple(g) for g in gens if any(g)]
    n = ambient_dim
    if not rows:
        return _freeze(identity_matrix(n))
    S, U, V = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(rows), n)) if S[i][i])
    if r == 0:
        return _freeze(identity_matrix(n))
    # rows of V^-1 are a lattice basis whose first r members span the saturation
    W = unimodular_inverse(V)
    sat, _ = hermite_normal_form(W[:r])
    _, _, V2 = smith_normal_form(sat)
    return tuple(tuple(V2[i][j] for j in range(r, n)) for i in range(n))


def apply_quotient(Q, v) -> IntVec:
    return tuple(sum(v[i] * Q[i][j] for i in range(len(v))) for j in range(len(Q[0]) if Q else 0))


def quotient_primitive(gens, v) -> IntVec:
    """Primitive representative of the class of v in Z^n / sat(span(gens)).

    Raises InSpanError when v lies in the rational span of the generators.
    """
    Q = quotient_map(gens, len(v))
    w = apply_quotient(Q, v)
    if not any(w):
        raise InSpanError("vector lies in the span of the sublattice generators")
    return primitive(w)
