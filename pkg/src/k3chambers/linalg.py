"""Exact rational linear algebra kernels.

Everything here works over ``fractions.Fraction``; no floating point is used
anywhere.  Matrices are dense tuples of tuples, vectors are tuples.  The
module provides the solving, definiteness, inertia and inverse-sign kernels
plus an exact Fourier-Motzkin feasibility test for systems of strict linear
sign constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotSymmetric, PreconditionViolated, SingularMatrix

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]


def vec(entries: Iterable) -> Vec:
    """Build an exact rational vector from ints/strings/Fractions."""
    return tuple(Fraction(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    """Build an exact rational matrix; rows must have equal length."""
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix rows")
    return m


def dim(m: Mat) -> int:
    return len(m)


def is_symmetric(m: Mat) -> bool:
    n = len(m)
    if any(len(r) != n for r in m):
        return False
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def _require_symmetric(m: Mat) -> None:
    if not is_symmetric(m):
        raise NotSymmetric("matrix is not symmetric")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: Mat, v: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, v) for row in m)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * x for x in v)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def solve_linear(s: Mat, b: Sequence[Fraction]) -> Vec:
    """Solve ``s @ x = b`` exactly by Gaussian elimination.

    Raises SingularMatrix when det(s) = 0.  The empty system has the empty
    solution.
    """
    n = len(s)
    if any(len(row) != n for row in s):
        raise ValueError("matrix is not square")
    if len(b) != n:
        raise ValueError("right-hand side dimension mismatch")
    if n == 0:
        return ()
    a = [list(row) + [rhs] for row, rhs in zip(s, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("zero pivot column %d" % col)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col] / p
            if f:
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    return tuple(a[r][n] / a[r][r] for r in range(n))


def determinant(s: Mat) -> Fraction:
    """Exact determinant via elimination with row pivoting."""
    n = len(s)
    if any(len(row) != n for row in s):
        raise ValueError("matrix is not square")
    a = [list(row) for row in s]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def is_negative_definite(s: Mat) -> bool:
    """Sylvester test: all pivots of symmetric elimination are negative.

    Equivalent to (-1)^k det(leading k-minor) > 0 for every k, computed
    exactly.  The 0x0 matrix is negative definite (vacuously).
    """
    _require_symmetric(s)
    n = len(s)
    a = [list(row) for row in s]
    for k in range(n):
        p = a[k][k]
        if p >= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True


def signature(s: Mat) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) by exact symmetric elimination.

    Zero diagonal pivots are handled by the standard congruence trick
    e_i <- e_i + e_j, which preserves inertia.
    """
    _require_symmetric(s)
    n = len(s)
    a = [list(row) for row in s]
    active = list(range(n))
    pos = neg = zero = 0
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in active for j in active if j > i and a[i][j] != 0),
                None,
            )
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            for c in active:
                a[i][c] += a[j][c]
            for r in active:
                a[r][i] += a[r][j]
            continue
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = a[i][p] / d
            if f:
                for j in active:
                    a[i][j] -= f * a[p][j]
    return (pos, neg, zero)


def inverse(s: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(s)
    if any(len(row) != n for row in s):
        raise ValueError("matrix is not square")
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(s)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(a[r][n:]) for r in range(n))


def inverse_nonpositive_check(s: Mat) -> bool:
    """Return whether every entry of s^{-1} is <= 0.

    Precondition (reported, not assumed): s is symmetric negative definite
    with nonnegative off-diagonal entries.  Under that hypothesis the result
    is always True; a False return on valid input is a library bug trap.
    """
    if not is_symmetric(s):
        raise PreconditionViolated("matrix is not symmetric")
    n = len(s)
    for i in range(n):
        for j in range(n):
            if i != j and s[i][j] < 0:
                raise PreconditionViolated(
                    "negative off-diagonal entry at (%d, %d)" % (i, j)
                )
    if not is_negative_definite(s):
        raise PreconditionViolated("matrix is not negative definite")
    inv = inverse(s)
    return all(x <= 0 for row in inv for x in row)


# ---------------------------------------------------------------------------
# Fourier-Motzkin feasibility for strict sign systems
# ---------------------------------------------------------------------------

SENSE_LT = "<"
SENSE_GT = ">"


@dataclass(frozen=True)
class SignConstraint:
    """One strict constraint ``coeffs . x + constant  <sense>  0``."""

    coeffs: Vec
    constant: Fraction
    sense: str


@dataclass(frozen=True)
class LinearSystemFeasibility:
    """A finite system of strict affine sign constraints over rational
    variables, optionally with nonnegativity on a subset of the variables."""

    num_vars: int
    strict_rows: tuple[SignConstraint, ...]
    nonneg_vars: frozenset[int] = frozenset()


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    sample: Vec | None


class _Infeasible(Exception):
    pass


# internal row form: (coeffs: int tuple, const: int, strict: bool)
# meaning  coeffs . x + const  >= 0  (or > 0 when strict)
_Row = tuple[tuple[int, ...], int, bool]


def _normalize(coeffs: Sequence[Fraction], const: Fraction, strict: bool) -> _Row | None:
    den = math.lcm(const.denominator, *(c.denominator for c in coeffs)) if coeffs else const.denominator
    ints = [int(c * den) for c in coeffs]
    ci = int(const * den)
    g = math.gcd(ci, *(abs(x) for x in ints)) if ints else abs(ci)
    if g > 1:
        ints = [x // g for x in ints]
        ci //= g
    if all(x == 0 for x in ints):
        if ci > 0 or (ci == 0 and not strict):
            return None
        raise _Infeasible
    return (tuple(ints), ci, strict)


def _dedupe(rows: Iterable[_Row]) -> list[_Row]:
    # keep only the strongest row per direction: smallest constant, strict
    # beating non-strict at equal constant
    best: dict[tuple[int, ...], tuple[int, bool]] = {}
    for a, c, strict in rows:
        cur = best.get(a)
        if cur is None or (c, not strict) < (cur[0], not cur[1]):
            best[a] = (c, strict)
    return [(a, c, strict) for a, (c, strict) in best.items()]


def _combine(low: _Row, up: _Row, v: int) -> _Row | None:
    la, lc, ls = low
    ua, uc, us = up
    lam, mu = -ua[v], la[v]  # both > 0
    coeffs = tuple(lam * x + mu * y for x, y in zip(la, ua))
    const = lam * lc + mu * uc
    strict = ls or us
    g = math.gcd(const, *(abs(x) for x in coeffs))
    if g > 1:
        coeffs = tuple(x // g for x in coeffs)
        const //= g
    if all(x == 0 for x in coeffs):
        if const > 0 or (const == 0 and not strict):
            return None
        raise _Infeasible
    return (coeffs, const, strict)


def fm_feasible(problem: LinearSystemFeasibility) -> FeasibilityResult:
    """Exact Fourier-Motzkin elimination with native strict inequalities.

    Variables are eliminated in decreasing constraint-occurrence order
    (ties by lowest index).  When the system is feasible, a rational sample
    point is reconstructed by back-substituting interval midpoints.
    """
    n = problem.num_vars
    for row in problem.strict_rows:
        if len(row.coeffs) != n:
            raise ValueError("constraint references undeclared variables")
        if row.sense not in (SENSE_LT, SENSE_GT):
            raise ValueError("unknown sense %r" % (row.sense,))
    if any(v < 0 or v >= n for v in problem.nonneg_vars):
        raise ValueError("nonneg variable index out of range")

    try:
        rows: list[_Row] = []
        for row in problem.strict_rows:
            if row.sense == SENSE_GT:
                r = _normalize(row.coeffs, row.constant, True)
            else:
                r = _normalize([-c for c in row.coeffs], -row.constant, True)
            if r is not None:
                rows.append(r)
        for v in sorted(problem.nonneg_vars):
            unit = [Fraction(0)] * n
            unit[v] = Fraction(1)
            r = _normalize(unit, Fraction(0), False)
            if r is not None:
                rows.append(r)
        rows = _dedupe(rows)

        stages: list[tuple[int, list[_Row], list[_Row]]] = []
        remaining = set(range(n))
        while remaining:
            occ = {v: sum(1 for a, _, _ in rows if a[v] != 0) for v in remaining}
            v = max(sorted(remaining), key=lambda w: occ[w])
            lowers = [r for r in rows if r[0][v] > 0]
            uppers = [r for r in rows if r[0][v] < 0]
            passthrough = [r for r in rows if r[0][v] == 0]
            stages.append((v, lowers, uppers))
            new = list(passthrough)
            for low in lowers:
                for up in uppers:
                    c = _combine(low, up, v)
                    if c is not None:
                        new.append(c)
            rows = _dedupe(new)
            remaining.discard(v)
    except _Infeasible:
        return FeasibilityResult(False, None)

    sample: list[Fraction | None] = [None] * n
    for v, lowers, uppers in reversed(stages):
        lo: tuple[Fraction, bool] | None = None
        hi: tuple[Fraction, bool] | None = None
        for a, c, strict in lowers:
            rest = sum((Fraction(a[w]) * sample[w] for w in range(n) if w != v and a[w]), Fraction(c))
            val = -rest / a[v]
            if lo is None or val > lo[0]:
                lo = (val, strict)
            elif val == lo[0] and strict:
                lo = (val, True)
        for a, c, strict in uppers:
            rest = sum((Fraction(a[w]) * sample[w] for w in range(n) if w != v and a[w]), Fraction(c))
            val = -rest / a[v]
            if hi is None or val < hi[0]:
                hi = (val, strict)
            elif val == hi[0] and strict:
                hi = (val, True)
        if lo is None and hi is None:
            sample[v] = Fraction(0)
        elif hi is None:
            sample[v] = lo[0] + 1
        elif lo is None:
            sample[v] = hi[0] - 1
        else:
            if lo[0] < hi[0]:
                sample[v] = (lo[0] + hi[0]) / 2
            elif lo[0] == hi[0] and not lo[1] and not hi[1]:
                sample[v] = lo[0]
            else:
                raise AssertionError("empty interval after feasible elimination")

    point = tuple(x if x is not None else Fraction(0) for x in sample)
    for row in problem.strict_rows:
        value = dot(row.coeffs, point) + row.constant
        ok = value < 0 if row.sense == SENSE_LT else value > 0
        if not ok:
            raise AssertionError("sample point violates an original constraint")
    if any(point[v] < 0 for v in problem.nonneg_vars):
        raise AssertionError("sample point violates nonnegativity")
    return FeasibilityResult(True, point)
