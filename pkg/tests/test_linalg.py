from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import assume, given, strategies as st

from k3chambers import linalg
from k3chambers.errors import NotSymmetric, PreconditionViolated, SingularMatrix
from k3chambers.gallery import random_ade_gram
from k3chambers.linalg import (
    LinearSystemFeasibility,
    SignConstraint,
    fm_feasible,
    inverse_nonpositive_check,
    is_negative_definite,
    signature,
    solve_linear,
)

A2 = linalg.mat([[-2, 1], [1, -2]])
QUARTIC = linalg.mat([[-2, 1, 2], [1, -2, 2], [2, 2, -2]])
DOUBLE_COVER = linalg.mat([[-2, 0, 2], [0, -2, 2], [2, 2, -2]])

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def sym_matrix(n, entries):
    return st.lists(entries, min_size=n * n, max_size=n * n).map(
        lambda xs: tuple(
            tuple(xs[i * n + j] if j >= i else xs[j * n + i] for j in range(n))
            for i in range(n)
        )
    )


# ---------------------------------------------------------------------------
# solve_linear
# ---------------------------------------------------------------------------


def test_solve_hand_checked_2x2():
    assert solve_linear(A2, linalg.vec([-2, -2])) == linalg.vec([2, 2])
    assert solve_linear(A2, linalg.vec([-3, -3])) == linalg.vec([3, 3])


def test_solve_trivial_1x1():
    assert solve_linear(linalg.mat([[-2]]), linalg.vec([0])) == (Fraction(0),)


def test_solve_singular_raises():
    with pytest.raises(SingularMatrix):
        solve_linear(linalg.mat([[-2, 2], [2, -2]]), linalg.vec([1, 1]))


def test_solve_empty_system():
    assert solve_linear((), ()) == ()


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(rationals, min_size=n, max_size=n),
)))
def test_solve_then_multiply_recovers_rhs(data):
    rows, b = data
    s = linalg.mat(rows)
    assume(linalg.determinant(s) != 0)
    x = solve_linear(s, linalg.vec(b))
    assert linalg.mat_vec(s, x) == linalg.vec(b)


# ---------------------------------------------------------------------------
# is_negative_definite
# ---------------------------------------------------------------------------


def test_nd_examples():
    assert is_negative_definite(A2)
    assert not is_negative_definite(linalg.mat([[-2, 2], [2, -2]]))  # det 0
    assert not is_negative_definite(QUARTIC)  # det 18 > 0
    assert linalg.determinant(QUARTIC) == 18
    assert is_negative_definite(())  # empty set, vacuously


def test_nd_requires_symmetry():
    with pytest.raises(NotSymmetric):
        is_negative_definite(linalg.mat([[-2, 1], [0, -2]]))


def brute_force_nd(s):
    n = len(s)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            sub = tuple(tuple(s[i][j] for j in idx) for i in idx)
            det = linalg.determinant(sub)
            if (-1) ** k * det <= 0:
                return False
    return True


@given(st.integers(1, 5).flatmap(lambda n: sym_matrix(n, st.integers(-4, 4).map(Fraction))))
def test_nd_matches_all_principal_minors(s):
    assert is_negative_definite(s) == brute_force_nd(s)


# ---------------------------------------------------------------------------
# signature
# ---------------------------------------------------------------------------


def test_signature_examples():
    assert signature(QUARTIC) == (1, 2, 0)
    assert signature(linalg.mat([[-2]])) == (0, 1, 0)
    assert signature(DOUBLE_COVER) == (1, 2, 0)


def test_signature_hyperbolic_plane():
    assert signature(linalg.mat([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_zero_matrix():
    assert signature(linalg.mat([[0, 0], [0, 0]])) == (0, 0, 2)


@given(st.integers(1, 5).flatmap(lambda n: sym_matrix(n, st.integers(-4, 4).map(Fraction))))
def test_signature_counts_sum_to_dim(s):
    pos, neg, zero = signature(s)
    assert pos + neg + zero == len(s)
    assert (neg == len(s)) == is_negative_definite(s)


# ---------------------------------------------------------------------------
# inverse_nonpositive_check
# ---------------------------------------------------------------------------


def test_inverse_check_examples():
    assert inverse_nonpositive_check(A2)
    inv = linalg.inverse(A2)
    assert inv == linalg.mat([["-2/3", "-1/3"], ["-1/3", "-2/3"]])
    assert inverse_nonpositive_check(linalg.mat([[-2]]))


def test_inverse_check_rejects_bad_input():
    with pytest.raises(PreconditionViolated):
        inverse_nonpositive_check(linalg.mat([[-2, -1], [-1, -2]]))  # negative off-diag
    with pytest.raises(PreconditionViolated):
        inverse_nonpositive_check(linalg.mat([[2, 0], [0, 2]]))  # not ND
    with pytest.raises(PreconditionViolated):
        inverse_nonpositive_check(linalg.mat([[-2, 1], [0, -2]]))  # not symmetric


@pytest.mark.parametrize("seed", range(60))
def test_inverse_check_on_random_ade_grams(seed):
    g = random_ade_gram(seed)
    assert is_negative_definite(g)
    assert inverse_nonpositive_check(g)


# ---------------------------------------------------------------------------
# Fourier-Motzkin feasibility
# ---------------------------------------------------------------------------


def quartic_sign_problem(signs):
    """Sign system for D = H + a1 L1 + a2 L2 + a3 C on the quartic with
    H = (2,2,2): pairings H.(L1,L2,C) = (2,2,4)."""
    h = (Fraction(2), Fraction(2), Fraction(4))
    rows = tuple(
        SignConstraint(coeffs=QUARTIC[j], constant=h[j], sense=signs[j])
        for j in range(3)
    )
    return LinearSystemFeasibility(3, rows, frozenset({0, 1, 2}))


def test_fm_feasible_weyl_pattern():
    res = fm_feasible(quartic_sign_problem(("<", "<", ">")))
    assert res.feasible
    # hand-checked solution: a = (3, 3, 0) gives D = (5,5,2), pairings (-1,-1,16)
    a = linalg.vec([3, 3, 0])
    dots = linalg.mat_vec(QUARTIC, a)
    h = linalg.vec([2, 2, 4])
    assert dots[0] + h[0] < 0 and dots[1] + h[1] < 0 and dots[2] + h[2] > 0


def test_fm_infeasible_pattern():
    # L1 < 0 and C < 0 needs the non-ND pair {L1, C}
    assert not fm_feasible(quartic_sign_problem(("<", ">", "<"))).feasible


def test_fm_empty_problem_is_feasible():
    res = fm_feasible(LinearSystemFeasibility(0, (), frozenset()))
    assert res.feasible and res.sample == ()
    res = fm_feasible(LinearSystemFeasibility(3, (), frozenset()))
    assert res.feasible and res.sample == (0, 0, 0)


def test_fm_rejects_undeclared_variables():
    row = SignConstraint(linalg.vec([1, 2]), Fraction(0), "<")
    with pytest.raises(ValueError):
        fm_feasible(LinearSystemFeasibility(3, (row,), frozenset()))


def _satisfies(problem, point):
    for row in problem.strict_rows:
        value = linalg.dot(row.coeffs, point) + row.constant
        if row.sense == "<" and not value < 0:
            return False
        if row.sense == ">" and not value > 0:
            return False
    return all(point[v] >= 0 for v in problem.nonneg_vars)


def _grid_sign_patterns(gram, h, den=8, top=5):
    """Strict sign patterns of (H + sum a_i C_i) . C_j attained on the dense
    grid a_i = k/den, 0 <= k <= top*den (integer arithmetic throughout)."""
    g = [[int(x) for x in row] for row in gram]
    hd = [int(x) * den for x in h]
    attained = set()
    rng = range(top * den + 1)
    for n1 in rng:
        for n2 in rng:
            base = [hd[j] + g[j][0] * n1 + g[j][1] * n2 for j in range(3)]
            for n3 in rng:
                v0 = base[0] + g[0][2] * n3
                v1 = base[1] + g[1][2] * n3
                v2 = base[2] + g[2][2] * n3
                if v0 and v1 and v2:
                    attained.add(
                        ("<" if v0 < 0 else ">",
                         "<" if v1 < 0 else ">",
                         "<" if v2 < 0 else ">")
                    )
    return attained


@pytest.mark.parametrize(
    "gram,h",
    [
        (QUARTIC, (2, 2, 4)),
        (DOUBLE_COVER, (2, 2, 2)),
        (linalg.mat([[-2, 1, 0], [1, -2, 1], [0, 1, -2]]), (1, 1, 1)),
    ],
)
def test_fm_agrees_with_dense_grid_search(gram, h):
    """Independent oracle: rational grid with denominators up to 8 over the
    coefficient box.  FM-infeasible patterns admit no grid point; FM-feasible
    patterns have a verified sample, and any grid hit implies feasibility."""
    h = linalg.vec(h)
    attained = _grid_sign_patterns(gram, h)
    for pattern in product("<>", repeat=3):
        rows = tuple(
            SignConstraint(coeffs=gram[j], constant=h[j], sense=pattern[j])
            for j in range(3)
        )
        problem = LinearSystemFeasibility(3, rows, frozenset({0, 1, 2}))
        res = fm_feasible(problem)
        if res.feasible:
            assert _satisfies(problem, res.sample)
        else:
            assert pattern not in attained
        if pattern in attained:
            assert res.feasible
