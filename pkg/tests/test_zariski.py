import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers_oracle import sample_big_divisor, valid_supports_brute_force
from k3chambers import gallery, model, zariski
from k3chambers.errors import ModeUnsupported, NotBig
from k3chambers.model import config_divisor, full_divisor, to_configuration
from k3chambers.zariski import is_big, volume, zariski_decompose


def test_decompose_single_curve_support(quartic):
    m = quartic.model
    r = zariski_decompose(m, full_divisor([5, 2, 2]))
    assert r.nef_part.coords == (3, 2, 2)
    assert r.neg_coeffs == ((0, Fraction(2)),)
    assert r.neg_set == (0,)
    assert r.null_set == (0,)


def test_decompose_grows_past_positive_pairing(quartic):
    # D.L1 = +1 > 0 yet L1 ends up in the support
    m = quartic.model
    d = full_divisor([5, 7, 2])
    assert model.pairings_with_curves(m, d) == (1, -5, 20)
    r = zariski_decompose(m, d)
    assert r.nef_part.coords == (4, 4, 2)
    assert dict(r.neg_coeffs) == {0: 1, 1: 3}
    assert r.neg_set == (0, 1)
    assert r.null_set == (0, 1)
    assert volume(m, d) == 24


def test_decompose_nef_divisor_is_its_own_nef_part(quartic):
    m = quartic.model
    ample = full_divisor([2, 2, 2])
    r = zariski_decompose(m, ample)
    assert r.nef_part == ample
    assert r.neg_coeffs == ()
    assert r.neg_set == () and r.null_set == ()


def test_decompose_boundary_nef_class(quartic):
    # C + 2L1 + 2L2 = (2,2,1) is big (square 6) and orthogonal to both lines
    m = quartic.model
    r = zariski_decompose(m, full_divisor([2, 2, 1]))
    assert r.neg_set == ()
    assert r.null_set == (0, 1)


def test_square_zero_nef_class_is_not_big(quartic):
    # C + L1 is nef but has square 0, hence volume 0
    m = quartic.model
    d = full_divisor([1, 0, 1])
    assert model.pair(m, d, d) == 0
    with pytest.raises(NotBig):
        zariski_decompose(m, d)


def test_volume_examples(quartic):
    m = quartic.model
    d = full_divisor([5, 2, 2])
    assert volume(m, d) == 18
    assert model.pair(m, d, d) == 10  # vol > D^2 when N != 0
    # direct quadratic form: (2,2,2) = 2(L1+L2+C), and (L1+L2+C)^2 = 4
    assert volume(m, full_divisor([2, 2, 2])) == 16
    nef = full_divisor([1, 1, 1])
    assert volume(m, nef) == model.pair(m, nef, nef)


def test_not_big_inputs(quartic):
    m = quartic.model
    with pytest.raises(NotBig):
        zariski_decompose(m, full_divisor([-2, -2, -2]))
    with pytest.raises(NotBig):
        volume(m, full_divisor([0, 0, 1]))  # the conic alone: P = 0
    check = is_big(m, full_divisor([-2, -2, -2]))
    assert not check.big and check.decomposition is None


def test_is_big_certificates(quartic):
    m = quartic.model
    check = is_big(m, full_divisor([2, 2, 2]))
    assert check.big and check.decomposition is not None
    check = is_big(m, full_divisor([5, 7, 2]))
    p = check.decomposition.nef_part
    assert model.pair(m, p, p) == 24


def test_configuration_mode_rejects_nonpositive_ample_coefficient(quartic):
    cfg = to_configuration(quartic.model)
    with pytest.raises(ModeUnsupported):
        zariski_decompose(cfg, config_divisor(0, [1, 1, 1]))
    with pytest.raises(ModeUnsupported):
        zariski_decompose(cfg, config_divisor(-1, [1, 1, 1]))


def test_is_big_positive_cone_fallback_in_configuration_mode(quartic):
    cfg = to_configuration(quartic.model)
    # sum of all curves: square 4 > 0, ample pairing 8 > 0, but t = 0
    check = is_big(cfg, config_divisor(0, [1, 1, 1]))
    assert check.big and check.decomposition is None
    assert "positive-cone" in check.reason
    check = is_big(cfg, config_divisor(-1, [0, 0, 0]))
    assert not check.big


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(2), Fraction(3, 5)])
def test_decomposition_scales_with_the_divisor(quartic, lam):
    m = quartic.model
    d = full_divisor([5, 7, 2])
    r = zariski_decompose(m, d)
    scaled = zariski_decompose(m, model.scale_divisor(m, lam, d))
    assert scaled.neg_set == r.neg_set
    assert scaled.null_set == r.null_set
    assert dict(scaled.neg_coeffs) == {i: lam * b for i, b in r.neg_coeffs}
    assert scaled.nef_part == model.scale_divisor(m, lam, r.nef_part)


def _models_for_sampling():
    out = [gallery.quartic_example().model, gallery.double_cover_example().model]
    for seed in (3, 11, 17, 29):
        out.append(gallery.random_configuration(seed, 2 + seed % 3, 0.5))
    return out


@pytest.mark.parametrize("m", _models_for_sampling())
def test_result_invariants_on_sampled_big_divisors(m):
    rng = random.Random("zariski-invariants")
    g = model.curve_gram(m)
    n = model.curve_count(m)
    for _ in range(40):
        d = sample_big_divisor(m, rng)
        dots = model.pairings_with_curves(m, d)
        r = zariski_decompose(m, d)
        # monotone support
        assert set(r.neg_set) >= {i for i in range(n) if dots[i] < 0}
        # positive coefficients, exact reconstruction, orthogonality
        assert all(b > 0 for _, b in r.neg_coeffs)
        rebuilt = model.add_divisors(m, r.nef_part, zariski.negative_part(m, r))
        assert rebuilt == d
        p_dots = model.pairings_with_curves(m, r.nef_part)
        assert all(p_dots[j] == 0 for j in r.neg_set)
        assert all(x >= 0 for x in p_dots)
        assert r.null_set == tuple(i for i in range(n) if p_dots[i] == 0)
        # negative definite support, positive volume
        assert model.restrict_gram(m, r.neg_set) is not None
        assert model.pair(m, r.nef_part, r.nef_part) > 0
        assert volume(m, d) > 0


@pytest.mark.parametrize("m", _models_for_sampling())
def test_uniqueness_against_brute_force(m):
    if model.curve_count(m) > 4:
        pytest.skip("brute-force oracle runs on models with <= 4 curves")
    rng = random.Random("uniqueness-mini")
    for _ in range(25):
        d = sample_big_divisor(m, rng)
        r = zariski_decompose(m, d)
        assert valid_supports_brute_force(m, d) == [r.neg_set]


@given(st.integers(0, 200))
def test_random_configuration_divisors_always_decompose(seed):
    """t > 0, a >= 0 divisors are big by construction in configuration
    mode; the engine must accept every one of them."""
    m = gallery.random_configuration(seed, 1 + seed % 5, 0.6)
    rng = random.Random(seed)
    d = sample_big_divisor(m, rng)
    r = zariski_decompose(m, d)
    assert model.pair(m, r.nef_part, r.nef_part) > 0
