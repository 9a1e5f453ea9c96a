"""Transforms, convolution, positive definiteness.

Hand oracles are tiny groups where every value is checkable on paper;
the randomized agreements live in the property suites.
"""
from __future__ import annotations

import cmath
import random

import numpy as np
import pytest

import turanlab as tl
from turanlab import (
    GroupFunction,
    autocorrelation,
    convolve,
    delta,
    dft,
    dft_exact_signs,
    from_dict,
    idft,
    indicator,
    is_positive_definite,
    make_group,
    parseval_gap,
    reflect,
)


def test_group_function_basics():
    G = make_group([4])
    f = from_dict(G, {(0,): 1.0, (1,): 0.5, (3,): 0.5})
    assert f((0,)) == 1.0
    assert f((2,)) == 0.0
    assert f.total() == 2.0
    assert f.l1() == 2.0
    assert set(f.support()) == {(0,), (1,), (3,)}


def test_group_function_shape_check():
    G = make_group([4])
    with pytest.raises(ValueError):
        GroupFunction(G, np.zeros(3))


def test_delta_and_indicator():
    G = make_group([2, 2])
    d = delta(G)
    assert d((0, 0)) == 1.0 and d.total() == 1.0
    ind = indicator(G, [(0, 0), (1, 0)])
    assert ind.total() == 2.0
    # bare ints only on rank one
    ind1 = indicator(make_group([5]), [0, 2])
    assert ind1((2,)) == 1.0


def test_dft_hand_case():
    """Forward kernel e^{-2 pi i t x / M} on the Z4 edge indicator."""
    G = make_group([4])
    F = dft(indicator(G, [0, 1]))
    want = np.array([2.0, 1.0 - 1.0j, 0.0, 1.0 + 1.0j])
    assert np.abs(F.values - want).max() < 1e-12


def test_dft_delta_is_flat():
    G = make_group([3, 4])
    F = dft(delta(G))
    assert np.abs(F.values - 1.0).max() < 1e-12


def test_dft_explicit_formula_random():
    rng = random.Random(90201)
    for _ in range(200):
        moduli = [rng.randint(2, 5) for _ in range(rng.randint(1, 3))]
        G = make_group(moduli)
        vals = np.array([rng.uniform(-3, 3) for _ in range(G.order)])
        F = dft(GroupFunction(G, vals))
        t = rng.choice(G.elements())
        direct = sum(
            vals[G.index(x)] * cmath.exp(
                -2j * cmath.pi * sum(ti * xi / m for ti, xi, m
                                     in zip(t, x, moduli)))
            for x in G.elements())
        assert abs(F.values[G.index(t)] - direct) < 1e-9 * max(1, np.abs(vals).sum())


def test_parseval_hand_case():
    G = make_group([4])
    f = indicator(G, [0, 1])
    # sum |f|^2 = 2 and sum |fhat|^2 / 4 = (4+2+0+2)/4
    assert parseval_gap(f) < 1e-12


def test_idft_rejects_imaginary_leak():
    G = make_group([4])
    F = tl.DualFunction(G, np.array([0.0, 1.0, 0.0, 0.0], dtype=complex))
    with pytest.raises(ValueError, match="not real"):
        idft(F)


def test_convolve_hand_case():
    G = make_group([4])
    f = indicator(G, [0, 1])
    g = convolve(f, f)
    assert list(g.values) == [1.0, 2.0, 1.0, 0.0]


def test_convolve_group_mismatch():
    with pytest.raises(ValueError):
        convolve(delta(make_group([4])), delta(make_group([2, 2])))


def test_convolution_theorem_random():
    rng = random.Random(90202)
    for _ in range(200):
        G = make_group([rng.randint(2, 6), rng.randint(2, 4)])
        a = GroupFunction(G, np.array([rng.uniform(-2, 2) for _ in range(G.order)]))
        b = GroupFunction(G, np.array([rng.uniform(-2, 2) for _ in range(G.order)]))
        lhs = dft(convolve(a, b)).values
        rhs = dft(a).values * dft(b).values
        assert np.abs(lhs - rhs).max() < 1e-9 * max(1.0, a.l1() * b.l1())


def test_reflect():
    G = make_group([5])
    f = from_dict(G, {(1,): 2.0, (2,): -1.0})
    r = reflect(f)
    assert r((4,)) == 2.0 and r((3,)) == -1.0 and r((1,)) == 0.0


def test_autocorrelation_hand_case():
    G = make_group([4])
    g = autocorrelation(indicator(G, [0, 1]))
    assert list(g.values) == [2.0, 1.0, 0.0, 1.0]


def test_autocorrelation_transform_is_magnitude_squared():
    rng = random.Random(90203)
    for _ in range(200):
        G = make_group([rng.randint(2, 9)])
        f = GroupFunction(G, np.array([rng.uniform(-2, 2) for _ in range(G.order)]))
        lhs = dft(autocorrelation(f)).values
        rhs = np.abs(dft(f).values) ** 2
        assert np.abs(lhs - rhs).max() < 1e-9 * max(1.0, f.l1() ** 2)


def test_dft_exact_signs_hand_case():
    G = make_group([2, 2])
    # rows of the 4x4 sign matrix in index order 00,01,10,11
    out = dft_exact_signs(G, [1, 2, 3, 4])
    assert list(out) == [10, -2, -4, 0]


def test_dft_exact_signs_matches_float():
    rng = random.Random(90204)
    for _ in range(100):
        G = make_group([2] * rng.randint(1, 5))
        vals = [rng.randint(-9, 9) for _ in range(G.order)]
        exact = dft_exact_signs(G, vals)
        flo = dft(GroupFunction(G, np.array(vals, dtype=float))).values
        assert np.abs(np.array([float(v) for v in exact]) - flo.real).max() < 1e-9
        assert np.abs(flo.imag).max() < 1e-12


def test_dft_exact_signs_rejects_odd_moduli():
    with pytest.raises(ValueError):
        dft_exact_signs(make_group([3]), [0, 0, 0])


def test_is_positive_definite_hand_cases():
    G = make_group([4])
    ok = is_positive_definite(from_dict(G, {(0,): 2.0, (1,): 1.0, (3,): 1.0}))
    assert ok.flag and ok.min_real >= -1e-12
    # 1 + 1.8 cos(pi t / 2) dips to -0.8 at t = 2
    bad = is_positive_definite(from_dict(G, {(0,): 1.0, (1,): 0.9, (3,): 0.9}))
    assert not bad.flag
    assert abs(bad.min_real - (-0.8)) < 1e-9


def test_is_positive_definite_tol_override():
    G = make_group([4])
    f = from_dict(G, {(0,): 1.0, (1,): 0.5001, (3,): 0.5001})
    assert not is_positive_definite(f).flag
    assert is_positive_definite(f, tol=1e-3).flag
