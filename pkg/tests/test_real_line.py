"""Interval unions on the line, exact certificates, tent trains."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from turanlab import (
    CertificateInvalidError,
    DomainNotSymmetricError,
    WitnessRejectedError,
    halving_bound,
    interval_union,
    lattice_certificate,
    punctured_interval,
    tent_train,
    witness_in_domain,
)


def test_interval_union_validation():
    dom = interval_union([(-1, 1)])
    assert dom.measure == 2
    assert dom.sup == 1
    assert Fraction(1, 2) in dom and 1 not in dom  # open at the ends
    with pytest.raises(DomainNotSymmetricError):
        interval_union([(0, 1)])
    with pytest.raises(DomainNotSymmetricError):
        interval_union([(-2, -1), (1, 2)])  # no neighborhood of 0
    with pytest.raises(ValueError, match="overlap"):
        interval_union([(-1, 1), (0, 2), (-2, 0)])
    with pytest.raises(ValueError):
        interval_union([(1, 1), (-1, -1)])


def test_interval_union_accepts_rational_strings():
    dom = interval_union([("-3/2", "3/2")])
    assert dom.measure == 3
    assert Fraction(5, 4) in dom


def test_punctured_interval():
    dom = punctured_interval(Fraction(3, 2), 1)
    assert dom.pieces == ((Fraction(-3, 2), Fraction(-1)),
                          (Fraction(-1), Fraction(1)),
                          (Fraction(1), Fraction(3, 2)))
    assert 1 not in dom and Fraction(5, 4) in dom
    with pytest.raises(ValueError):
        punctured_interval(1, 2)


def test_lattice_certificate_paper_case():
    dom = punctured_interval(Fraction(3, 2), 1)
    rep = lattice_certificate(dom, 1)
    assert rep.value == Fraction(1)
    assert rep.exact and rep.direction == "upper"


def test_lattice_certificate_rejects_interior_point():
    dom = interval_union([(-3, 3)])
    with pytest.raises(CertificateInvalidError, match="inside"):
        lattice_certificate(dom, 2)
    with pytest.raises(ValueError):
        lattice_certificate(dom, 0)


def test_halving_bound():
    assert halving_bound(interval_union([(-3, 3)])).value == Fraction(3)
    dom = punctured_interval(Fraction(3, 2), 1)
    assert halving_bound(dom).value == Fraction(3, 2)


def test_tent_train_closed_forms():
    single = tent_train(Fraction(9, 10), [0])
    assert single.f0 == Fraction(9, 10)
    assert single.integral == Fraction(81, 100)
    assert single.ratio == Fraction(9, 10)
    train = tent_train(1, [0, 2])
    # tents at -2, 0, 2 vanishing at the odd integers
    assert train.f0 == 2
    assert train.ratio == Fraction(2)
    assert train.support.pieces == ((Fraction(-3), Fraction(-1)),
                                    (Fraction(-1), Fraction(1)),
                                    (Fraction(1), Fraction(3)))


def test_tent_train_overlapping_shifts_merge():
    train = tent_train(2, [0, 1])
    assert train.support.pieces == ((Fraction(-3), Fraction(3)),)
    # f0 = 2 tent(0) + 2 tent(1) = 4 + 2
    assert train.f0 == 6
    assert train.ratio == Fraction(16, 6)


def test_tent_train_validation():
    with pytest.raises(ValueError):
        tent_train(0, [0])
    with pytest.raises(ValueError):
        tent_train(1, [])


def test_witness_in_domain_paper_cases():
    dom = punctured_interval(Fraction(3, 2), 1)
    for eps in (Fraction(1, 10), Fraction(1, 100)):
        rep = witness_in_domain(tent_train(1 - eps, [0]), dom)
        assert rep.value == 1 - eps
        assert rep.exact and rep.direction == "lower"
    wide = punctured_interval(3, 1)
    rep = witness_in_domain(tent_train(1, [0, 2]), wide)
    assert rep.value == Fraction(2)


def test_witness_rejected_when_support_leaks():
    dom = punctured_interval(Fraction(3, 2), 1)
    # the single tent of half width 9/8 pokes past the puncture at 1
    with pytest.raises(WitnessRejectedError, match="misses"):
        witness_in_domain(tent_train(Fraction(9, 8), [0]), dom)
    # a domain split exactly at 0 cannot even be built
    with pytest.raises(DomainNotSymmetricError):
        interval_union([(-2, 0), (0, 2)])


def test_witness_rejects_seam_leak_inside_domain():
    # support (-2, 2) but the domain is punctured at +-1: the gap is named
    dom = punctured_interval(2, 1)
    with pytest.raises(WitnessRejectedError) as err:
        witness_in_domain(tent_train(2, [0]), dom)
    assert "(1, 1)" in str(err.value) or "(-1, -1)" in str(err.value)


def test_transform_spot_checks_nonnegative():
    rng = random.Random(90801)
    for _ in range(100):
        c = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        D = sorted(set(Fraction(rng.randint(-6, 6), rng.randint(1, 2))
                       for _ in range(rng.randint(1, 4))))
        train = tent_train(c, D)
        for _ in range(20):
            xi = rng.uniform(-25.0, 25.0)
            assert train.transform_value(xi) >= -1e-9
        assert train.transform_value(0.0) == pytest.approx(
            float(train.integral))


def test_train_ratio_matches_direct_sum():
    rng = random.Random(90802)
    for _ in range(200):
        c = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        D = sorted(set(Fraction(rng.randint(-8, 8)) for _ in range(rng.randint(1, 5))))
        train = tent_train(c, D)
        f0 = sum(max(Fraction(0), c - abs(a - b)) for a in D for b in D)
        assert train.f0 == f0
        assert train.ratio == c * c * len(D) ** 2 / f0
