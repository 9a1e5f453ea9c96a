"""Integer-lattice domains: torus reduction, periodic packings, greedy
windows, finite witnesses."""
from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from turanlab import (
    CertificateInvalidError,
    DomainNotSymmetricError,
    MTooSmallError,
    WitnessRejectedError,
    check_packing_periodic,
    default_m_schedule,
    density_bound_zd,
    explicit_witness_omega_N,
    greedy_packing_window,
    interval_domain,
    lattice_domain,
    omega_N_domain,
    omega_N_packing,
    periodic_set,
    torus_reduction,
    upper_bound_z,
    witness_zd,
)


def test_lattice_domain_validation():
    dom = lattice_domain(1, [0, 2, -2])
    assert (2,) in dom and (1,) not in dom
    with pytest.raises(DomainNotSymmetricError):
        lattice_domain(1, [1, -1])
    with pytest.raises(DomainNotSymmetricError):
        lattice_domain(2, [(0, 0), (1, 2)])


def test_interval_and_omega_domains():
    assert interval_domain(2).sorted_elements() == \
        [(-2,), (-1,), (0,), (1,), (2,)]
    assert set(omega_N_domain(4).elements) == {(0,), (1,), (-1,), (4,), (-4,)}
    with pytest.raises(ValueError):
        omega_N_domain(1)
    with pytest.raises(ValueError):
        interval_domain(-1)


def test_torus_reduction_hand_case():
    G, image = torus_reduction(omega_N_domain(3), 10)
    assert G.moduli == (10,)
    assert image.sorted_elements() == [(0,), (1,), (3,), (7,), (9,)]
    with pytest.raises(MTooSmallError):
        torus_reduction(omega_N_domain(3), 6)  # 3 and -3 collide


def test_default_m_schedule_shapes():
    assert default_m_schedule(interval_domain(4)) == [50]
    assert default_m_schedule(omega_N_domain(5)) == [12, 14, 16]
    assert default_m_schedule(omega_N_domain(4)) == [10, 20, 30]
    # dispersed but not an omega shape
    assert default_m_schedule(lattice_domain(1, [0, 2, -2, 5, -5])) == \
        [12, 14, 16]
    with pytest.raises(ValueError):
        default_m_schedule(lattice_domain(2, [(0, 0)]))


def test_upper_bound_z_interval():
    rep = upper_bound_z(interval_domain(3))
    assert rep.method == "torus-lp"
    assert rep.as_float() == pytest.approx(4.0, abs=1e-6)
    assert rep.certificate["schedule"][0]["M"] == 40


def test_upper_bound_z_odd_omega():
    # A(2n+1) = 2 at every even modulus past 2N
    for M in (8, 10, 14, 20):
        rep = upper_bound_z(omega_N_domain(3), [M])
        assert rep.as_float() == pytest.approx(2.0, abs=1e-6), f"M={M}"


def test_upper_bound_z_even_omega_closed_form():
    for n in (1, 2, 3):
        N = 2 * n
        closed = 1.0 + 1.0 / math.cos(math.pi / (2 * n + 1))
        rep = upper_bound_z(omega_N_domain(N), [2 * (2 * n + 1)])
        assert rep.as_float() == pytest.approx(closed, abs=1e-6), f"n={n}"


def test_explicit_witness_omega_N():
    for n in (1, 2, 3):
        wit = explicit_witness_omega_N(n)
        assert wit.total == pytest.approx(wit.closed_form, abs=1e-12)
        assert wit.grid_min >= -1e-9
        assert abs(wit.binding_value) < 1e-12
    with pytest.raises(ValueError):
        explicit_witness_omega_N(0)


def test_periodic_set_membership():
    lam = periodic_set(2, [[1, 1], [2, -1]], [(0, 0)])
    assert lam.det == -3
    assert lam.density == Fraction(1, 3)
    assert (1, 1) in lam and (3, 0) in lam and (2, -1) in lam
    assert (1, 0) not in lam and (0, 1) not in lam


def test_periodic_set_validation():
    with pytest.raises(ValueError, match="singular"):
        periodic_set(2, [[1, 1], [2, 2]], [(0, 0)])
    with pytest.raises(ValueError, match="coincide"):
        periodic_set(1, [[4]], [(0,), (4,)])
    with pytest.raises(ValueError, match="repeat"):
        periodic_set(1, [[4]], [(0,), (0,)])


def test_check_packing_periodic_paper_case():
    H = [(0, 0), (1, 0), (0, 1)]
    dom = lattice_domain(2, [tuple(a - b for a, b in zip(x, y))
                             for x in H for y in H])
    lam = periodic_set(2, [[1, 1], [2, -1]], [(0, 0)])
    ok, violation = check_packing_periodic(dom, lam)
    assert ok and violation is None
    rep = density_bound_zd(dom, lam)
    assert rep.value == Fraction(3)
    assert rep.exact


def test_density_bound_rejects_bad_packing():
    dom = lattice_domain(1, [0, 1, -1])
    lam = periodic_set(1, [[3]], [(0,), (1,)])  # 1 - 0 hits the domain
    ok, violation = check_packing_periodic(dom, lam)
    assert not ok and violation in {(1,), (-1,)}
    with pytest.raises(CertificateInvalidError):
        density_bound_zd(dom, lam)


def test_omega_N_packing_density():
    for n in range(1, 5):
        lam = omega_N_packing(n)
        assert lam.density == Fraction(n, 2 * n + 1)
        ok, _ = check_packing_periodic(omega_N_domain(2 * n), lam)
        assert ok
        bound = density_bound_zd(omega_N_domain(2 * n), lam)
        assert bound.value == Fraction(2 * n + 1, n)


def test_periodic_membership_against_cramer():
    """Row-generator membership vs a direct Cramer solve for z."""
    rng = random.Random(90701)
    for case in range(200):
        r0 = [rng.randint(-4, 4), rng.randint(-4, 4)]
        r1 = [rng.randint(-4, 4), rng.randint(-4, 4)]
        det = r0[0] * r1[1] - r0[1] * r1[0]
        if det == 0:
            continue
        lam = periodic_set(2, [r0, r1], [(0, 0)])
        for _ in range(25):
            v = (rng.randint(-30, 30), rng.randint(-30, 30))
            # v = i r0 + j r1 has the integer solution below iff member
            i_num = v[0] * r1[1] - r1[0] * v[1]
            j_num = r0[0] * v[1] - v[0] * r0[1]
            want = i_num % det == 0 and j_num % det == 0
            assert (v in lam) == want, f"case {case}: {r0} {r1} {v}"


def test_greedy_packing_window_interval():
    run = greedy_packing_window(interval_domain(3), 30)
    # scan picks 0, 4, 8, ... so the count is floor(60/4) + 1
    assert run.achieved == 16
    assert run.achieved >= run.floor
    assert run.window_size == 61


def test_greedy_packing_window_validates():
    with pytest.raises(ValueError):
        greedy_packing_window(interval_domain(3), 4)


def test_greedy_packing_window_2d():
    dom = lattice_domain(2, [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)])
    run = greedy_packing_window(dom, 6)
    assert run.achieved >= run.floor
    assert len(run.selected) == run.achieved


def test_witness_zd_fejer():
    for N in range(0, 5):
        rep = witness_zd([(k,) for k in range(N + 1)], interval_domain(N))
        assert rep.value == N + 1
        assert rep.direction == "lower"


def test_witness_zd_rejections():
    dom = interval_domain(2)
    with pytest.raises(WitnessRejectedError, match="escapes"):
        witness_zd([(0,), (3,)], dom)
    with pytest.raises(WitnessRejectedError, match="repeats"):
        witness_zd([(0,), (0,)], dom)
    with pytest.raises(WitnessRejectedError, match="empty"):
        witness_zd([], dom)


def test_witness_zd_paper_case():
    H = [(0, 0), (1, 0), (0, 1)]
    dom = lattice_domain(2, [tuple(a - b for a, b in zip(x, y))
                             for x in H for y in H])
    assert witness_zd(H, dom).value == 3.0
