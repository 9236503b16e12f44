import cmath
import math

import pytest

from magskin.geometry import Surface, TangentVector
from magskin.ibc import (
    consistency_with_lambda,
    impedance_operator,
    leontovich_limit_check,
    robin_coefficient,
)
from magskin.params import PhysicalConfig, derive_params

from conftest import log_grid, loglog_slope


def config(mu_minus=100.0, sigma_minus=1.0, omega=1.0, eps0=1.0, mu_plus=1.0, sigma_plus=0.01):
    return PhysicalConfig(
        omega=omega, eps0=eps0, mu_plus=mu_plus, mu_minus=mu_minus,
        sigma_plus=sigma_plus, sigma_minus=sigma_minus,
    )


def test_order_zero_is_the_zero_operator():
    op = impedance_operator(0, config())
    assert op.scalar_part == 0j and op.curvature_part == 0j
    v = TangentVector(1.0 + 2j, -0.5j)
    out = op.apply(Surface.sphere(1.0), v)
    assert out.c1 == 0j and out.c2 == 0j


def test_order_one_unit_inputs():
    op = impedance_operator(1, config(mu_minus=1.0, sigma_minus=1.0))
    expected = 2.0**0.25 * cmath.exp(1j * math.pi / 8.0)
    assert abs(op.scalar_part - expected) <= 1e-15
    assert op.curvature_part == 0j


def test_order_two_curvature_coefficient():
    cfg = config(mu_minus=50.0, omega=3.0)
    op = impedance_operator(2, cfg)
    assert abs(op.curvature_part - 1.0 / (1j * cfg.omega * cfg.mu_minus)) <= 1e-18


def test_unsupported_order_rejected():
    with pytest.raises(ValueError, match="unsupported"):
        impedance_operator(3, config())


def test_sphere_umbilic_degeneracy(rng):
    cfg = config()
    d1 = impedance_operator(1, cfg)
    d2 = impedance_operator(2, cfg)
    s = Surface.sphere(0.8)
    for _ in range(100):
        v = TangentVector(
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
        a = d1.apply(s, v)
        b = d2.apply(s, v)
        assert a.c1 == b.c1 and a.c2 == b.c2


def test_consistency_with_lambda_unit_case():
    cfg = config(mu_minus=1.0, sigma_minus=1.0)
    dp = derive_params(cfg)
    op = impedance_operator(1, cfg)
    assert consistency_with_lambda(op, dp) <= 1e-12
    both = -dp.eps_small * dp.lam / (1j * cfg.omega * cfg.mu_plus)
    assert abs(both - 2.0**0.25 * cmath.exp(1j * math.pi / 8.0)) <= 1e-14


def test_consistency_with_lambda_sweep():
    for omega in log_grid(1e-3, 1e3, 4):
        for sigma in log_grid(1e-3, 1e3, 4):
            for mu_minus in log_grid(1.0, 1e6, 4):
                cfg = config(omega=omega, sigma_minus=sigma, mu_minus=mu_minus)
                dp = derive_params(cfg)
                assert consistency_with_lambda(impedance_operator(1, cfg), dp) <= 1e-12


def test_scalar_scaling_with_mu_minus():
    a = impedance_operator(1, config(mu_minus=25.0))
    b = impedance_operator(1, config(mu_minus=100.0))
    assert abs(abs(b.scalar_part) - 0.5 * abs(a.scalar_part)) <= 1e-15 * abs(a.scalar_part)


def test_scalar_growth_slope_half_in_sigma():
    pts = []
    for sigma in log_grid(1e2, 1e6, 9):
        op = impedance_operator(1, config(sigma_minus=sigma))
        pts.append((sigma, abs(op.scalar_part)))
    assert abs(loglog_slope(pts) - 0.5) <= 0.01


def test_scalar_argument_range():
    for sigma in log_grid(1e-6, 1e9, 16):
        op = impedance_operator(1, config(sigma_minus=sigma))
        arg = cmath.phase(op.scalar_part)
        assert 0.0 < arg <= math.pi / 4.0 + 1e-15
    nearly_pec = impedance_operator(1, config(sigma_minus=1e12))
    assert abs(cmath.phase(nearly_pec.scalar_part) - math.pi / 4.0) <= 1e-6


def test_robin_order_zero_is_neumann():
    for mode in (0, 1, 5):
        rc = robin_coefficient(0, mode, Surface.cylinder(1.0), config())
        assert rc.gamma == 0j and rc.mode == mode


def test_robin_curvature_gap_exact():
    cfg = config(mu_minus=400.0)
    dp = derive_params(cfg)
    s = Surface.cylinder(0.5)
    g1 = robin_coefficient(1, 0, s, cfg).gamma
    g2 = robin_coefficient(2, 0, s, cfg).gamma
    expected = dp.eps_small**2 / (2.0 * 0.5)
    assert abs(abs(g2 - g1) - expected) <= 1e-12 * expected


def test_robin_rejects_other_surfaces():
    with pytest.raises(ValueError):
        robin_coefficient(1, 0, Surface.sphere(1.0), config())
    with pytest.raises(ValueError):
        robin_coefficient(1, 0, Surface.plane(), config())


def test_leontovich_gap_points_and_slope():
    # 7 log points hit the exact decades 1e-4 .. 1e-1
    cfgs = [config(sigma_minus=1.0 / d**2) for d in log_grid(1e-4, 1e-1, 7)]
    rows = leontovich_limit_check(cfgs)
    pts = [(row.delta_minus, row.relative_gap) for row in rows]
    assert abs(loglog_slope(pts) - 2.0) <= 0.1
    # rows follow the ascending grid: indices 2, 4, 6 are deltas 1e-3, 1e-2, 1e-1
    assert rows[2].relative_gap <= 1e-5
    assert abs(rows[6].relative_gap / rows[4].relative_gap - 100.0) <= 20.0


def test_leontovich_warns_outside_regime():
    with pytest.warns(UserWarning, match="strongly-absorbing"):
        leontovich_limit_check([config(sigma_minus=0.5)])
