"""Surface impedance operators of orders 0..2 and their cylinder reduction.

The order-k operator maps the tangential electric trace to the tangential
magnetic trace on the interface.  Order 0 is the perfectly insulating
condition (zero operator), order 1 a scalar admittance, order 2 adds a
curvature correction through (H - C).  For the axial-field cylinder modes the
whole operator collapses to one complex Robin coefficient per mode.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .geometry import Surface, SurfaceKind, TangentVector, mean_curvature, mean_minus_curvature_apply
from .params import DerivedParams, PhysicalConfig, derive_params, leontovich_factor


@dataclass(frozen=True)
class ImpedanceOperator:
    """Tangential-trace impedance operator of order k in {0, 1, 2}.

    scalar_part multiplies the trace directly [1/Ohm]; curvature_part
    multiplies (H - C) applied to the trace and is nonzero only for k = 2.
    """

    order: int
    scalar_part: complex
    curvature_part: complex

    def apply(self, s: Surface, v: TangentVector) -> TangentVector:
        out = v.scale(self.scalar_part)
        if self.curvature_part != 0:
            out = out + mean_minus_curvature_apply(s, v).scale(self.curvature_part)
        return out


def impedance_operator(k: int, cfg: PhysicalConfig) -> ImpedanceOperator:
    """Build the order-k impedance operator from the physical configuration."""
    if k not in (0, 1, 2):
        raise ValueError(f"unsupported impedance order {k!r}; must be 0, 1 or 2")
    if k == 0:
        return ImpedanceOperator(order=0, scalar_part=0j, curvature_part=0j)
    ratio = cfg.sigma_minus / cfg.omega
    modulus = math.sqrt(math.hypot(cfg.eps0, ratio)) / math.sqrt(cfg.mu_minus)
    phase = 0.5 * math.atan(ratio / cfg.eps0)
    scalar = cmath.rect(modulus, phase)
    if k == 1:
        return ImpedanceOperator(order=1, scalar_part=scalar, curvature_part=0j)
    return ImpedanceOperator(order=2, scalar_part=scalar, curvature_part=1.0 / (1j * cfg.omega * cfg.mu_minus))


def consistency_with_lambda(op: ImpedanceOperator, dp: DerivedParams) -> float:
    """Relative gap between the scalar part and -eps*lam/(i*omega*mu_plus).

    The two expressions are algebraically identical; the returned discrepancy
    is pure floating-point noise for a correct build.
    """
    if op.order < 1:
        raise ValueError("consistency check needs an operator of order >= 1")
    cfg = dp.config
    expected = -dp.eps_small * dp.lam / (1j * cfg.omega * cfg.mu_plus)
    return abs(op.scalar_part - expected) / abs(expected)


@dataclass(frozen=True)
class LeontovichRow:
    sigma_minus: float
    delta_minus: float
    relative_gap: float


def leontovich_limit_check(cfgs: list[PhysicalConfig]) -> list[LeontovichRow]:
    """Gap between 1/scalar_part and the strongly-absorbing impedance, per config.

    The gap decays like delta_minus^2 as the conductivity grows; configs with
    delta_minus >= 1 are outside that regime and trigger a warning.
    """
    rows = []
    for cfg in cfgs:
        dp = derive_params(cfg)
        if dp.delta_minus >= 1.0:
            warnings.warn(
                f"delta_minus={dp.delta_minus:.3g} >= 1: outside the strongly-absorbing regime",
                stacklevel=2,
            )
        op = impedance_operator(1, cfg)
        leon = leontovich_factor(cfg)
        gap = abs(1.0 / op.scalar_part - leon) / abs(leon)
        rows.append(LeontovichRow(cfg.sigma_minus, dp.delta_minus, gap))
    return rows


@dataclass(frozen=True)
class RobinCoefficient:
    """Per-mode boundary coefficient gamma in u'(R) + gamma*u(R) = 0 [1/m]."""

    mode: int
    gamma: complex


# Sign of the cylinder reduction, pinned by requiring the order-1 reduced
# model to converge to the exact transmission solution (see README for the
# calibration record); the wrong sign visibly diverges.
ROBIN_SIGN = +1.0


def robin_coefficient(k: int, mode: int, s: Surface, cfg: PhysicalConfig) -> RobinCoefficient:
    """Reduce the order-k operator to the axial-field Robin coefficient.

    Only the cylinder reduction exists here; the axial direction has zero
    principal curvature, so the order-2 curvature term contributes the full
    mean curvature 1/(2R).
    """
    if s.kind is not SurfaceKind.CYLINDER:
        raise ValueError("the Robin reduction is implemented for the cylinder only")
    op = impedance_operator(k, cfg)
    if k == 0:
        return RobinCoefficient(mode=mode, gamma=0j)
    effective = op.scalar_part + op.curvature_part * mean_curvature(s)
    gamma = ROBIN_SIGN * 1j * cfg.omega * cfg.mu_plus * effective
    return RobinCoefficient(mode=mode, gamma=gamma)
