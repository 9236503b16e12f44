"""Exact and reduced per-mode solutions of the layered-cylinder benchmark.

Geometry: a conducting core r < R_in, a driven shell R_in < r < R_out with a
surface-current ring at r = r_source, and a no-flux outer boundary.  The field
is the axial electric component u(r)*exp(i*m*theta); per azimuthal mode the
problem is a scalar Helmholtz equation with radial Bessel solutions, so every
model variant (exact transmission, impedance-reduced, expansion terms) is a
small dense linear solve over basis coefficients:

* conductor: J_m(k_minus r), normalised by its interface value so only scaled
  Bessel ratios enter the matrix;
* shell: J_m(k_plus r) and H1_m(k_plus r) on each side of the source ring.

Interface conditions are continuity of u and of u'/mu; the ring prescribes a
jump of u'; the outer boundary takes u' = 0.  Every returned solution is
checked against its defining conditions to 1e-10 relative.
"""

from __future__ import annotations

import cmath
import functools
import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .bessel import BesselEval, bessel_h1, bessel_j
from .geometry import Surface, mean_curvature
from .ibc import robin_coefficient
from .params import DerivedParams, PhysicalConfig, derive_params

RESIDUAL_TOL = 1e-10
_COND_WARN = 1e12


class SolverError(RuntimeError):
    """A solve violated its defining conditions or its inputs are inconsistent."""


class ConvergenceError(RuntimeError):
    """An error sweep did not decrease with the model parameter."""


def default_config(eps: float = 0.1) -> PhysicalConfig:
    """Unit-frequency configuration with delta_minus = 1, delta_plus = 10."""
    return PhysicalConfig(
        omega=1.0,
        eps0=1.0,
        mu_plus=1.0,
        mu_minus=1.0 / eps**2,
        sigma_plus=0.01,
        sigma_minus=1.0,
    )


@dataclass(frozen=True)
class CylinderBenchmark:
    """Layered-cylinder benchmark: interface, outer wall, ring source, one mode."""

    r_in: float
    r_out: float
    r_source: float
    mode: int
    cfg: PhysicalConfig
    source_amplitude: complex = 1.0 + 0j

    def __post_init__(self) -> None:
        if not (0.0 < self.r_in < self.r_source < self.r_out):
            raise ValueError(
                f"need 0 < r_in < r_source < r_out, got {self.r_in}, {self.r_source}, {self.r_out}"
            )
        if abs(self.mode) > 200:
            raise ValueError(f"|mode| must be <= 200, got {self.mode}")

    @functools.cached_property
    def params(self) -> DerivedParams:
        return derive_params(self.cfg)

    @property
    def k_plus(self) -> complex:
        return self.params.kappa_plus * cmath.sqrt(self.params.alpha_plus)

    @property
    def k_minus(self) -> complex:
        dp = self.params
        return dp.kappa_plus * cmath.sqrt(dp.alpha_minus) / dp.eps_small

    def with_eps(self, eps: float) -> "CylinderBenchmark":
        """Same benchmark with mu_minus = mu_plus/eps^2; everything else fixed."""
        if not (0.0 < eps):
            raise ValueError("eps must be positive")
        return replace(self, cfg=self.cfg.with_mu_minus(self.cfg.mu_plus / eps**2))


def default_benchmark(mode: int = 0, eps: float = 0.1) -> CylinderBenchmark:
    return CylinderBenchmark(
        r_in=1.0, r_out=2.0, r_source=1.5, mode=mode, cfg=default_config(eps)
    )


def _eval_pair(m: int, z: complex) -> tuple[BesselEval, BesselEval]:
    return bessel_j(m, z), bessel_h1(m, z)


@dataclass(frozen=True)
class ModalSolution:
    """Per-mode radial solution; coefficients over the region bases.

    Shell: u = B*J_m(k_plus r) + C*H1_m(k_plus r) inside the source ring,
    D, E outside it.  Conductor (when present): u = A*J_m(k_minus r)/J_m(k_minus R_in),
    evaluated through scaled Bessel ratios so deep evaluation never overflows.
    """

    kind: str
    order: int | None
    benchmark: CylinderBenchmark
    shell_inner: tuple[complex, complex]
    shell_outer: tuple[complex, complex]
    conductor_amplitude: complex | None
    condition_number: float
    residuals: dict[str, float]
    ring_source: complex = 1.0 + 0j

    @property
    def mode_abs(self) -> int:
        return abs(self.benchmark.mode)

    @functools.cached_property
    def _conductor_ref(self) -> BesselEval:
        b = self.benchmark
        return bessel_j(self.mode_abs, b.k_minus * b.r_in)

    def u(self, r: float) -> complex:
        return self._eval(r)[0]

    def u_prime(self, r: float) -> complex:
        return self._eval(r)[1]

    def _eval_conductor(self, r: float) -> tuple[complex, complex]:
        if self.conductor_amplitude is None:
            raise SolverError(f"{self.kind} solution has no conductor region")
        b = self.benchmark
        k = b.k_minus
        ref = self._conductor_ref
        jv = bessel_j(self.mode_abs, k * r)
        f = cmath.exp(jv.exponent - ref.exponent)
        val = self.conductor_amplitude * jv.value / ref.value * f
        der = self.conductor_amplitude * k * jv.derivative / ref.value * f
        return val, der

    def _eval(self, r: float) -> tuple[complex, complex]:
        b = self.benchmark
        m = self.mode_abs
        if r < 0 or r > b.r_out * (1 + 1e-12):
            raise ValueError(f"radius {r!r} outside [0, r_out]")
        if r < b.r_in:
            return self._eval_conductor(r)
        k = b.k_plus
        coeff = self.shell_inner if r <= b.r_source else self.shell_outer
        jv, hv = _eval_pair(m, k * r)
        val = coeff[0] * jv.actual + coeff[1] * hv.actual
        der = k * (coeff[0] * jv.actual_derivative + coeff[1] * hv.actual_derivative)
        return val, der


def _check_residuals(sol: ModalSolution) -> None:
    worst = max(sol.residuals.values())
    if not (worst <= RESIDUAL_TOL):
        raise SolverError(
            f"{sol.kind} solve violated its conditions: residuals {sol.residuals}"
        )


def _solve_linear(kind: str, rows: list[list[complex]], rhs: list[complex]) -> tuple[np.ndarray, float]:
    a = np.array(rows, dtype=complex)
    b = np.array(rhs, dtype=complex)
    cond = float(np.linalg.cond(a))
    if not math.isfinite(cond) or cond > _COND_WARN:
        warnings.warn(f"{kind} system near-singular: condition number {cond:.3e}", stacklevel=3)
    try:
        x = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"{kind} system singular: {exc}") from exc
    return x, cond


def solve_exact(b: CylinderBenchmark) -> ModalSolution:
    """Exact transmission solution: conductor + two-piece shell, 6x6 solve."""
    m = abs(b.mode)
    cfg = b.cfg
    kp, km = b.k_plus, b.k_minus
    jc = bessel_j(m, km * b.r_in)
    hc = bessel_h1(m, km * b.r_in)
    j_in, h_in = _eval_pair(m, kp * b.r_in)
    j_s, h_s = _eval_pair(m, kp * b.r_source)
    j_o, h_o = _eval_pair(m, kp * b.r_out)

    # unknowns [A_J, A_H, B, C, D, E]; conductor columns normalised at r_in
    ratio_j = km * jc.derivative / jc.value
    ratio_h = km * hc.derivative / hc.value
    rows = [
        [0j, 1.0 + 0j, 0j, 0j, 0j, 0j],  # regularity at the origin
        [1.0 + 0j, 1.0 + 0j, -j_in.actual, -h_in.actual, 0j, 0j],
        [
            ratio_j / cfg.mu_minus,
            ratio_h / cfg.mu_minus,
            -kp * j_in.actual_derivative / cfg.mu_plus,
            -kp * h_in.actual_derivative / cfg.mu_plus,
            0j,
            0j,
        ],
        [0j, 0j, j_s.actual, h_s.actual, -j_s.actual, -h_s.actual],
        [
            0j,
            0j,
            -kp * j_s.actual_derivative,
            -kp * h_s.actual_derivative,
            kp * j_s.actual_derivative,
            kp * h_s.actual_derivative,
        ],
        [0j, 0j, 0j, 0j, kp * j_o.actual_derivative, kp * h_o.actual_derivative],
    ]
    rhs = [0j, 0j, 0j, 0j, b.source_amplitude, 0j]
    x, cond = _solve_linear("exact", rows, rhs)

    sol = ModalSolution(
        kind="exact",
        order=None,
        benchmark=b,
        shell_inner=(x[2], x[3]),
        shell_outer=(x[4], x[5]),
        conductor_amplitude=x[0],
        condition_number=cond,
        residuals={},
        ring_source=b.source_amplitude,
    )
    res = _transmission_residuals(sol)
    sol = replace(sol, residuals=res)
    _check_residuals(sol)
    return sol


def _rel(num: float, scale: float) -> float:
    return num / max(scale, 1e-300)


def _transmission_residuals(sol: ModalSolution) -> dict[str, float]:
    b = sol.benchmark
    cfg = b.cfg
    u_minus, du_minus = sol._eval_conductor(b.r_in)
    u_plus, du_plus = sol._eval(b.r_in)
    res = {
        "interface_u": _rel(abs(u_minus - u_plus), max(abs(u_minus), abs(u_plus))),
        "interface_flux": _rel(
            abs(du_minus / cfg.mu_minus - du_plus / cfg.mu_plus),
            max(abs(du_minus) / cfg.mu_minus, abs(du_plus) / cfg.mu_plus),
        ),
    }
    res.update(_shell_residuals(sol))
    return res


def _shell_residuals(sol: ModalSolution) -> dict[str, float]:
    """Source-jump, source-continuity and outer-wall residuals (shell side)."""
    b = sol.benchmark
    m = abs(b.mode)
    kp = b.k_plus
    j_s, h_s = _eval_pair(m, kp * b.r_source)
    bi, ci = sol.shell_inner
    do, eo = sol.shell_outer
    u_in = bi * j_s.actual + ci * h_s.actual
    u_out = do * j_s.actual + eo * h_s.actual
    du_in = kp * (bi * j_s.actual_derivative + ci * h_s.actual_derivative)
    du_out = kp * (do * j_s.actual_derivative + eo * h_s.actual_derivative)
    j_o, h_o = _eval_pair(m, kp * b.r_out)
    du_outer = kp * (do * j_o.actual_derivative + eo * h_o.actual_derivative)
    outer_scale = abs(kp) * (
        abs(do) * abs(j_o.actual_derivative) + abs(eo) * abs(h_o.actual_derivative)
    )
    jump_scale = max(abs(du_in), abs(du_out), abs(sol.ring_source), abs(kp) * (abs(bi) + abs(ci)))
    return {
        "source_u": _rel(abs(u_in - u_out), max(abs(u_in), abs(u_out))),
        "source_jump": _rel(abs((du_out - du_in) - sol.ring_source), jump_scale),
        "outer_flux": _rel(abs(du_outer), outer_scale),
    }


def _solve_shell(
    kind: str,
    order: int | None,
    b: CylinderBenchmark,
    robin_gamma: complex | None,
    neumann_datum: complex,
    source: complex,
) -> ModalSolution:
    """Shell-only 4x4 solve with either a Robin or an inhomogeneous-Neumann wall at r_in.

    robin_gamma None means the Neumann condition u'(r_in) = neumann_datum;
    otherwise u'(r_in) + gamma*u(r_in) = 0, rewritten as u'(r_in)/gamma + u = 0
    when |gamma| > 1 so the Dirichlet limit stays well-conditioned.
    """
    m = abs(b.mode)
    kp = b.k_plus
    j_in, h_in = _eval_pair(m, kp * b.r_in)
    j_s, h_s = _eval_pair(m, kp * b.r_source)
    j_o, h_o = _eval_pair(m, kp * b.r_out)

    du_j = kp * j_in.actual_derivative
    du_h = kp * h_in.actual_derivative
    if robin_gamma is None:
        row0 = [du_j, du_h, 0j, 0j]
        rhs0 = neumann_datum
    elif abs(robin_gamma) > 1.0:
        row0 = [du_j / robin_gamma + j_in.actual, du_h / robin_gamma + h_in.actual, 0j, 0j]
        rhs0 = 0j
    else:
        row0 = [du_j + robin_gamma * j_in.actual, du_h + robin_gamma * h_in.actual, 0j, 0j]
        rhs0 = 0j
    rows = [
        row0,
        [j_s.actual, h_s.actual, -j_s.actual, -h_s.actual],
        [
            -kp * j_s.actual_derivative,
            -kp * h_s.actual_derivative,
            kp * j_s.actual_derivative,
            kp * h_s.actual_derivative,
        ],
        [0j, 0j, kp * j_o.actual_derivative, kp * h_o.actual_derivative],
    ]
    rhs = [rhs0, 0j, source, 0j]
    x, cond = _solve_linear(kind, rows, rhs)

    sol = ModalSolution(
        kind=kind,
        order=order,
        benchmark=b,
        shell_inner=(x[0], x[1]),
        shell_outer=(x[2], x[3]),
        conductor_amplitude=None,
        condition_number=cond,
        residuals={},
        ring_source=source,
    )
    res = _shell_residuals(sol)
    u_in, du_in = sol._eval(b.r_in)
    # backward-error scale: sum of the magnitudes of the terms being combined
    term_scale = abs(kp) * (abs(x[0] * j_in.actual_derivative) + abs(x[1] * h_in.actual_derivative))
    if robin_gamma is None:
        res["wall"] = _rel(abs(du_in - neumann_datum), term_scale + abs(neumann_datum))
    else:
        value_scale = abs(robin_gamma) * (abs(x[0] * j_in.actual) + abs(x[1] * h_in.actual))
        res["wall"] = _rel(abs(du_in + robin_gamma * u_in), term_scale + value_scale)
    sol = replace(sol, residuals=res)
    _check_residuals(sol)
    return sol


def solve_ibc(b: CylinderBenchmark, k: int) -> ModalSolution:
    """Impedance-reduced shell solve of order k in {0, 1, 2}."""
    gamma = robin_coefficient(k, b.mode, Surface.cylinder(b.r_in), b.cfg).gamma
    return _solve_shell(f"ibc{k}", k, b, gamma if k > 0 else None, 0j, b.source_amplitude)


def solve_ibc_with_gamma(b: CylinderBenchmark, gamma: complex) -> ModalSolution:
    """Shell solve with an explicitly prescribed Robin coefficient."""
    return _solve_shell("ibc-custom", None, b, gamma, 0j, b.source_amplitude)


def solve_expansion_term(b: CylinderBenchmark, j: int) -> ModalSolution:
    """Order-j expansion term; terms below j are solved first for their traces.

    Wall data in u'(r_in): 0 at order 0 (with the ring source), lam*u0(r_in)
    at order 1, lam*u1(r_in) - H*u0(r_in) at order 2.  lam does not depend on
    the permeability contrast, so the terms are contrast-independent.
    """
    if j not in (0, 1, 2):
        raise ValueError(f"expansion order must be 0, 1 or 2, got {j!r}")
    lam = b.params.lam
    curv = mean_curvature(Surface.cylinder(b.r_in))
    term0 = _solve_shell("expansion", 0, b, None, 0j, b.source_amplitude)
    if j == 0:
        return term0
    u0 = term0.u(b.r_in)
    term1 = _solve_shell("expansion", 1, b, None, lam * u0, 0j)
    if j == 1:
        return term1
    u1 = term1.u(b.r_in)
    datum2 = lam * u1 - curv * u0
    return _solve_shell("expansion", 2, b, None, datum2, 0j)


def truncated_expansion(b: CylinderBenchmark, order: int) -> ModalSolution:
    """Shell field of the eps-weighted sum of expansion terms up to ``order``."""
    eps = b.params.eps_small
    terms = [solve_expansion_term(b, j) for j in range(order + 1)]
    bi = sum(eps**j * t.shell_inner[0] for j, t in enumerate(terms))
    ci = sum(eps**j * t.shell_inner[1] for j, t in enumerate(terms))
    do = sum(eps**j * t.shell_outer[0] for j, t in enumerate(terms))
    eo = sum(eps**j * t.shell_outer[1] for j, t in enumerate(terms))
    return ModalSolution(
        kind="truncated",
        order=order,
        benchmark=b,
        shell_inner=(bi, ci),
        shell_outer=(do, eo),
        conductor_amplitude=None,
        condition_number=max(t.condition_number for t in terms),
        residuals={k: v for t in terms for k, v in t.residuals.items()},
        ring_source=terms[0].ring_source,
    )


@functools.lru_cache(maxsize=8)
def _gl_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _panel_integral(fn, a: float, b: float, order: int) -> float:
    x, w = _gl_rule(order)
    r = 0.5 * (b - a) * x + 0.5 * (a + b)
    return 0.5 * (b - a) * float(np.dot(w, fn(r)))


def _composite_integral(fn, a: float, b: float, rtol: float = 1e-12, max_panels: int = 64) -> float:
    """Panel-doubling composite Gauss rule until two refinements agree."""
    prev = None
    panels = 1
    while True:
        edges = np.linspace(a, b, panels + 1)
        val = sum(_panel_integral(fn, edges[i], edges[i + 1], 48) for i in range(panels))
        if prev is not None and abs(val - prev) <= rtol * max(abs(val), 1e-300):
            return val
        if panels >= max_panels:
            return val
        prev = val
        panels *= 2


@dataclass(frozen=True)
class ShellError:
    """Weighted-L2 field differences over the shell: electric, magnetic, their sum."""

    error_e: float
    error_h: float

    @property
    def total(self) -> float:
        return self.error_e + self.error_h


def shell_l2_error(a: ModalSolution, b: ModalSolution) -> ShellError:
    """Shell L2 norms of the field difference, split at the source ring.

    Uses coefficient differences over the shared radial basis, so the result
    is accurate even when the two solutions agree to many digits.  The
    magnetic part combines the azimuthal u'-component with the radial
    (m/r)*u component, both divided by omega*mu_plus.
    """
    ba, bb = a.benchmark, b.benchmark
    same = (
        ba.r_in == bb.r_in
        and ba.r_out == bb.r_out
        and ba.r_source == bb.r_source
        and abs(ba.mode) == abs(bb.mode)
        and abs(ba.k_plus - bb.k_plus) <= 1e-12 * abs(ba.k_plus)
    )
    if not same:
        raise SolverError("solutions live on different benchmarks; cannot compare")
    m = abs(ba.mode)
    kp = ba.k_plus
    omega_mu = ba.cfg.omega * ba.cfg.mu_plus

    def piece(coeff_a, coeff_b, lo, hi):
        db = coeff_a[0] - coeff_b[0]
        dc = coeff_a[1] - coeff_b[1]

        def basis(r_arr):
            vals = np.empty((2, len(r_arr)), dtype=complex)
            ders = np.empty((2, len(r_arr)), dtype=complex)
            for i, r in enumerate(r_arr):
                jv, hv = _eval_pair(m, kp * r)
                vals[0, i], vals[1, i] = jv.actual, hv.actual
                ders[0, i], ders[1, i] = kp * jv.actual_derivative, kp * hv.actual_derivative
            return vals, ders

        def e_density(r_arr):
            vals, _ = basis(r_arr)
            du = db * vals[0] + dc * vals[1]
            return (np.abs(du) ** 2) * r_arr

        def h_density(r_arr):
            vals, ders = basis(r_arr)
            du = db * vals[0] + dc * vals[1]
            ddu = db * ders[0] + dc * ders[1]
            dens = np.abs(ddu) ** 2 + (m / r_arr) ** 2 * np.abs(du) ** 2
            return dens * r_arr

        return (
            _composite_integral(e_density, lo, hi),
            _composite_integral(h_density, lo, hi),
        )

    e_sq_in, h_sq_in = piece(a.shell_inner, b.shell_inner, ba.r_in, ba.r_source)
    e_sq_out, h_sq_out = piece(a.shell_outer, b.shell_outer, ba.r_source, ba.r_out)
    return ShellError(
        error_e=math.sqrt(e_sq_in + e_sq_out),
        error_h=math.sqrt(h_sq_in + h_sq_out) / omega_mu,
    )


def shell_l2_norm(sol: ModalSolution) -> float:
    """Weighted-L2 norm of the solution's own electric field over the shell."""
    zero = ModalSolution(
        kind="zero",
        order=None,
        benchmark=sol.benchmark,
        shell_inner=(0j, 0j),
        shell_outer=(0j, 0j),
        conductor_amplitude=None,
        condition_number=1.0,
        residuals={"wall": 0.0},
        ring_source=0j,
    )
    return shell_l2_error(sol, zero).error_e


def conductor_l2_norm(sol: ModalSolution, rtol: float = 1e-10) -> float:
    """L2 norm of the conductor field, resolved on a layer-graded radial mesh.

    The integrand concentrates in a depth of order eps below the interface, so
    the panels are geometrically refined toward r_in.
    """
    if sol.conductor_amplitude is None:
        raise SolverError(f"{sol.kind} solution has no conductor region")
    b = sol.benchmark
    dp = b.params
    tau = dp.eps_small / (2.0 * dp.lam.real)

    def density(r_arr):
        out = np.empty(len(r_arr))
        for i, r in enumerate(r_arr):
            out[i] = abs(sol.u(float(r))) ** 2 * r
        return out

    edges = [b.r_in]
    depth = tau
    while depth < b.r_in:
        edges.append(b.r_in - depth)
        depth *= 2.0
    edges.append(0.0)
    total = 0.0
    for lo, hi in zip(edges[1:], edges[:-1]):
        part = _composite_integral(density, lo, hi, rtol=rtol, max_panels=8)
        total += part
        if part <= 1e-16 * total:  # exponentially decaying tail; rest is negligible
            break
    return math.sqrt(total)


@dataclass(frozen=True)
class ConvergenceFit:
    """Least-squares power fit of error against a model parameter, in log-log."""

    points: tuple[tuple[float, float], ...]
    slope: float
    intercept: float
    r_squared: float
    local_slopes: tuple[float, ...]

    @property
    def conclusive(self) -> bool:
        return self.r_squared >= 0.98


def fit_convergence(points: list[tuple[float, float]]) -> ConvergenceFit:
    """Fit log(error) = slope*log(x) + intercept; needs >= 4 points over >= 2 decades."""
    if len(points) < 4:
        raise ValueError(f"need at least 4 points for a rate fit, got {len(points)}")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    if any(x <= 0 for x in xs) or any(y <= 0 for y in ys):
        raise ValueError("rate fits need strictly positive abscissae and errors")
    if max(xs) / min(xs) < 99.9:
        raise ValueError("rate fit abscissae must span at least two decades")
    lx = np.log(xs)
    ly = np.log(ys)
    slope, intercept = np.polyfit(lx, ly, 1)
    pred = slope * lx + intercept
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - np.mean(ly)) ** 2))
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    order = np.argsort(lx)
    local = tuple(
        float((ly[order[i + 1]] - ly[order[i]]) / (lx[order[i + 1]] - lx[order[i]]))
        for i in range(len(points) - 1)
    )
    return ConvergenceFit(
        points=tuple(sorted(points)),
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        local_slopes=local,
    )


def convergence_study(
    b0: CylinderBenchmark, family: str, order: int, eps_list: list[float]
) -> ConvergenceFit:
    """Error-vs-eps rate fit for one reduced-model family on one mode.

    family "ibc" compares the impedance model of the given order against the
    exact solution; family "expansion" compares the truncated expansion.  The
    fit is per mode; errors must decrease monotonically with eps or the sweep
    is rejected with a diagnostic.
    """
    if family not in ("ibc", "expansion"):
        raise ValueError(f"unknown study family {family!r}")
    if len(eps_list) < 5:
        raise ValueError("eps sweep needs at least 5 points")
    eps_sorted = sorted(float(e) for e in eps_list)
    if eps_sorted[0] <= 0 or eps_sorted[-1] >= 1:
        raise ValueError("eps values must lie in (0, 1)")
    points = []
    for eps in eps_sorted:
        bench = b0.with_eps(eps)
        exact = solve_exact(bench)
        model = solve_ibc(bench, order) if family == "ibc" else truncated_expansion(bench, order)
        points.append((eps, shell_l2_error(exact, model).total))
    require_decreasing_errors(points, f"{family} order {order}")
    return fit_convergence(points)


def require_decreasing_errors(points: list[tuple[float, float]], label: str) -> None:
    """Reject a sweep whose error fails to shrink as the parameter shrinks."""
    for (_, err0), (_, err1) in zip(points, points[1:]):
        if err1 <= err0:
            table = ", ".join(f"eps={e:.3e}: err={v:.6e}" for e, v in points)
            raise ConvergenceError(f"errors do not decrease with eps for {label}: {table}")


@dataclass(frozen=True)
class PlaneBenchmark:
    """Flat-interface analogue: conductor x < 0, shell 0 < x < thickness."""

    thickness: float
    x_source: float
    cfg: PhysicalConfig
    source_amplitude: complex = 1.0 + 0j

    def __post_init__(self) -> None:
        if not (0.0 < self.x_source < self.thickness):
            raise ValueError("need 0 < x_source < thickness")

    @functools.cached_property
    def params(self) -> DerivedParams:
        return derive_params(self.cfg)


@dataclass(frozen=True)
class PlaneSolution:
    """Exact one-dimensional transmission solution at normal incidence."""

    benchmark: PlaneBenchmark
    conductor_amplitude: complex
    shell_inner: tuple[complex, complex]
    shell_outer: tuple[complex, complex]
    k_plus: complex
    k_minus: complex
    residuals: dict[str, float]

    def u(self, x: float) -> complex:
        if x <= 0:
            return self.conductor_amplitude * cmath.exp(-1j * self.k_minus * x)
        coeff = self.shell_inner if x <= self.benchmark.x_source else self.shell_outer
        return coeff[0] * cmath.exp(1j * self.k_plus * x) + coeff[1] * cmath.exp(
            -1j * self.k_plus * x
        )


def solve_plane_exact(b: PlaneBenchmark) -> PlaneSolution:
    """Solve the plane-layer transmission problem (normal incidence only)."""
    dp = b.params
    kp = dp.kappa_plus * cmath.sqrt(dp.alpha_plus)
    km = dp.kappa_plus * cmath.sqrt(dp.alpha_minus) / dp.eps_small
    cfg = b.cfg
    ep = lambda x: cmath.exp(1j * kp * x)
    em = lambda x: cmath.exp(-1j * kp * x)
    xs, L = b.x_source, b.thickness
    rows = [
        [1.0 + 0j, -1.0 + 0j, -1.0 + 0j, 0j, 0j],
        [-1j * km / cfg.mu_minus, -1j * kp / cfg.mu_plus, 1j * kp / cfg.mu_plus, 0j, 0j],
        [0j, ep(xs), em(xs), -ep(xs), -em(xs)],
        [0j, -1j * kp * ep(xs), 1j * kp * em(xs), 1j * kp * ep(xs), -1j * kp * em(xs)],
        [0j, 0j, 0j, 1j * kp * ep(L), -1j * kp * em(L)],
    ]
    rhs = [0j, 0j, 0j, b.source_amplitude, 0j]
    x, _ = _solve_linear("plane", rows, rhs)
    sol = PlaneSolution(
        benchmark=b,
        conductor_amplitude=x[0],
        shell_inner=(x[1], x[2]),
        shell_outer=(x[3], x[4]),
        k_plus=kp,
        k_minus=km,
        residuals={},
    )
    du = lambda x_, c: 1j * kp * (c[0] * ep(x_) - c[1] * em(x_))
    res = {
        "interface_u": _rel(
            abs(sol.u(0.0) - (x[1] + x[2])), max(abs(sol.u(0.0)), abs(x[1] + x[2]))
        ),
        "interface_flux": _rel(
            abs(-1j * km * x[0] / cfg.mu_minus - du(0.0, sol.shell_inner) / cfg.mu_plus),
            max(abs(km * x[0]) / cfg.mu_minus, abs(du(0.0, sol.shell_inner)) / cfg.mu_plus),
        ),
        "source_jump": _rel(
            abs(du(xs, sol.shell_outer) - du(xs, sol.shell_inner) - b.source_amplitude),
            max(abs(du(xs, sol.shell_inner)), abs(b.source_amplitude)),
        ),
        "outer_flux": _rel(
            abs(du(L, sol.shell_outer)),
            abs(kp) * (abs(x[3] * ep(L)) + abs(x[4] * em(L))),
        ),
    }
    object.__setattr__(sol, "residuals", res)
    worst = max(res.values())
    if not (worst <= RESIDUAL_TOL):
        raise SolverError(f"plane solve violated its conditions: residuals {res}")
    return sol
