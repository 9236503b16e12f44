"""Complex-argument cylinder functions J_m, Y_m, H^(1)_m with derivatives.

Self-contained implementation (no external special-function dependency) for
integer orders 0 <= m <= 200 and arguments with |arg z| <= pi/2:

* ascending series for |z| <= 12 (J directly at the target order, Y from
  order-0/1 seeds plus forward recurrence);
* Hankel large-argument expansions for the order-0/1 seeds beyond that radius,
  with the oscillatory exponential exp(+-iz) factored out;
* backward (Miller) recurrence for J at moderate arguments and large orders,
  normalised through the cross-product with the Hankel seeds (the exact
  analogue of Wronskian normalisation, immune to the exponential growth of J
  and Y at large |Im z|);
* forward recurrence for Y and H^(1), which are dominant as the order grows.

Values whose natural size is exponential are returned in scaled form
``value * exp(exponent)`` with the complex ``exponent`` recorded, so ratios
and cross-products of scaled evaluations are exact.  Scaling kicks in
automatically when |Im z| > 30 or when the order regime would over/underflow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

SERIES_RADIUS = 12.0
SCALE_IM_THRESHOLD = 30.0
MAX_ORDER = 200

_EULER_GAMMA = 0.5772156649015328606
_RESCALE = 1e250
_LOG_RESCALE = math.log(_RESCALE)


class BesselDomainError(ValueError):
    """Raised for arguments/orders outside the supported domain."""


@dataclass(frozen=True)
class BesselEval:
    """One cylinder-function evaluation, possibly exponentially scaled.

    The true function value is ``value * exp(exponent)`` and the true
    derivative is ``derivative * exp(exponent)``; ``exponent == 0`` means the
    evaluation is unscaled.
    """

    order: int
    argument: complex
    value: complex
    derivative: complex
    exponent: complex = 0j

    @property
    def is_scaled(self) -> bool:
        return self.exponent != 0

    @property
    def actual(self) -> complex:
        return self.value * cmath.exp(self.exponent)

    @property
    def actual_derivative(self) -> complex:
        return self.derivative * cmath.exp(self.exponent)


def _validate(m: int, z: complex, singular: bool) -> complex:
    if not isinstance(m, int) or m < 0 or m > MAX_ORDER:
        raise BesselDomainError(f"order must be an integer in [0, {MAX_ORDER}], got {m!r}")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise BesselDomainError(f"argument must be finite, got {z!r}")
    if z == 0:
        if singular:
            raise BesselDomainError("z = 0 is a pole of Y_m / H_m")
        return z
    if z.real < 0.0:
        raise BesselDomainError(f"argument must satisfy |arg z| <= pi/2, got {z!r}")
    return z


def _j_series(m: int, z: complex) -> tuple[complex, complex]:
    """Ascending series; returns (s, E) with J_m(z) = s * exp(E)."""
    E = m * cmath.log(0.5 * z) - math.lgamma(m + 1) if m else 0j
    w = -0.25 * z * z
    term = 1.0 + 0j
    s = term
    for k in range(1, 400):
        term *= w / (k * (m + k))
        s += term
        if abs(term) < 1e-18 * abs(s):
            break
    return s, E


def _hankel_asymptotic(m: int, z: complex, kind: int) -> tuple[complex, complex]:
    """Large-argument expansion of H^(kind)_m; returns (value, exponent).

    H^(1)_m = value * exp(+iz), H^(2)_m = value * exp(-iz).  Truncated at the
    smallest term; intended for |z| > SERIES_RADIUS and 4m^2 modest against |z|.
    """
    sgn = 1.0 if kind == 1 else -1.0
    mu = 4.0 * m * m
    t = 1.0 + 0j
    s = t
    prev = abs(t)
    for k in range(90):
        t = t * ((mu - (2 * k + 1) ** 2) / (8.0 * (k + 1) * z)) * (1j * sgn)
        if abs(t) >= prev:
            break
        s += t
        prev = abs(t)
        if prev < 1e-17 * abs(s):
            break
    pref = cmath.sqrt(2.0 / (math.pi * z)) * cmath.exp(-1j * sgn * (0.5 * m + 0.25) * math.pi)
    return pref * s, 1j * sgn * z


def _j_from_hankel(m: int, z: complex) -> tuple[complex, complex]:
    """J_m = (H1_m + H2_m)/2 combined on the dominant side's exponent."""
    h1v, e1 = _hankel_asymptotic(m, z, 1)
    h2v, e2 = _hankel_asymptotic(m, z, 2)
    if z.imag >= 0:
        return 0.5 * (h2v + h1v * cmath.exp(e1 - e2)), e2
    return 0.5 * (h1v + h2v * cmath.exp(e2 - e1)), e1


def _y_from_hankel(m: int, z: complex) -> tuple[complex, complex]:
    """Y_m = (H1_m - H2_m)/(2i) combined on the dominant side's exponent."""
    h1v, e1 = _hankel_asymptotic(m, z, 1)
    h2v, e2 = _hankel_asymptotic(m, z, 2)
    if z.imag >= 0:
        return (h1v * cmath.exp(e1 - e2) - h2v) / 2j, e2
    return (h1v - h2v * cmath.exp(e2 - e1)) / 2j, e1


def _harmonic(n: int) -> float:
    return sum(1.0 / k for k in range(1, n + 1))


def _y01_series(z: complex) -> tuple[complex, complex]:
    """Series evaluation of (Y_0, Y_1) for |z| <= SERIES_RADIUS."""
    j0 = _j_series(0, z)[0]
    s1, e1 = _j_series(1, z)
    j1 = s1 * cmath.exp(e1)
    lg = cmath.log(0.5 * z) + _EULER_GAMMA

    w = 0.25 * z * z
    term = 1.0 + 0j
    acc0 = 0j
    for k in range(1, 400):
        term *= w / (k * k)
        contrib = ((-1) ** (k + 1)) * _harmonic(k) * term
        acc0 += contrib
        if abs(term) * (math.log(k + 1) + 1.0) < 1e-18 * max(1.0, abs(acc0)):
            break
    y0 = (2.0 / math.pi) * (lg * j0 + acc0)

    term = 1.0 + 0j
    acc1 = (_harmonic(0) + _harmonic(1)) * term
    for k in range(1, 400):
        term *= -w / (k * (k + 1))
        contrib = (_harmonic(k) + _harmonic(k + 1)) * term
        acc1 += contrib
        if abs(contrib) < 1e-18 * max(1.0, abs(acc1)):
            break
    y1 = (2.0 / math.pi) * (lg * j1 - 1.0 / z) - (z / (2.0 * math.pi)) * acc1
    return y0, y1


def _ascend(c0: complex, c1: complex, z: complex, m: int) -> tuple[complex, complex, float]:
    """Forward recurrence from orders (0, 1) to (m-1, m); returns extra real log scale."""
    extra = 0.0
    prev, cur = c0, c1
    for k in range(1, m):
        prev, cur = cur, (2.0 * k / z) * cur - prev
        mag = max(abs(prev.real), abs(prev.imag), abs(cur.real), abs(cur.imag))
        if mag > _RESCALE:
            prev /= _RESCALE
            cur /= _RESCALE
            extra += _LOG_RESCALE
    return prev, cur, extra


def _miller_pass(m: int, z: complex, start: int) -> tuple[complex, complex, complex, complex]:
    """Raw downward recurrence from ``start``; returns (f0, f1, fm, fm1) on one scale."""
    f_next = 0j
    f = 1e-30 + 0j
    fm = fm1 = None
    rescales = 0
    marks = [0, 0]
    for k in range(start, 0, -1):
        f_prev = (2.0 * k / z) * f - f_next
        f_next, f = f, f_prev
        # f is now the raw value at order k-1, f_next at order k
        if k - 1 == m + 1:
            fm1, marks[1] = f, rescales
        if k - 1 == m:
            fm, marks[0] = f, rescales
        mag = max(abs(f.real), abs(f.imag))
        if mag > _RESCALE:
            f /= _RESCALE
            f_next /= _RESCALE
            rescales += 1
    f0, f1 = f, f_next
    if fm is None:  # start <= m cannot happen by construction
        raise AssertionError("miller start index below target order")
    fm = fm * _RESCALE ** -(rescales - marks[0])
    fm1 = fm1 * _RESCALE ** -(rescales - marks[1])
    return f0, f1, fm, fm1


def _miller_j(m: int, z: complex) -> tuple[complex, complex, complex]:
    """(J_m, J_{m+1}, exponent) by backward recurrence, Hankel-anchored."""
    if z.imag >= 0:
        h0v, he = _hankel_asymptotic(0, z, 1)
        h1v, _ = _hankel_asymptotic(1, z, 1)
        target = 2j / (math.pi * z)
    else:
        h0v, he = _hankel_asymptotic(0, z, 2)
        h1v, _ = _hankel_asymptotic(1, z, 2)
        target = -2j / (math.pi * z)
    jexp = -he

    start = max(m + 2, int(1.36 * abs(z)) + 2) + 20
    last = None
    for _ in range(8):
        f0, f1, fm, fm1 = _miller_pass(m, z, start)
        denom = f1 * h0v - f0 * h1v
        cv = target / denom
        jm, jm1 = cv * fm, cv * fm1
        if last is not None:
            ok = abs(jm - last[0]) <= 1e-13 * abs(jm) and abs(jm1 - last[1]) <= 1e-13 * max(
                abs(jm1), abs(jm)
            )
            if ok:
                return jm, jm1, jexp
        last = (jm, jm1)
        start += 24
    return last[0], last[1], jexp


def _maybe_fold(
    m: int, z: complex, value: complex, derivative: complex, exponent: complex
) -> BesselEval:
    """Fold the exponent into the values when that cannot over/underflow."""
    if exponent == 0:
        return BesselEval(m, z, value, derivative, 0j)
    if abs(z.imag) <= SCALE_IM_THRESHOLD and abs(exponent.real) <= 200.0:
        f = cmath.exp(exponent)
        return BesselEval(m, z, value * f, derivative * f, 0j)
    return BesselEval(m, z, value, derivative, exponent)


def bessel_j(m: int, z: complex) -> BesselEval:
    """Bessel function of the first kind J_m(z) and its derivative."""
    z = _validate(m, z, singular=False)
    if z == 0:
        val = 1.0 + 0j if m == 0 else 0j
        der = 0.5 + 0j if m == 1 else 0j
        return BesselEval(m, z, val, der, 0j)

    if abs(z) <= SERIES_RADIUS:
        vm, em = _j_series(m, z)
        vm1, em1 = _j_series(m + 1, z)
        vm1_aligned = vm1 * cmath.exp(em1 - em)
        deriv = (m / z) * vm - vm1_aligned
        return _maybe_fold(m, z, vm, deriv, em)

    if m + 1 <= max(1, int(0.5 * math.sqrt(abs(z)))):
        vm, em = _j_from_hankel(m, z)
        vm1, _ = _j_from_hankel(m + 1, z)
        deriv = (m / z) * vm - vm1
        return _maybe_fold(m, z, vm, deriv, em)

    jm, jm1, jexp = _miller_j(m, z)
    deriv = (m / z) * jm - jm1
    return _maybe_fold(m, z, jm, deriv, jexp)


_WEDGE_IM = 4.0


def _k01_scaled(w: complex) -> tuple[complex, complex]:
    """exp(w)*K_0(w) and exp(w)*K_1(w) for Re w >= _WEDGE_IM.

    Trapezoid rule on the even integrand exp(-w(cosh t - 1))*cosh(nu*t);
    spectrally accurate, halving the step until two levels agree.
    """
    T = math.acosh(1.0 + 45.0 / w.real)
    best: tuple[complex, complex] | None = None
    h = 0.1
    for _ in range(6):
        n = int(math.ceil(T / h))
        s0 = 0.5 + 0j
        s1 = 0.5 + 0j
        for i in range(1, n + 1):
            c = math.cosh(i * h)
            g = cmath.exp(-w * (c - 1.0))
            s0 += g
            s1 += g * c
        k0, k1 = h * s0, h * s1
        if (
            best is not None
            and abs(k0 - best[0]) <= 1e-15 * abs(k0)
            and abs(k1 - best[1]) <= 1e-15 * abs(k1)
        ):
            return k0, k1
        best = (k0, k1)
        h *= 0.5
    return best


def _h1_seeds_via_k(z: complex) -> tuple[complex, complex]:
    """(H1_0, H1_1) scaled by exp(+iz), for Im z > 0, via K_nu(-iz).

    Gives the subdominant Hankel seeds at moderate |z| where the J + iY
    assembly would cancel exp(2*Im z) digits.
    """
    k0, k1 = _k01_scaled(-1j * z)
    return (-2j / math.pi) * k0, (-2.0 / math.pi) * k1


def _h1_eval(m: int, z: complex) -> tuple[complex, complex, complex]:
    """(value, derivative, exponent) of H^(1)_m, unfolded, for Im z > _WEDGE_IM or |z| > series radius."""
    if z.imag >= 0:
        if abs(z) <= SERIES_RADIUS:
            h0, h1v = _h1_seeds_via_k(z)
            e0 = 1j * z
        else:
            h0, e0 = _hankel_asymptotic(0, z, 1)
            h1v, _ = _hankel_asymptotic(1, z, 1)
        if m == 0:
            return h0, -h1v, e0
        prev, cur, extra = _ascend(h0, h1v, z, m)
        return cur, prev - (m / z) * cur, e0 + extra
    jv = bessel_j(m, z)
    h2 = _h2_eval(m, z)
    jval, jder, h2val, h2der, exponent = _align((jv.value, jv.derivative, jv.exponent), h2)
    return 2.0 * jval - h2val, 2.0 * jder - h2der, exponent


def _h2_eval(m: int, z: complex) -> tuple[complex, complex, complex]:
    """(value, derivative, exponent) of H^(2)_m, unfolded; mirror of _h1_eval."""
    if z.imag <= 0:
        if abs(z) <= SERIES_RADIUS:
            s0, s1 = _h1_seeds_via_k(z.conjugate())
            h0, h1v = s0.conjugate(), s1.conjugate()
            e0 = -1j * z
        else:
            h0, e0 = _hankel_asymptotic(0, z, 2)
            h1v, _ = _hankel_asymptotic(1, z, 2)
        if m == 0:
            return h0, -h1v, e0
        prev, cur, extra = _ascend(h0, h1v, z, m)
        return cur, prev - (m / z) * cur, e0 + extra
    jv = bessel_j(m, z)
    h1 = _h1_eval(m, z)
    jval, jder, h1val, h1der, exponent = _align((jv.value, jv.derivative, jv.exponent), h1)
    return 2.0 * jval - h1val, 2.0 * jder - h1der, exponent


def bessel_y(m: int, z: complex) -> BesselEval:
    """Bessel function of the second kind Y_m(z) and its derivative.

    Away from the real axis Y_m is assembled as (H1_m - J_m)/i; ascending Y
    itself by forward recurrence is unstable for complex z near the
    order-argument transition, where |Y_k| dips by exp(2|Im z|).
    """
    z = _validate(m, z, singular=True)
    if abs(z) <= SERIES_RADIUS and abs(z.imag) <= _WEDGE_IM:
        y0, y1 = _y01_series(z)
        if m == 0:
            return _maybe_fold(0, z, y0, -y1, 0j)
        prev, cur, extra = _ascend(y0, y1, z, m)
        deriv = prev - (m / z) * cur
        return _maybe_fold(m, z, cur, deriv, complex(extra))
    jv = bessel_j(m, z)
    hval, hder, hexp = _h1_eval(m, z)
    jval, jder, hval, hder, exponent = _align((jv.value, jv.derivative, jv.exponent), (hval, hder, hexp))
    value = (hval - jval) / 1j
    deriv = (hder - jder) / 1j
    return _maybe_fold(m, z, value, deriv, exponent)


def _align(
    a: tuple[complex, complex, complex], b: tuple[complex, complex, complex]
) -> tuple[complex, complex, complex, complex, complex]:
    """Bring two scaled (value, derivative, exponent) triples to one exponent."""
    if a[2].real >= b[2].real:
        f = cmath.exp(b[2] - a[2])
        return a[0], a[1], b[0] * f, b[1] * f, a[2]
    f = cmath.exp(a[2] - b[2])
    return a[0] * f, a[1] * f, b[0], b[1], b[2]


def bessel_h1(m: int, z: complex) -> BesselEval:
    """Hankel function of the first kind H^(1)_m(z) and its derivative."""
    z = _validate(m, z, singular=True)
    if abs(z) <= SERIES_RADIUS and abs(z.imag) <= _WEDGE_IM:
        jv = bessel_j(m, z)
        yv = bessel_y(m, z)
        f = cmath.exp(jv.exponent - yv.exponent)
        value = jv.value * f + 1j * yv.value
        deriv = jv.derivative * f + 1j * yv.derivative
        return _maybe_fold(m, z, value, deriv, yv.exponent)
    value, deriv, exponent = _h1_eval(m, z)
    return _maybe_fold(m, z, value, deriv, exponent)


def _bessel_h2(m: int, z: complex) -> BesselEval:
    """Hankel function of the second kind (internal; mirror image of H^(1))."""
    z = _validate(m, z, singular=True)
    if abs(z) <= SERIES_RADIUS and abs(z.imag) <= _WEDGE_IM:
        jv = bessel_j(m, z)
        yv = bessel_y(m, z)
        f = cmath.exp(jv.exponent - yv.exponent)
        value = jv.value * f - 1j * yv.value
        deriv = jv.derivative * f - 1j * yv.derivative
        return _maybe_fold(m, z, value, deriv, yv.exponent)
    value, deriv, exponent = _h2_eval(m, z)
    return _maybe_fold(m, z, value, deriv, exponent)


def wronskian_jh1(m: int, z: complex) -> complex:
    """J_m*H1_m' - J_m'*H1_m, evaluated with exponents combined exactly.

    Equals 2i/(pi*z) identically.  The cross-product is formed from the pair
    whose exponential scalings cancel: (J, H1) in the closed upper half plane,
    (J, H2) below it (there W{J,H1} = -W{J,H2} since H1 = 2J - H2).
    """
    jv = bessel_j(m, z)
    if complex(z).imag >= 0:
        hv = bessel_h1(m, z)
        cross = jv.value * hv.derivative - jv.derivative * hv.value
    else:
        hv = _bessel_h2(m, z)
        cross = -(jv.value * hv.derivative - jv.derivative * hv.value)
    return cross * cmath.exp(jv.exponent + hv.exponent)


def wronskian_jy(m: int, z: complex) -> complex:
    """J_m*Y_m' - J_m'*Y_m, equal to 2/(pi*z).

    Evaluated through the J/H^(1) cross-product (W{J,Y} = W{J,H1}/i), which is
    the numerically faithful factorisation: forming the J,Y products directly
    at large |Im z| would cancel ~exp(2*Im z) leading digits.
    """
    return wronskian_jh1(m, z) / 1j
