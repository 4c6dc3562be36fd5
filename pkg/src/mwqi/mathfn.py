"""Special functions with tested accuracy claims.

Everything here is scalar float math: Laguerre polynomials, the terminating
Gauss hypergeometric sum, the confluent 1F1(n+1; 1; z) via the Laguerre
identity, erfc / erfc_inv, and a few log-space helpers.  All heavy lifting
that can overflow (Laguerre at large negative argument, long hypergeometric
sums) has a log-space path.  Accuracy claims live in ``ACCURACY`` and are
enforced by the test suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import NumericsError, ValidationError

_LOG_RESCALE = 250.0 * math.log(10.0)  # shift applied when a recurrence nears overflow
_RESCALE_AT = 1e250

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class AccuracySpec:
    """Tested accuracy claim for one public function."""
    abs_tol: float
    rel_tol: float
    domain: str


ACCURACY = {
    "laguerre": AccuracySpec(0.0, 1e-10, "n <= 200, |x| <= 50, vs direct series"),
    "log_laguerre_neg": AccuracySpec(0.0, 1e-12, "n <= 500, y in [0, 1e4], vs series log-sum"),
    "gauss_2f1_terminating": AccuracySpec(0.0, 5e-13, "terminating sums, random points vs mpmath"),
    "kummer_1f1_poslike": AccuracySpec(0.0, 1e-12, "n <= 50, |z| <= 30, vs direct series"),
    "erfc": AccuracySpec(0.0, 1e-14, "x in [-6, 27], stdlib erfc"),
    "erfc_inv": AccuracySpec(0.0, 1e-12, "roundtrip on x in [-5, 5] and p down to 1e-280"),
    "lgamma": AccuracySpec(0.0, 1e-14, "x > 0, stdlib lgamma"),
}


def erfc(x: float) -> float:
    """Complementary error function (stdlib wrapper, kept for a single call site)."""
    return math.erfc(x)


def lgamma(x: float) -> float:
    return math.lgamma(x)


def pow1p(z: float, power: float) -> float:
    """(1 + z)**power via exp(power * log1p(z)); stable for |z| << 1, huge powers."""
    return math.exp(power * math.log1p(z))


def log1p_power(z: float, power: float) -> float:
    """power * log1p(z)."""
    return power * math.log1p(z)


def stirling_correction(m: float) -> float:
    """lgamma(m) - [(m - 1/2) log m - m + log(2 pi)/2], asymptotic series.

    Accurate to ~1e-13 absolute for m >= 10; used to evaluate gamma-family
    log densities at shape parameters where lgamma's absolute error
    (ulp of a value ~m log m) would dominate small exponents.
    """
    m2 = 1.0 / (m * m)
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - m2 / 1680.0) * m2) * m2) / m


# Acklam's rational approximation to the standard normal quantile.
_ACK_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
          1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_ACK_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
          6.680131188771972e+01, -1.328068155288572e+01)
_ACK_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
          -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_ACK_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
          3.754408661907416e+00)


def _probit_seed(q: float) -> float:
    # Acklam's probit, ~1.2e-9 relative; refined by Newton in erfc_inv.
    if q < 0.02425:
        u = math.sqrt(-2.0 * math.log(q))
        a, b, c, d, e, f = _ACK_C
        num = ((((a * u + b) * u + c) * u + d) * u + e) * u + f
        den = (((_ACK_D[0] * u + _ACK_D[1]) * u + _ACK_D[2]) * u + _ACK_D[3]) * u + 1.0
        return num / den
    if q <= 0.97575:
        u = q - 0.5
        r = u * u
        a, b, c, d, e, f = _ACK_A
        num = (((((a * r + b) * r + c) * r + d) * r + e) * r + f) * u
        den = ((((_ACK_B[0] * r + _ACK_B[1]) * r + _ACK_B[2]) * r + _ACK_B[3]) * r + _ACK_B[4]) * r + 1.0
        return num / den
    return -_probit_seed(1.0 - q)


def erfc_inv(p: float) -> float:
    """Inverse of erfc on (0, 2), rational seed plus two Newton refinements."""
    if not 0.0 < p < 2.0:
        raise ValidationError(f"erfc_inv requires p in (0, 2), got {p}")
    if p == 1.0:
        return 0.0
    x = -_probit_seed(0.5 * p) / math.sqrt(2.0)
    # Newton on f(x) = erfc(x) - p; f'(x) = -2 exp(-x^2)/sqrt(pi).
    half_sqrt_pi = 0.5 * math.sqrt(math.pi)
    for _ in range(2):
        x += (math.erfc(x) - p) * half_sqrt_pi * math.exp(x * x)
    return x


def laguerre(n: int, x: float) -> float:
    """Laguerre polynomial L_n(x) by the three-term recurrence with rescaling."""
    if n < 0:
        raise ValidationError("laguerre order must be >= 0")
    if n == 0:
        return 1.0
    prev, cur = 1.0, 1.0 - x
    offset = 0.0
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0)
        m = max(abs(prev), abs(cur))
        if m > _RESCALE_AT:
            prev /= _RESCALE_AT
            cur /= _RESCALE_AT
            offset += _LOG_RESCALE
    if offset == 0.0:
        return cur
    if offset > 700.0:
        return math.copysign(math.inf, cur)
    return cur * math.exp(offset)


def log_laguerre_neg_all(n_max: int, y: float) -> list[float]:
    """log L_n(-y) for n = 0..n_max and y >= 0 (all values positive).

    The recurrence at negative argument mixes positive terms with one bounded
    subtraction, so relative error grows only like n ulps.
    """
    if y < 0.0:
        raise ValidationError("log_laguerre_neg_all requires y >= 0")
    if n_max < 0:
        raise ValidationError("order must be >= 0")
    out = [0.0] * (n_max + 1)
    if n_max == 0:
        return out
    prev, cur = 1.0, 1.0 + y
    offset = 0.0
    out[1] = math.log(cur)
    for k in range(1, n_max):
        prev, cur = cur, ((2.0 * k + 1.0 + y) * cur - k * prev) / (k + 1.0)
        if cur > _RESCALE_AT:
            prev /= _RESCALE_AT
            cur /= _RESCALE_AT
            offset += _LOG_RESCALE
        out[k + 1] = math.log(cur) + offset
    return out


def log_laguerre_neg(n: int, y: float) -> float:
    """log L_n(-y), y >= 0."""
    return log_laguerre_neg_all(n, y)[n]


def gauss_2f1_terminating(a: float, n: int, c: float, z: float) -> float:
    """2F1(a, -n; c; z) for nonnegative integer n, as the exact finite sum.

    Terms are accumulated with Neumaier compensation.  When the sum has only
    positive terms (z <= 0 with a, c > 0) and threatens to overflow, the
    log-space path is used instead.
    """
    if n < 0 or int(n) != n:
        raise ValidationError("second parameter must be -n with n a nonnegative integer")
    n = int(n)
    if n == 0 or z == 0.0:
        return 1.0
    total = 1.0
    comp = 0.0
    term = 1.0
    for k in range(n):
        term *= (a + k) * (-(n - k)) * z / ((c + k) * (k + 1.0))
        if abs(term) > 1e280:
            if z <= 0.0 and a > 0.0 and c > 0.0:
                return math.exp(log_gauss_2f1_neg_z(a, n, c, z))
            raise NumericsError_overflow(a, n, c, z)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp


def NumericsError_overflow(a, n, c, z):
    from .exceptions import NumericsError
    return NumericsError(f"2F1 terminating sum overflows in linear space for "
                         f"(a={a}, n={n}, c={c}, z={z}) with alternating terms")


def log_gauss_2f1_neg_z(a: float, n: int, c: float, z: float) -> float:
    """log 2F1(a, -n; c; z) for z <= 0, a, c > 0: every term is positive.

    Streaming log-sum-exp over the n+1 terms; exact in structure, no
    cancellation, safe for a ~ 1e9.
    """
    if z > 0.0:
        raise ValidationError("log path requires z <= 0")
    if n == 0 or z == 0.0:
        return 0.0
    log_abs_z = math.log(-z)
    lt = 0.0
    running_max = 0.0
    acc = 1.0  # sum of exp(lt - running_max)
    for k in range(1, n + 1):
        lt += math.log(a + k - 1.0) + math.log(n - k + 1.0) + log_abs_z \
            - math.log(c + k - 1.0) - math.log(k)
        if lt > running_max:
            acc = acc * math.exp(running_max - lt) + 1.0
            running_max = lt
        else:
            acc += math.exp(lt - running_max)
    return running_max + math.log(acc)


def kummer_1f1_poslike(n_plus_1: int, z: float) -> float:
    """1F1(n+1; 1; z) through the identity 1F1(n+1; 1; z) = e^z L_n(-z)."""
    n = int(n_plus_1) - 1
    if n < 0:
        raise ValidationError("first parameter must be n+1 with n >= 0")
    return math.exp(log_kummer_1f1_poslike(n_plus_1, z))


def log_kummer_1f1_poslike(n_plus_1: int, z: float) -> float:
    """log 1F1(n+1; 1; z); requires z >= 0 where the function is positive."""
    n = int(n_plus_1) - 1
    if n < 0:
        raise ValidationError("first parameter must be n+1 with n >= 0")
    if z < 0.0:
        raise ValidationError("log path requires z >= 0")
    return z + log_laguerre_neg(n, z)
