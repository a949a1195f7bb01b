"""Integer-order Bessel functions of the first kind and the root families
entering the half-disk spectra: zeros of J_l' and of alpha*J_l(r) + r*J_l'(r).

Everything is self-contained (ascending series plus normalized backward
recurrence), deterministic, and accurate to ~1e-12 absolute on x in [0, 200].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BracketError, DomainError

# Scan step for locating sign changes; consecutive roots of the families
# handled here are separated by much more than this.
_SCAN_STEP = 0.2
_BISECT_STEPS = 80
_NEWTON_STEPS = 5


@dataclass(frozen=True)
class BesselZero:
    """One member of a Bessel root family.

    kind is "derivative_zero" (m'th zero of J_l') or "robin_zero" (m'th
    positive root of alpha*J_l(r) + r*J_l'(r), which reduces to the former
    at alpha = 0).
    """

    order: int
    index: int
    value: float
    kind: str
    alpha: float | None = None


# ---------------------------------------------------------------------------
# J_l evaluation
# ---------------------------------------------------------------------------

def _series(l: int, x: float) -> float:
    """Ascending power series; used where it is cancellation-free."""
    half = 0.5 * x
    term = 1.0
    for k in range(1, l + 1):
        term *= half / k
    if term == 0.0:
        return 0.0
    total = term
    hh = half * half
    for k in range(1, 500):
        term *= -hh / (k * (l + k))
        total += term
        if abs(term) <= 1e-18 * (abs(total) + 1e-300):
            break
    return total


def _backward(lmax: int, x: float) -> list:
    """All of J_0(x)..J_lmax(x) by backward recurrence.

    Normalized with J_0 + 2*(J_2 + J_4 + ...) = 1.  The start order sits far
    enough above max(lmax, x) that the seed error has decayed below round-off.
    """
    start = int(max(lmax, math.ceil(x)) + 12.0 * max(x, 1.0) ** (1.0 / 3.0) + 22)
    out = [0.0] * (lmax + 1)
    j_up = 0.0
    j_cur = 1e-300
    norm = 0.0
    for k in range(start, 0, -1):
        if k <= lmax:
            out[k] = j_cur
        if k % 2 == 0:
            norm += 2.0 * j_cur
        j_down = (2.0 * k / x) * j_cur - j_up
        j_up, j_cur = j_cur, j_down
        if abs(j_cur) > 1e250:
            j_up *= 1e-250
            j_cur *= 1e-250
            norm *= 1e-250
            out = [v * 1e-250 for v in out]
    out[0] = j_cur
    norm += j_cur
    return [v / norm for v in out]


def _check_order(l) -> int:
    if int(l) != l or l < 0:
        raise DomainError("Bessel order must be a nonnegative integer")
    return int(l)


def bessel_j(l: int, x: float) -> float:
    """J_l(x) for integer l >= 0 and x >= 0."""
    l = _check_order(l)
    if x < 0:
        raise DomainError("bessel_j requires x >= 0")
    if x == 0.0:
        return 1.0 if l == 0 else 0.0
    # The series is safe while its terms decrease from the start (x small
    # relative to sqrt(l)); beyond that it cancels catastrophically and the
    # backward recurrence takes over.
    if x <= max(12.0, 2.0 * math.sqrt(l + 1.0)):
        return _series(l, x)
    return _backward(l, x)[l]


def bessel_j_prime(l: int, x: float) -> float:
    """d/dx J_l(x), via J_0' = -J_1 and J_l' = (J_{l-1} - J_{l+1})/2."""
    l = _check_order(l)
    if x == 0.0:
        return 0.5 if l == 1 else 0.0
    if l == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(l - 1, x) - bessel_j(l + 1, x))


def _bessel_j_second(l: int, x: float) -> float:
    # From the defining ODE, valid for x > 0.
    return -bessel_j_prime(l, x) / x - (1.0 - l * l / (x * x)) * bessel_j(l, x)


# ---------------------------------------------------------------------------
# Root families
# ---------------------------------------------------------------------------

def _refine(f, fprime, lo: float, hi: float) -> float:
    """Bisection to a tiny interval, then a few guarded Newton polish steps."""
    flo = f(lo)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = f(mid)
        if flo * fmid <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    root = 0.5 * (lo + hi)
    for _ in range(_NEWTON_STEPS):
        d = fprime(root)
        if d == 0.0:
            break
        step = f(root) / d
        candidate = root - step
        if not (lo - 1.0 <= candidate <= hi + 1.0):
            break
        root = candidate
    return root


def _scan_for_roots(f, fprime, x0: float, count: int, cap: float) -> list:
    roots = []
    x = x0
    fx = f(x)
    while len(roots) < count:
        if x > cap:
            raise BracketError(
                f"no sign change found below {cap:.3f}; seed bound violated"
            )
        xn = x + _SCAN_STEP
        fn = f(xn)
        if fx == 0.0:
            roots.append(x)
        elif fx * fn < 0.0:
            roots.append(_refine(f, fprime, x, xn))
        x, fx = xn, fn
    return roots


def _check_root_args(l, m) -> tuple:
    if int(l) != l or l < 1:
        raise DomainError("root families require integer order l >= 1")
    if int(m) != m or m < 1:
        raise DomainError("root index m must be a positive integer")
    return int(l), int(m)


@lru_cache(maxsize=None)
def _prime_zero_value(l: int, m: int) -> float:
    # First zero of J_l' exceeds sqrt(l(l+2)) and is below l + 2 l^(1/3);
    # later ones follow at gaps of order pi.
    x0 = math.sqrt(l * (l + 2.0))
    cap = x0 + 2.0 * l ** (1.0 / 3.0) + (m + 3) * 4.0
    roots = _scan_for_roots(
        lambda x: bessel_j_prime(l, x),
        lambda x: _bessel_j_second(l, x),
        x0,
        m,
        cap,
    )
    return roots[m - 1]


def bessel_prime_zero(l: int, m: int) -> BesselZero:
    """The m'th positive zero of J_l' (l >= 1, m >= 1)."""
    l, m = _check_root_args(l, m)
    return BesselZero(l, m, _prime_zero_value(l, m), "derivative_zero")


@lru_cache(maxsize=None)
def _robin_zero_value(l: int, m: int, alpha: float) -> float:
    f = lambda x: alpha * bessel_j(l, x) + x * bessel_j_prime(l, x)
    fprime = lambda x: (alpha + 1.0) * bessel_j_prime(l, x) + x * _bessel_j_second(l, x)
    x0 = math.sqrt(l * (l + 2.0))
    cap = x0 + 2.0 * l ** (1.0 / 3.0) + (m + 4) * 4.0
    return _scan_for_roots(f, fprime, x0, m, cap)[m - 1]


def robin_zero(l: int, m: int, alpha: float) -> BesselZero:
    """The m'th positive root of alpha*J_l(r) + r*J_l'(r).

    Continuous in alpha and equal to the derivative zero at alpha = 0.
    Slightly negative alpha (> -0.5) is accepted so difference quotients
    centred at alpha = 0 can be formed; the Robin spectra themselves only
    use alpha >= 0.
    """
    l, m = _check_root_args(l, m)
    alpha = float(alpha)
    if alpha <= -0.5:
        raise DomainError("robin_zero requires alpha > -0.5")
    if alpha == 0.0:
        return BesselZero(l, m, _prime_zero_value(l, m), "robin_zero", 0.0)
    return BesselZero(l, m, _robin_zero_value(l, m, alpha), "robin_zero", alpha)


def robin_eigenvalue_derivative_at_zero(l: int, m: int) -> float:
    """d/dalpha at 0 of the squared Robin root: 2 z^2 / (z^2 - l^2), z = j'_{l,m}.

    Always positive, since every zero of J_l' exceeds sqrt(l(l+2)) > l.
    """
    l, m = _check_root_args(l, m)
    z = _prime_zero_value(l, m)
    return 2.0 * z * z / (z * z - l * l)
