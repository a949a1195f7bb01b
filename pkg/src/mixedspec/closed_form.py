"""Exact spectra and eigenfunctions for the worked domains.

These serve as ground truth for the finite-element solvers and as inputs to
the inequality and boundary-identity checks.  Supported families:

* unit-style squares with F = both vertical sides (mixed), F = all but the
  bottom side, all-Dirichlet, and all-Neumann boundaries;
* the upper half disk with F = arc and Dirichlet diameter (Neumann, Steklov
  and Robin variants);
* the disk (Steklov) and the hyperbolic disk of curvature -1 (Steklov,
  eigenvalues only).

Every eigenfunction is returned with unit L2 norm over the domain; the
boundary identities checked downstream presuppose that normalization.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import geometry, specfun
from .errors import DomainError, UnsupportedDomain

PROBLEM_KINDS = (
    "neumann_dirichlet",
    "steklov_dirichlet",
    "robin_dirichlet",
    "dirichlet",
    "neumann",
)


@dataclass(frozen=True)
class EigenEntry:
    k: int
    value: float
    label: tuple


@dataclass(frozen=True)
class EigenSequence:
    """Sorted eigenvalues with mode labels and provenance.

    value_fn regenerates an entry's value from its label (used to verify the
    sequence against its generating formula).
    """

    kind: str
    domain_tag: str
    entries: tuple
    provenance: str = "closed_form"
    alpha: Optional[float] = None
    value_fn: Optional[Callable[[tuple], float]] = field(
        default=None, repr=False, compare=False
    )

    @property
    def values(self) -> list:
        return [e.value for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def _sorted_two_index(value_of, start, count):
    """First `count` values of a family nondecreasing in each of two indices.

    Monotone-frontier enumeration: popping the heap minimum and pushing its
    two successors guarantees the prefix is exact; ties break on the label.
    """
    if count <= 0:
        return []
    heap = [(value_of(*start), start)]
    seen = {start}
    out = []
    while heap and len(out) < count:
        value, idx = heapq.heappop(heap)
        out.append((value, idx))
        i, j = idx
        for nxt in ((i + 1, j), (i, j + 1)):
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (value_of(*nxt), nxt))
    return out


def _make_sequence(kind, domain_tag, pairs, value_fn, alpha=None) -> EigenSequence:
    entries = tuple(
        EigenEntry(k, value, label) for k, (value, label) in enumerate(pairs, start=1)
    )
    return EigenSequence(kind, domain_tag, entries, "closed_form", alpha, value_fn)


def _check_count(count) -> int:
    if int(count) != count or count < 0:
        raise DomainError("count must be a nonnegative integer")
    return int(count)


# ---------------------------------------------------------------------------
# Square spectra (side s, arbitrary translation; F = both vertical sides)
# ---------------------------------------------------------------------------

def square_nd_spectrum(count: int, side: float = 1.0) -> EigenSequence:
    """Mixed problem on the square, zero normal derivative on the vertical
    sides and zero values on the horizontal ones: (pi/s)^2 (m^2 + n^2) with
    m >= 0, n >= 1."""
    count = _check_count(count)
    a2 = (math.pi / side) ** 2
    value = lambda m, n: a2 * (m * m + n * n)
    pairs = _sorted_two_index(lambda m, j: value(m, j + 1), (0, 0), count)
    pairs = [(v, (m, j + 1)) for v, (m, j) in pairs]
    return _make_sequence(
        "neumann_dirichlet", f"square(side={side})", pairs, lambda lab: value(*lab)
    )


def square_neumann_spectrum(count: int, side: float = 1.0) -> EigenSequence:
    count = _check_count(count)
    a2 = (math.pi / side) ** 2
    value = lambda m, n: a2 * (m * m + n * n)
    pairs = _sorted_two_index(value, (0, 0), count)
    return _make_sequence("neumann", f"square(side={side})", pairs, lambda lab: value(*lab))


def square_dirichlet_spectrum(count: int, side: float = 1.0) -> EigenSequence:
    count = _check_count(count)
    a2 = (math.pi / side) ** 2
    value = lambda m, n: a2 * (m * m + n * n)
    pairs = _sorted_two_index(lambda i, j: value(i + 1, j + 1), (0, 0), count)
    pairs = [(v, (i + 1, j + 1)) for v, (i, j) in pairs]
    return _make_sequence("dirichlet", f"square(side={side})", pairs, lambda lab: value(*lab))


def square_one_dirichlet_side_spectrum(count: int, side: float = 1.0) -> EigenSequence:
    """Dirichlet on the bottom side only: (pi/s)^2 (m^2 + (n+1/2)^2), m,n >= 0."""
    count = _check_count(count)
    a2 = (math.pi / side) ** 2
    value = lambda m, n: a2 * (m * m + (n + 0.5) ** 2)
    pairs = _sorted_two_index(value, (0, 0), count)
    return _make_sequence(
        "neumann_dirichlet", f"square-one-dirichlet(side={side})", pairs,
        lambda lab: value(*lab),
    )


def _square_sd_value(n: int, parity: str, side: float) -> float:
    half = 0.5 * math.pi * n
    if parity == "tanh":
        return math.pi * n * math.tanh(half) / side
    if parity == "coth":
        return math.pi * n / math.tanh(half) / side
    raise DomainError(f"unknown square Steklov parity {parity!r}")


def square_sd_spectrum(count: int, side: float = 1.0) -> EigenSequence:
    """Steklov on the vertical sides, Dirichlet horizontals.

    The two families pi*n*tanh(pi n/2) and pi*n*coth(pi n/2) interleave in
    increasing order (the coth value of level n-1 stays below the tanh value
    of level n), so emitting them pairwise already yields the sorted list.
    """
    count = _check_count(count)
    pairs = []
    n = 1
    while len(pairs) < count:
        pairs.append((_square_sd_value(n, "tanh", side), (n, "tanh")))
        pairs.append((_square_sd_value(n, "coth", side), (n, "coth")))
        n += 1
    pairs = pairs[:count]
    return _make_sequence(
        "steklov_dirichlet", f"square(side={side})", pairs,
        lambda lab: _square_sd_value(lab[0], lab[1], side),
    )


# ---------------------------------------------------------------------------
# Half-disk spectra (radius a, F = arc, Dirichlet diameter)
# ---------------------------------------------------------------------------

def halfdisk_nd_spectrum(count: int, radius: float = 1.0) -> EigenSequence:
    """Squared zeros of J_l' over l, m >= 1, scaled by the radius."""
    count = _check_count(count)
    value = lambda l, m: (specfun.bessel_prime_zero(l, m).value / radius) ** 2
    pairs = _sorted_two_index(lambda i, j: value(i + 1, j + 1), (0, 0), count)
    pairs = [(v, (i + 1, j + 1)) for v, (i, j) in pairs]
    return _make_sequence(
        "neumann_dirichlet", f"half-disk(radius={radius})", pairs,
        lambda lab: value(*lab),
    )


def halfdisk_sd_spectrum(count: int, radius: float = 1.0) -> EigenSequence:
    """sigma_k = k / radius with eigenfunctions r^k sin(k theta)."""
    count = _check_count(count)
    pairs = [(k / radius, (k,)) for k in range(1, count + 1)]
    return _make_sequence(
        "steklov_dirichlet", f"half-disk(radius={radius})", pairs,
        lambda lab: lab[0] / radius,
    )


def robin_halfdisk_spectrum(alpha: float, count: int, radius: float = 1.0) -> EigenSequence:
    """Squared roots of alpha*J_l(r) + r*J_l'(r) = 0, scaled by the radius."""
    count = _check_count(count)
    if alpha < 0:
        raise DomainError("Robin spectra require alpha >= 0")
    value = lambda l, m: (
        specfun.robin_zero(l, m, alpha * radius).value / radius
    ) ** 2
    pairs = _sorted_two_index(lambda i, j: value(i + 1, j + 1), (0, 0), count)
    pairs = [(v, (i + 1, j + 1)) for v, (i, j) in pairs]
    return _make_sequence(
        "robin_dirichlet", f"half-disk(radius={radius})", pairs,
        lambda lab: value(*lab), alpha=alpha,
    )


# ---------------------------------------------------------------------------
# Disk spectra (Steklov eigenvalues only)
# ---------------------------------------------------------------------------

def disk_steklov_spectrum(count: int, radius: float = 1.0) -> EigenSequence:
    """0, then each positive integer over the radius with multiplicity two."""
    count = _check_count(count)
    pairs = [(0.0, (0, "const"))]
    m = 1
    while len(pairs) < count:
        pairs.append((m / radius, (m, "sin")))
        pairs.append((m / radius, (m, "cos")))
        m += 1
    pairs = pairs[:count]
    return _make_sequence(
        "steklov_dirichlet", f"disk(radius={radius})", pairs,
        lambda lab: lab[0] / radius,
    )


def hyperbolic_disk_steklov_spectrum(R: float, count: int) -> EigenSequence:
    """floor(k/2)^2 / sinh(R); every eigenvalue past the first is double."""
    count = _check_count(count)
    if R <= 0:
        raise DomainError("hyperbolic disk requires R > 0")
    s = math.sinh(R)
    pairs = [(0.0, (0, "const"))]
    m = 1
    while len(pairs) < count:
        pairs.append((m * m / s, (m, "sin")))
        pairs.append((m * m / s, (m, "cos")))
        m += 1
    pairs = pairs[:count]
    return _make_sequence(
        "steklov_dirichlet", f"hyperbolic-disk(R={R})", pairs,
        lambda lab: lab[0] ** 2 / s,
    )


# ---------------------------------------------------------------------------
# Eigenfunctions
# ---------------------------------------------------------------------------

class ClosedFormEigenfunction:
    """Pointwise evaluation of one closed-form mode, unit L2(Omega) norm.

    family selects the evaluation rule; origin/side or radius tie the rule to
    the concrete domain.  value() and gradient() accept scalars.
    """

    def __init__(self, family, label, eigenvalue, domain, norm_const, alpha=None, z=None):
        self.family = family
        self.label = label
        self.eigenvalue = eigenvalue
        self.domain = domain
        self.norm_const = norm_const
        self.alpha = alpha
        self._z = z
        if domain.kind == "polygon":
            xs = [v[0] for v in domain.vertices]
            ys = [v[1] for v in domain.vertices]
            self._origin = (min(xs), min(ys))
            self._side = max(xs) - min(xs)
        else:
            self._origin = (0.0, 0.0)
            self._side = None

    # -- square helpers ------------------------------------------------------

    def _local(self, x, y):
        return x - self._origin[0], y - self._origin[1]

    def value(self, x: float, y: float) -> float:
        C = self.norm_const
        f = self.family
        if f in ("square_nd", "square_neumann", "square_dirichlet", "square_one_dirichlet"):
            m, n = self.label
            a = math.pi / self._side
            u, v = self._local(x, y)
            if f == "square_nd":
                return C * math.cos(a * m * u) * math.sin(a * n * v)
            if f == "square_neumann":
                return C * math.cos(a * m * u) * math.cos(a * n * v)
            if f == "square_dirichlet":
                return C * math.sin(a * m * u) * math.sin(a * n * v)
            return C * math.cos(a * m * u) * math.sin(a * (n + 0.5) * v)
        if f == "square_sd":
            n, parity = self.label
            a = math.pi / self._side
            u, v = self._local(x, y)
            h = a * n * (u - 0.5 * self._side)
            radial = math.cosh(h) if parity == "tanh" else math.sinh(h)
            return C * radial * math.sin(a * n * v)
        if f in ("halfdisk_nd", "halfdisk_robin"):
            l, _ = self.label
            z = self._z
            r = math.hypot(x, y)
            theta = math.atan2(y, x)
            return C * specfun.bessel_j(l, z * r / self.domain.radius) * math.sin(l * theta)
        if f == "halfdisk_sd":
            (k,) = self.label
            # r^k sin(k theta) = Im((x + i y)^k)
            return C * (complex(x, y) ** k).imag
        raise DomainError(f"no evaluation rule for family {self.family!r}")

    def gradient(self, x: float, y: float):
        C = self.norm_const
        f = self.family
        if f in ("square_nd", "square_neumann", "square_dirichlet", "square_one_dirichlet"):
            m, n = self.label
            a = math.pi / self._side
            u, v = self._local(x, y)
            nn = n + 0.5 if f == "square_one_dirichlet" else n
            if f in ("square_nd", "square_one_dirichlet"):
                gx = -C * a * m * math.sin(a * m * u) * math.sin(a * nn * v)
                gy = C * a * nn * math.cos(a * m * u) * math.cos(a * nn * v)
            elif f == "square_neumann":
                gx = -C * a * m * math.sin(a * m * u) * math.cos(a * nn * v)
                gy = -C * a * nn * math.cos(a * m * u) * math.sin(a * nn * v)
            else:
                gx = C * a * m * math.cos(a * m * u) * math.sin(a * nn * v)
                gy = C * a * nn * math.sin(a * m * u) * math.cos(a * nn * v)
            return (gx, gy)
        if f == "square_sd":
            n, parity = self.label
            a = math.pi / self._side
            u, v = self._local(x, y)
            h = a * n * (u - 0.5 * self._side)
            if parity == "tanh":
                radial, dradial = math.cosh(h), math.sinh(h)
            else:
                radial, dradial = math.sinh(h), math.cosh(h)
            return (
                C * a * n * dradial * math.sin(a * n * v),
                C * a * n * radial * math.cos(a * n * v),
            )
        if f in ("halfdisk_nd", "halfdisk_robin"):
            l, _ = self.label
            z = self._z / self.domain.radius
            r = max(math.hypot(x, y), 1e-15)
            theta = math.atan2(y, x)
            jr = specfun.bessel_j(l, z * r)
            dr = z * specfun.bessel_j_prime(l, z * r) * math.sin(l * theta)
            dt = l * jr * math.cos(l * theta)
            ct, st = math.cos(theta), math.sin(theta)
            return (C * (ct * dr - st * dt / r), C * (st * dr + ct * dt / r))
        if f == "halfdisk_sd":
            (k,) = self.label
            # grad Im(z^k) = (Im(k z^{k-1}), Re(k z^{k-1}))
            w = k * complex(x, y) ** (k - 1)
            return (C * w.imag, C * w.real)
        raise DomainError(f"no gradient rule for family {self.family!r}")

    # -- normalization check ---------------------------------------------------

    def squared_norm(self, n_quad: int = 0) -> float:
        """L2 norm squared by quadrature (32x32 tensor rule on squares,
        64x64 polar rule on the half disk); should be 1 to round-off."""
        if self.domain.kind == "polygon":
            n_quad = n_quad or 32
            x0, y0 = self._origin
            s = self._side
            nodes, weights = np.polynomial.legendre.leggauss(n_quad)
            xs = x0 + 0.5 * s * (nodes + 1.0)
            ws = 0.5 * s * weights
            total = 0.0
            for xi, wx in zip(xs, ws):
                for yj, wy in zip(xs, ws):
                    total += wx * wy * self.value(xi, yj) ** 2
            return total
        if self.domain.kind == "half_disk":
            n_quad = n_quad or 64
            a = self.domain.radius
            rn, rw = np.polynomial.legendre.leggauss(n_quad)
            rs = 0.5 * a * (rn + 1.0)
            rws = 0.5 * a * rw
            ts = 0.5 * math.pi * (rn + 1.0)
            tws = 0.5 * math.pi * rw
            total = 0.0
            for r, wr in zip(rs, rws):
                for t, wt in zip(ts, tws):
                    total += wr * wt * r * self.value(r * math.cos(t), r * math.sin(t)) ** 2
            return total
        raise DomainError(f"no norm quadrature for kind {self.domain.kind!r}")


def _square_family_norm(family, label, side) -> float:
    m = label[0]
    if family == "square_nd" or family == "square_one_dirichlet":
        cm = 1.0 if m == 0 else 0.5
        return 1.0 / math.sqrt(side * side * cm * 0.5)
    if family == "square_dirichlet":
        return 2.0 / side
    if family == "square_neumann":
        n = label[1]
        cm = 1.0 if m == 0 else 0.5
        cn = 1.0 if n == 0 else 0.5
        return 1.0 / math.sqrt(side * side * cm * cn)
    raise DomainError(family)


def _halfdisk_radial_norm(l: int, z: float, radius: float) -> float:
    """Closed form of the squared radial integral times the angular factor."""
    jl = specfun.bessel_j(l, z)
    jlp = specfun.bessel_j_prime(l, z)
    radial = 0.5 * (jlp * jlp + (1.0 - l * l / (z * z)) * jl * jl)
    return math.sqrt(0.5 * math.pi * radius * radius * radial)


def eigenfunction(problem_kind, domain, label, alpha=None) -> ClosedFormEigenfunction:
    """Closed-form eigenfunction for a recognized (domain, problem, label).

    The label must be valid for the family: (m, n) mode indices for squares,
    (l, m) for half-disk interior problems, (k,) for half-disk Steklov and
    (n, "tanh"|"coth") for square Steklov.
    """
    if problem_kind not in PROBLEM_KINDS:
        raise DomainError(f"unknown problem kind {problem_kind!r}")
    fam = _recognize(domain)
    label = tuple(label)

    if fam.startswith("square"):
        side, _ = _square_side_origin(domain)
        if fam == "square-mixed" and problem_kind == "steklov_dirichlet":
            n, parity = label
            if n < 1 or parity not in ("tanh", "coth"):
                raise DomainError(f"invalid square Steklov label {label!r}")
            value = _square_sd_value(n, parity, side)
            # integral over one side of cosh^2/sinh^2 centred at the midline
            ix = math.sinh(math.pi * n) * side / (2.0 * math.pi * n)
            ix += 0.5 * side if parity == "tanh" else -0.5 * side
            C = 1.0 / math.sqrt(ix * 0.5 * side)
            return ClosedFormEigenfunction("square_sd", label, value, domain, C)
        m, n = label
        mu = (math.pi / side) ** 2 * (m * m + n * n)
        if fam == "square-mixed" and problem_kind == "neumann_dirichlet":
            if m < 0 or n < 1:
                raise DomainError(f"invalid mixed square label {label!r}")
            C = _square_family_norm("square_nd", label, side)
            return ClosedFormEigenfunction("square_nd", label, mu, domain, C)
        if fam == "square-one-dirichlet" and problem_kind == "neumann_dirichlet":
            if m < 0 or n < 0:
                raise DomainError(f"invalid label {label!r}")
            mu = (math.pi / side) ** 2 * (m * m + (n + 0.5) ** 2)
            C = _square_family_norm("square_one_dirichlet", label, side)
            return ClosedFormEigenfunction("square_one_dirichlet", label, mu, domain, C)
        if fam == "square-dirichlet" and problem_kind in ("dirichlet", "neumann_dirichlet"):
            if m < 1 or n < 1:
                raise DomainError(f"invalid Dirichlet label {label!r}")
            C = _square_family_norm("square_dirichlet", label, side)
            return ClosedFormEigenfunction("square_dirichlet", label, mu, domain, C)
        if fam == "square-neumann" and problem_kind in ("neumann", "neumann_dirichlet"):
            if m < 0 or n < 0:
                raise DomainError(f"invalid Neumann label {label!r}")
            C = _square_family_norm("square_neumann", label, side)
            return ClosedFormEigenfunction("square_neumann", label, mu, domain, C)
        raise UnsupportedDomain(f"{problem_kind} has no closed form on {fam}")

    if fam == "half-disk":
        a = domain.radius
        if problem_kind == "steklov_dirichlet":
            (k,) = label
            if k < 1:
                raise DomainError(f"invalid half-disk Steklov label {label!r}")
            C = 1.0 / math.sqrt(0.5 * math.pi * a ** (2 * k + 2) / (2 * k + 2))
            return ClosedFormEigenfunction("halfdisk_sd", label, k / a, domain, C)
        l, m = label
        if l < 1 or m < 1:
            raise DomainError(f"invalid half-disk label {label!r}")
        if problem_kind == "neumann_dirichlet":
            z = specfun.bessel_prime_zero(l, m).value
            return ClosedFormEigenfunction(
                "halfdisk_nd", label, (z / a) ** 2, domain,
                1.0 / _halfdisk_radial_norm(l, z, a), z=z,
            )
        if problem_kind == "robin_dirichlet":
            if alpha is None or alpha < 0:
                raise DomainError("Robin eigenfunction needs alpha >= 0")
            z = specfun.robin_zero(l, m, alpha * a).value
            return ClosedFormEigenfunction(
                "halfdisk_robin", label, (z / a) ** 2, domain,
                1.0 / _halfdisk_radial_norm(l, z, a), alpha=alpha, z=z,
            )
        raise UnsupportedDomain(f"{problem_kind} has no closed form on the half disk")

    raise UnsupportedDomain(f"no closed-form eigenfunctions for {fam}")


# ---------------------------------------------------------------------------
# Domain recognition
# ---------------------------------------------------------------------------

def _square_side_origin(domain) -> tuple:
    xs = [v[0] for v in domain.vertices]
    ys = [v[1] for v in domain.vertices]
    return max(xs) - min(xs), (min(xs), min(ys))


def _axis_aligned_square(domain) -> bool:
    if domain.kind != "polygon" or len(domain.vertices) != 4:
        return False
    xs = sorted(set(round(v[0], 12) for v in domain.vertices))
    ys = sorted(set(round(v[1], 12) for v in domain.vertices))
    if len(xs) != 2 or len(ys) != 2:
        return False
    return abs((xs[1] - xs[0]) - (ys[1] - ys[0])) < 1e-12 * max(1.0, xs[1] - xs[0])


def _square_edge_roles(domain) -> dict:
    """Map 'bottom'/'right'/'top'/'left' to the edge's condition."""
    roles = {}
    xs = [v[0] for v in domain.vertices]
    ys = [v[1] for v in domain.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    for i in range(4):
        (ax, ay), (bx, by) = domain.edge(i)
        mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
        if abs(my - y0) < 1e-12:
            roles["bottom"] = domain.conditions[i]
        elif abs(my - y1) < 1e-12:
            roles["top"] = domain.conditions[i]
        elif abs(mx - x0) < 1e-12:
            roles["left"] = domain.conditions[i]
        elif abs(mx - x1) < 1e-12:
            roles["right"] = domain.conditions[i]
    return roles


def _recognize(domain) -> str:
    """Classify a domain+partition into a closed-form family tag."""
    if domain.kind == "half_disk":
        if domain.conditions[0] != geometry.DIRICHLET and domain.conditions[1] == geometry.DIRICHLET:
            return "half-disk"
        raise UnsupportedDomain("half-disk closed forms need F = arc, Dirichlet diameter")
    if domain.kind == "disk":
        if domain.conditions[0] != geometry.DIRICHLET:
            return "disk"
        raise UnsupportedDomain("an all-Dirichlet circle has no Steklov closed form here")
    if domain.kind == "hyperbolic_disk":
        return "hyperbolic-disk"
    if _axis_aligned_square(domain):
        roles = _square_edge_roles(domain)
        if len(roles) == 4:
            d = geometry.DIRICHLET
            pattern = tuple(roles[r] == d for r in ("bottom", "right", "top", "left"))
            if pattern == (True, False, True, False):
                return "square-mixed"
            if pattern == (True, True, True, True):
                return "square-dirichlet"
            if pattern == (False, False, False, False):
                return "square-neumann"
            if pattern == (True, False, False, False):
                return "square-one-dirichlet"
    raise UnsupportedDomain(
        f"no closed-form spectrum for this domain/partition ({domain.kind})"
    )


def domain_tag(domain) -> str:
    """The provenance tag a closed-form spectrum on this domain would carry."""
    fam = _recognize(domain)
    if fam == "half-disk":
        return f"half-disk(radius={domain.radius})"
    if fam == "disk":
        return f"disk(radius={domain.radius})"
    if fam == "hyperbolic-disk":
        return f"hyperbolic-disk(R={domain.radius})"
    side, _ = _square_side_origin(domain)
    if fam == "square-one-dirichlet":
        return f"square-one-dirichlet(side={side})"
    return f"square(side={side})"


def closed_form_spectrum(domain, problem_kind, count, alpha=None) -> EigenSequence:
    """Dispatch a recognized (domain, problem) pair to its spectrum generator."""
    if problem_kind not in PROBLEM_KINDS:
        raise DomainError(f"unknown problem kind {problem_kind!r}")
    fam = _recognize(domain)
    if fam == "hyperbolic-disk":
        if problem_kind == "steklov_dirichlet":
            return hyperbolic_disk_steklov_spectrum(domain.radius, count)
        raise UnsupportedDomain("only the Steklov closed form is known on the hyperbolic disk")
    if fam == "disk":
        if problem_kind == "steklov_dirichlet":
            return disk_steklov_spectrum(count, domain.radius)
        raise UnsupportedDomain("only the Steklov closed form is implemented on the disk")
    if fam == "half-disk":
        a = domain.radius
        if problem_kind == "neumann_dirichlet":
            return halfdisk_nd_spectrum(count, a)
        if problem_kind == "steklov_dirichlet":
            return halfdisk_sd_spectrum(count, a)
        if problem_kind == "robin_dirichlet":
            if alpha is None:
                raise DomainError("robin_dirichlet spectrum needs alpha")
            return robin_halfdisk_spectrum(alpha, count, a)
        raise UnsupportedDomain(f"{problem_kind} closed form unavailable on the half disk")
    side, _ = _square_side_origin(domain)
    if fam == "square-mixed":
        if problem_kind == "neumann_dirichlet":
            return square_nd_spectrum(count, side)
        if problem_kind == "steklov_dirichlet":
            return square_sd_spectrum(count, side)
        raise UnsupportedDomain(f"{problem_kind} closed form unavailable on the mixed square")
    if fam == "square-one-dirichlet":
        if problem_kind == "neumann_dirichlet":
            return square_one_dirichlet_side_spectrum(count, side)
        raise UnsupportedDomain("only the mixed spectrum is implemented for this partition")
    if fam == "square-dirichlet":
        # with F empty the mixed problem is the Dirichlet problem
        if problem_kind in ("dirichlet", "neumann_dirichlet"):
            return square_dirichlet_spectrum(count, side)
        raise UnsupportedDomain("all-Dirichlet square: only the Dirichlet spectrum applies")
    if fam == "square-neumann":
        # with F the whole boundary the mixed problem is the Neumann problem
        if problem_kind in ("neumann", "neumann_dirichlet"):
            return square_neumann_spectrum(count, side)
        raise UnsupportedDomain("pure-Neumann square: no Steklov/Robin closed form here")
    raise UnsupportedDomain(fam)
