"""Machine verification of the eigenvalue comparison bounds.

Three comparisons are covered: the Steklov-vs-Neumann lower bound through
the geometric constants (h_min, r_max, C0), its specialization to geodesic
balls (including the hyperbolic disk, where it forces the Neumann
eigenvalues to zero as the radius grows), and the Robin-vs-Neumann bound
through the first Steklov eigenvalue.  A Weyl-law slope fit provides an
asymptotic sanity check on long spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import closed_form, fem, geometry
from .errors import DomainError, WeylFitError


@dataclass(frozen=True)
class InequalityReport:
    """One verified instance of a comparison, oriented so lhs >= rhs is the
    claimed direction; holds iff slack = lhs - rhs >= -tolerance."""

    theorem: str
    k: int
    lhs: float
    rhs: float
    slack: float
    holds: bool
    tolerance: float
    provenance: str
    trivial_bound: bool = False

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "tolerance": self.tolerance,
            "provenance": self.provenance,
            "trivial_bound": self.trivial_bound,
        }


def _report(theorem, k, lhs, rhs, tol, provenance, trivial=False) -> InequalityReport:
    slack = lhs - rhs
    return InequalityReport(
        theorem, k, lhs, rhs, slack, slack >= -tol, tol, provenance, trivial
    )


# ---------------------------------------------------------------------------
# Steklov vs Neumann (Kuttler-Sigillito type bound)
# ---------------------------------------------------------------------------

def ks_bound(mu: float, constants: geometry.GeometricConstants) -> float:
    """Lower bound h_min * mu / (2 r_max sqrt(mu) + C0) for the Steklov
    eigenvalue matching the Neumann-Dirichlet eigenvalue mu."""
    if mu < 0:
        raise DomainError("eigenvalue must be nonnegative")
    if mu == 0.0:
        return 0.0
    return constants.h_min * mu / (2.0 * constants.r_max * math.sqrt(mu) + constants.c0)


def verify_ks_pair(
    sigma_seq: closed_form.EigenSequence,
    mu_seq: closed_form.EigenSequence,
    constants: geometry.GeometricConstants,
    count: int,
    tol: float = 1e-10,
) -> list:
    """Compare sigma_k against the bound evaluated at mu_k, k = 1..count."""
    if sigma_seq.domain_tag != mu_seq.domain_tag:
        raise DomainError(
            f"spectra come from different domains: {sigma_seq.domain_tag!r} vs {mu_seq.domain_tag!r}"
        )
    if sigma_seq.provenance != mu_seq.provenance:
        raise DomainError("spectra come from different discretizations")
    if len(sigma_seq) < count or len(mu_seq) < count:
        raise DomainError(f"need at least {count} eigenvalues in both spectra")
    trivial = constants.h_min <= 0.0
    out = []
    for k in range(1, count + 1):
        sigma = sigma_seq.entries[k - 1].value
        mu = mu_seq.entries[k - 1].value
        out.append(
            _report(
                "steklov_vs_neumann", k, sigma, ks_bound(mu, constants), tol,
                sigma_seq.provenance, trivial,
            )
        )
    return out


def _fem_tolerance(h: float, value: float) -> float:
    # conforming elements overestimate; twice the h^2-scaled error estimate
    # guards against false failures from that bias
    return 2.0 * (h * h * value * value + 1e-12)


def verify_ks(
    domain: geometry.DomainSpec,
    p=(0.0, 0.0),
    count: int = 10,
    method: str = "closed_form",
    h: Optional[float] = None,
    kappa: float = 0.0,
    tol: Optional[float] = None,
) -> list:
    """Fetch matching Steklov and Neumann-Dirichlet spectra for the domain
    and verify the bound for k = 1..count."""
    constants = geometry.geometric_constants(domain, p, kappa)
    if method == "closed_form":
        sigma_seq = closed_form.closed_form_spectrum(domain, "steklov_dirichlet", count)
        mu_seq = closed_form.closed_form_spectrum(domain, "neumann_dirichlet", count)
        return verify_ks_pair(sigma_seq, mu_seq, constants, count, tol or 1e-10)
    if method == "fem":
        if h is None:
            raise DomainError("fem method requires a mesh size h")
        sigma_seq = fem.fem_spectrum(domain, "steklov_dirichlet", count, h)
        mu_seq = fem.fem_spectrum(domain, "neumann_dirichlet", count, h)
        reports = []
        trivial = constants.h_min <= 0.0
        for k in range(1, count + 1):
            sigma = sigma_seq.entries[k - 1].value
            mu = mu_seq.entries[k - 1].value
            tol_k = tol if tol is not None else _fem_tolerance(h, sigma)
            reports.append(
                _report(
                    "steklov_vs_neumann", k, sigma, ks_bound(mu, constants), tol_k,
                    sigma_seq.provenance, trivial,
                )
            )
        return reports
    raise DomainError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Geodesic balls
# ---------------------------------------------------------------------------

def ball_corollary_bound(R: float, kappa: float, mu: float) -> float:
    """Ball specialization: R*mu / (2R sqrt(mu) + C0) with C0 = 2 for
    kappa >= 0 and C0 = 1 + R*cot_kappa(R) for kappa < 0 (plane dimension)."""
    if R <= 0:
        raise DomainError("ball radius must be positive")
    if mu < 0:
        raise DomainError("eigenvalue must be nonnegative")
    if mu == 0.0:
        return 0.0
    c0 = 2.0 if kappa >= 0 else 1.0 + R * geometry.cot_kappa(R, kappa)
    return R * mu / (2.0 * R * math.sqrt(mu) + c0)


def hyperbolic_mu_upper_bound(R: float, k: int) -> float:
    """Upper bound on the k'th Neumann eigenvalue of the hyperbolic disk.

    Inverts the strictly increasing map mu -> ball_corollary_bound(R,-1,mu)
    at the known Steklov value floor(k/2)^2 / sinh(R); as R grows the bound
    collapses to zero, witnessing the vanishing of the Neumann spectrum.
    """
    if R <= 0:
        raise DomainError("R must be positive")
    if int(k) != k or k < 2:
        raise DomainError("k >= 2 required (sigma_1 = 0 carries no information)")
    sigma = (k // 2) ** 2 / math.sinh(R)
    f = lambda mu: ball_corollary_bound(R, -1.0, mu)
    hi = 1.0
    while f(hi) <= sigma:
        hi *= 2.0
        if hi > 1e300:
            raise DomainError("bound inversion diverged")
    lo = 0.0
    while hi - lo > 1e-14 * hi:
        mid = 0.5 * (lo + hi)
        if f(mid) < sigma:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Robin vs Neumann
# ---------------------------------------------------------------------------

def verify_robin(
    sigma1: float,
    mu_seq: closed_form.EigenSequence,
    lambda_seq: closed_form.EigenSequence,
    alpha: float,
    count: int,
    tol: float = 1e-10,
) -> list:
    """Check (lambda_k - mu_k)/alpha <= mu_k/sigma_1 for k = 1..count.

    Reports are oriented with lhs = mu_k/sigma_1.  When the Neumann spectrum
    carries half-disk labels (l, m), an extra per-k report compares the
    closed-form derivative of the Robin eigenvalue at alpha = 0 against the
    same right side.
    """
    if alpha <= 0:
        raise DomainError("the ratio form needs alpha > 0")
    if sigma1 <= 0:
        raise DomainError("sigma_1 must be positive")
    if mu_seq.domain_tag != lambda_seq.domain_tag:
        raise DomainError("Neumann and Robin spectra come from different domains")
    if len(mu_seq) < count or len(lambda_seq) < count:
        raise DomainError(f"need at least {count} eigenvalues")
    out = []
    for k in range(1, count + 1):
        mu = mu_seq.entries[k - 1].value
        lam = lambda_seq.entries[k - 1].value
        out.append(
            _report(
                "robin_vs_neumann", k, mu / sigma1, (lam - mu) / alpha, tol,
                lambda_seq.provenance,
            )
        )
    return out


def robin_derivative_reports(count: int, radius: float = 1.0, tol: float = 1e-10) -> list:
    """Half-disk derivative form: d(lambda)/d(alpha) at 0 vs mu_k/sigma_1.

    Both sides are closed forms in the zeros of J_l'; with sigma_1 = 1/radius
    the right side is mu_k * radius.
    """
    from . import specfun

    mu_seq = closed_form.halfdisk_nd_spectrum(count, radius)
    out = []
    for k, entry in enumerate(mu_seq.entries, start=1):
        l, m = entry.label
        derivative = specfun.robin_eigenvalue_derivative_at_zero(l, m) * radius
        out.append(
            _report(
                "robin_derivative_vs_neumann", k, entry.value * radius, derivative,
                tol, "closed_form",
            )
        )
    return out


def verify_robin_on_domain(
    domain: geometry.DomainSpec,
    alpha: float,
    count: int = 5,
    method: str = "closed_form",
    h: Optional[float] = None,
    tol: Optional[float] = None,
) -> list:
    """Domain-level driver: checks the hypothesis that the Dirichlet part is
    nonempty, fetches spectra, and uses the closed-form sigma_1 when one
    exists (a conforming discrete sigma_1 only overestimates it, so the
    closed-form value gives the harder, still-valid right side)."""
    if not domain.dirichlet_indices():
        raise DomainError("the Robin comparison requires a nonempty Dirichlet part")
    sigma1 = closed_form.closed_form_spectrum(domain, "steklov_dirichlet", 1).entries[0].value
    if method == "closed_form":
        mu_seq = closed_form.closed_form_spectrum(domain, "neumann_dirichlet", count)
        lam_seq = closed_form.closed_form_spectrum(domain, "robin_dirichlet", count, alpha)
        return verify_robin(sigma1, mu_seq, lam_seq, alpha, count, tol or 1e-10)
    if method == "fem":
        if h is None:
            raise DomainError("fem method requires a mesh size h")
        mu_seq = fem.fem_spectrum(domain, "neumann_dirichlet", count, h)
        lam_seq = fem.fem_spectrum(domain, "robin_dirichlet", count, h, alpha)
        reports = []
        for k in range(1, count + 1):
            mu = mu_seq.entries[k - 1].value
            lam = lam_seq.entries[k - 1].value
            tol_k = tol if tol is not None else _fem_tolerance(h, mu / sigma1)
            reports.append(
                _report(
                    "robin_vs_neumann", k, mu / sigma1, (lam - mu) / alpha, tol_k,
                    lam_seq.provenance,
                )
            )
        return reports
    raise DomainError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Weyl-law sanity check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylReport:
    kind: str
    fitted_slope: float
    target_slope: float
    rel_error: float
    holds: bool
    tolerance: float
    fit_range: tuple
    stated_constant: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "fitted_slope": self.fitted_slope,
            "target_slope": self.target_slope,
            "rel_error": self.rel_error,
            "holds": self.holds,
            "tolerance": self.tolerance,
            "fit_range": list(self.fit_range),
            "stated_constant": self.stated_constant,
        }


def weyl_check(
    spectrum: closed_form.EigenSequence,
    domain: geometry.DomainSpec,
    kind: str,
    tol: Optional[float] = None,
) -> WeylReport:
    """Least-squares slope of the spectrum tail against the planar Weyl law.

    Steklov: sigma_k ~ k * pi/perimeter.  Neumann: mu_k ~ k * 4*pi/area; a
    differing printed constant circulates for the Neumann case, so it is
    recorded in the report but the assertion uses the classical slope only.
    """
    if kind not in ("steklov", "neumann"):
        raise DomainError("weyl_check supports kinds 'steklov' and 'neumann'")
    n = len(spectrum)
    if n < 100:
        raise DomainError("need a spectrum of length >= 100 for a tail fit")
    k0 = n // 2 + 1
    tail = [(k, spectrum.entries[k - 1].value) for k in range(k0, n + 1)]
    values = [v for _, v in tail]
    if max(values) - min(values) <= 0.0:
        raise WeylFitError("spectrum tail is constant; cannot fit a growth rate")
    num = sum(k * v for k, v in tail)
    den = sum(k * k for k, _ in tail)
    slope = num / den
    stated = None
    if kind == "steklov":
        target = math.pi / geometry.domain_perimeter(domain)
        tol = 0.05 if tol is None else tol
    else:
        area = geometry.domain_area(domain)
        target = 4.0 * math.pi / area
        stated = (2.0 * math.pi) ** 2 * math.sqrt(2.0 / (math.pi * area))
        tol = 0.10 if tol is None else tol
    rel = abs(slope - target) / target
    return WeylReport(kind, slope, target, rel, rel <= tol, tol, (k0, n), stated)
