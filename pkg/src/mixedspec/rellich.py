"""Boundary integrals tying eigenvalues to boundary data of eigenfunctions.

For a unit-norm mixed-mode eigenfunction v with eigenvalue mu the identity

    mu * (I_v2 - 2) = I_tan - I_nrm

holds, where the three integrals weight v^2 and the tangential gradient
square over F, and the normal-derivative square over the Dirichlet part, by
n.(x - p).  On polygons the weight is constant per face and equals the
signed base-point distance, which turns the identity into a per-face sum
(the polytope form).  Differentiating eigenvalues along the dilation flow
of the plane gives the same right side and the exact scaling law
mu(e^t * Omega) = e^{-2t} * mu, which hadamard_scaling_check verifies three
ways.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import closed_form, fem, geometry
from .errors import DomainError
from .geometry import DIRICHLET


@dataclass(frozen=True)
class BoundaryIntegrals:
    """The three weighted boundary integrals of one eigenfunction.

    weighted_value_sq and weighted_tangential_sq run over F only (the
    tangential gradient vanishes on the Dirichlet part anyway, where the
    eigenfunction is constant zero); weighted_normal_sq runs over the
    Dirichlet part.  All three use the same base point.
    """

    weighted_value_sq: float
    weighted_tangential_sq: float
    weighted_normal_sq: float
    base_point: tuple
    quad_order: int
    provenance: str

    def no_weight_check(self):
        return (self.weighted_value_sq, self.weighted_tangential_sq, self.weighted_normal_sq)


@dataclass(frozen=True)
class RellichReport:
    eigenvalue: float
    lhs: float
    rhs: float
    residual: float
    base_point: tuple
    face_contributions: tuple = ()

    def to_dict(self) -> dict:
        return {
            "eigenvalue": self.eigenvalue,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "base_point": list(self.base_point),
            "face_contributions": [dict(f) for f in self.face_contributions],
        }


def _gauss(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return 0.5 * (nodes + 1.0), 0.5 * weights  # mapped to [0, 1]


def _check_normalization(func) -> float:
    ns = func.squared_norm()
    if abs(ns - 1.0) > 1e-6:
        raise DomainError(
            f"eigenfunction must have unit L2 norm (got norm^2 = {ns:.8f})"
        )
    return ns


def boundary_integrals(
    func,
    p=(0.0, 0.0),
    order: int = 32,
) -> BoundaryIntegrals:
    """Gauss-Legendre boundary integrals of a closed-form or P1 function.

    Closed-form inputs carry their domain; P1 inputs carry their mesh, whose
    edges use the linear trace and the adjacent triangle's constant gradient.
    Inputs whose L2 norm differs from 1 by more than 1e-6 are rejected, and
    the integrals are divided by the exact squared norm so tiny normalization
    drift cannot leak into the identity checks.
    """
    p = (float(p[0]), float(p[1]))
    ns = _check_normalization(func)
    sq = lambda v: v * v
    i_v2 = i_tan = i_nrm = 0.0
    if isinstance(func, fem.FemEigenfunction):
        mesh = func.mesh
        s_nodes, s_weights = _gauss(order)
        for e in range(len(mesh.boundary_edges)):
            length = mesh.edge_length(e)
            normal = mesh.edge_normal(e)
            pts = func.edge_points(e, s_nodes)
            weight_geo = (pts[:, 0] - p[0]) * normal[0] + (pts[:, 1] - p[1]) * normal[1]
            is_f = mesh.edge_labels[e] != DIRICHLET
            if is_f:
                vals = func.edge_values(e, s_nodes)
                i_v2 += length * float(np.sum(s_weights * weight_geo * vals**2))
                grad = func.edge_gradient(e)
                vn = grad @ normal
                tang_sq = float(grad @ grad) - vn * vn
                i_tan += length * float(np.sum(s_weights * weight_geo)) * tang_sq
            else:
                grad = func.edge_gradient(e)
                vn = grad @ normal
                i_nrm += length * float(np.sum(s_weights * weight_geo)) * vn * vn
        prov = f"fem(h={mesh.h:g})"
    else:
        domain = func.domain
        for seg, points, normals, weights in _boundary_quadrature(domain, order):
            is_f = domain.conditions[seg] != DIRICHLET
            for (x, y), (nx, ny), w in zip(points, normals, weights):
                wgt = (x - p[0]) * nx + (y - p[1]) * ny
                gx, gy = func.gradient(x, y)
                vn = gx * nx + gy * ny
                if is_f:
                    i_v2 += w * wgt * sq(func.value(x, y))
                    i_tan += w * wgt * (gx * gx + gy * gy - vn * vn)
                else:
                    i_nrm += w * wgt * vn * vn
        prov = "closed_form"
    return BoundaryIntegrals(
        float(i_v2 / ns), float(i_tan / ns), float(i_nrm / ns), p, order, prov
    )


def _boundary_quadrature(domain, order):
    """(segment index, points, outward normals, arc-length weights) tuples."""
    s_nodes, s_weights = _gauss(order)
    if domain.kind == "polygon":
        for i in range(len(domain.vertices)):
            (ax, ay), (bx, by) = domain.edge(i)
            length = math.hypot(bx - ax, by - ay)
            normal = ((by - ay) / length, -(bx - ax) / length)
            pts = [(ax + (bx - ax) * s, ay + (by - ay) * s) for s in s_nodes]
            yield i, pts, [normal] * order, [w * length for w in s_weights]
        return
    if domain.kind == "half_disk":
        a = domain.radius
        thetas = [math.pi * s for s in s_nodes]
        pts = [(a * math.cos(t), a * math.sin(t)) for t in thetas]
        normals = [(math.cos(t), math.sin(t)) for t in thetas]
        yield 0, pts, normals, [w * math.pi * a for w in s_weights]
        # diameter from (-a, 0) to (a, 0); outward normal (0, -1)
        pts = [(-a + 2.0 * a * s, 0.0) for s in s_nodes]
        yield 1, pts, [(0.0, -1.0)] * order, [w * 2.0 * a for w in s_weights]
        return
    if domain.kind == "disk":
        a = domain.radius
        thetas = [2.0 * math.pi * s for s in s_nodes]
        pts = [(a * math.cos(t), a * math.sin(t)) for t in thetas]
        normals = [(math.cos(t), math.sin(t)) for t in thetas]
        yield 0, pts, normals, [w * 2.0 * math.pi * a for w in s_weights]
        return
    raise DomainError(f"no boundary quadrature for domain kind {domain.kind!r}")


def rellich_residual(mu: float, integrals: BoundaryIntegrals) -> RellichReport:
    """Residual of mu*(I_v2 - 2) = I_tan - I_nrm.

    With F empty this reduces to mu = I_nrm / 2 (the all-Dirichlet identity).
    """
    lhs = mu * (integrals.weighted_value_sq - 2.0)
    rhs = integrals.weighted_tangential_sq - integrals.weighted_normal_sq
    return RellichReport(mu, lhs, rhs, abs(lhs - rhs), integrals.base_point)


def rellich_christianson(
    domain: geometry.DomainSpec,
    p,
    func,
    mu: Optional[float] = None,
    order: int = 32,
) -> RellichReport:
    """Per-face form of the identity on a polygon.

    The weight n.(x-p) is constant along each straight face and equals the
    signed distance from p to the face's supporting line, so it factors out
    of every face integral exactly.  Reports carry the per-face pieces.
    """
    if domain.kind != "polygon":
        raise DomainError("the per-face identity applies to polygons only")
    if mu is None:
        mu = func.eigenvalue
    ns = _check_normalization(func)
    s_nodes, s_weights = _gauss(order)
    sum_f_v2 = sum_f_tan = sum_d_nrm = 0.0
    faces = []
    for i in range(len(domain.vertices)):
        (ax, ay), (bx, by) = domain.edge(i)
        length = math.hypot(bx - ax, by - ay)
        normal = ((by - ay) / length, -(bx - ax) / length)
        dist = geometry.signed_distance(domain, i, p)
        is_f = domain.conditions[i] != DIRICHLET
        val_sq = tang_sq = nrm_sq = 0.0
        for s, w in zip(s_nodes, s_weights):
            x, y = ax + (bx - ax) * s, ay + (by - ay) * s
            gx, gy = func.gradient(x, y)
            vn = gx * normal[0] + gy * normal[1]
            if is_f:
                val_sq += w * length * func.value(x, y) ** 2
                tang_sq += w * length * (gx * gx + gy * gy - vn * vn)
            else:
                nrm_sq += w * length * vn * vn
        val_sq, tang_sq, nrm_sq = val_sq / ns, tang_sq / ns, nrm_sq / ns
        if is_f:
            sum_f_v2 += dist * val_sq
            sum_f_tan += dist * tang_sq
            faces.append(
                {
                    "face": i, "condition": domain.conditions[i], "distance": dist,
                    "value_sq_integral": val_sq, "tangential_sq_integral": tang_sq,
                    "value_contribution": dist * val_sq,
                    "tangential_contribution": dist * tang_sq,
                }
            )
        else:
            sum_d_nrm += dist * nrm_sq
            faces.append(
                {
                    "face": i, "condition": domain.conditions[i], "distance": dist,
                    "normal_sq_integral": nrm_sq,
                    "normal_contribution": dist * nrm_sq,
                }
            )
    lhs = mu * (sum_f_v2 - 2.0)
    rhs = sum_f_tan - sum_d_nrm
    return RellichReport(
        mu, lhs, rhs, abs(lhs - rhs), (float(p[0]), float(p[1])), tuple(faces)
    )


# ---------------------------------------------------------------------------
# Dilation (Hadamard) check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HadamardReport:
    k: int
    eigenvalue: float
    skipped: bool
    reason: str
    scaling_rel_err: float
    holds_scaling: bool
    fd_derivative: float
    fd_rel_err: float
    holds_fd: bool
    boundary_rhs: float
    boundary_rel_err: float
    holds_boundary: bool
    provenance: str

    @property
    def holds(self) -> bool:
        return self.skipped or (self.holds_scaling and self.holds_fd and self.holds_boundary)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "eigenvalue": self.eigenvalue,
            "skipped": self.skipped,
            "reason": self.reason,
            "scaling_rel_err": self.scaling_rel_err,
            "holds_scaling": self.holds_scaling,
            "fd_derivative": self.fd_derivative,
            "fd_rel_err": self.fd_rel_err,
            "holds_fd": self.holds_fd,
            "boundary_rhs": self.boundary_rhs,
            "boundary_rel_err": self.boundary_rel_err,
            "holds_boundary": self.holds_boundary,
            "provenance": self.provenance,
        }


def _richardson_derivative(value_at, steps: Sequence[float]) -> float:
    """Central differences at two step sizes combined to fourth order."""
    h1, h2 = sorted(steps, reverse=True)[:2]
    d1 = (value_at(h1) - value_at(-h1)) / (2.0 * h1)
    d2 = (value_at(h2) - value_at(-h2)) / (2.0 * h2)
    if abs(h1 - 2.0 * h2) > 1e-12 * h1:
        raise DomainError("Richardson extrapolation expects steps (h, h/2)")
    return (4.0 * d2 - d1) / 3.0


def hadamard_scaling_check(
    domain: geometry.DomainSpec,
    k: int,
    steps: Sequence[float] = (0.05, 0.025),
    method: str = "closed_form",
    h: Optional[float] = None,
    scaling_tol: float = 1e-12,
    fd_tol: float = 1e-4,
    boundary_tol: Optional[float] = None,
) -> HadamardReport:
    """Three-way check of the eigenvalue response to dilations e^t * Omega.

    (a) the exact relation mu(e^t Omega) * e^{2t} = mu; (b) the Richardson
    central difference of t -> mu(e^t Omega) at 0 against -2 mu; (c) the
    boundary-integral expression I_tan - mu*I_v2 - I_nrm against -2 mu
    (the identity rearranged, with dilation field x and base point 0).
    A nearly multiple eigenvalue at index k is flagged and skipped, since
    its ordering under perturbation is not stable.
    """
    if method == "closed_form":
        seq = closed_form.closed_form_spectrum(domain, "neumann_dirichlet", k + 1)
        mu = seq.entries[k - 1].value
        prov = "closed_form"
        near = []
        if k >= 2:
            near.append(seq.entries[k - 2].value)
        near.append(seq.entries[k].value)
        if any(abs(v - mu) <= 1e-9 * max(mu, 1.0) for v in near):
            return HadamardReport(
                k, mu, True, "eigenvalue is not simple at this index; ordering unstable",
                math.nan, False, math.nan, math.nan, False, math.nan, math.nan, False, prov,
            )

        def mu_at(t):
            scaled = geometry.scale_domain(domain, math.exp(t))
            return closed_form.closed_form_spectrum(scaled, "neumann_dirichlet", k).entries[k - 1].value

        label = seq.entries[k - 1].label
        func = closed_form.eigenfunction("neumann_dirichlet", domain, label)
        ints = boundary_integrals(func, p=(0.0, 0.0), order=32)
        boundary_tol = 1e-8 * max(1.0, 2.0 * mu) if boundary_tol is None else boundary_tol
    elif method == "fem":
        if h is None:
            raise DomainError("fem method requires a mesh size h")
        mesh = fem.triangulate(domain, h)
        problem = fem.assemble(mesh)
        pairs = fem.solve_neumann_dirichlet(problem, k + 1)
        mu = pairs[k - 1].eigenvalue
        prov = f"fem(h={h:g})"
        near = [pairs[k].eigenvalue] + ([pairs[k - 2].eigenvalue] if k >= 2 else [])
        if any(abs(v - mu) <= 1e-6 * max(mu, 1.0) for v in near):
            return HadamardReport(
                k, mu, True, "discrete eigenvalue is (numerically) multiple at this index",
                math.nan, False, math.nan, math.nan, False, math.nan, math.nan, False, prov,
            )

        def mu_at(t):
            scaled_problem = fem.assemble(mesh.scaled(math.exp(t)))
            return fem.solve_neumann_dirichlet(scaled_problem, k)[k - 1].eigenvalue

        func = fem.FemEigenfunction(mesh, problem, pairs[k - 1].vector)
        ints = boundary_integrals(func, p=(0.0, 0.0), order=8)
        # one-sided P1 gradient traces make the boundary route O(h) accurate
        boundary_tol = 40.0 * h * max(1.0, mu) if boundary_tol is None else boundary_tol
        scaling_tol = max(scaling_tol, 1e-10)
    else:
        raise DomainError(f"unknown method {method!r}")

    rel_errs = []
    for t in (*steps, *(-s for s in steps)):
        rel_errs.append(abs(mu_at(t) * math.exp(2.0 * t) - mu) / mu)
    scaling_err = max(rel_errs)
    fd = _richardson_derivative(mu_at, steps)
    target = -2.0 * mu
    fd_err = abs(fd - target) / abs(target)
    boundary_rhs = float(
        ints.weighted_tangential_sq - mu * ints.weighted_value_sq - ints.weighted_normal_sq
    )
    boundary_err = abs(boundary_rhs - target)
    return HadamardReport(
        k, float(mu), False, "",
        float(scaling_err), bool(scaling_err <= scaling_tol),
        float(fd), float(fd_err), bool(fd_err <= fd_tol),
        boundary_rhs, float(boundary_err), bool(boundary_err <= boundary_tol),
        prov,
    )
