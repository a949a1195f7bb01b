"""Planar domains, boundary partitions, and the geometric quantities they induce.

A domain is a polygon or one of the canonical curved shapes (half disk, disk,
hyperbolic disk).  Its boundary splits into the part F carrying a
Neumann/Steklov/Robin condition and the complementary Dirichlet part; every
geometric constant consumed by the eigenvalue bounds (r_max, h_min, C0,
per-face signed distances) is computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError

NEUMANN = "neumann"
DIRICHLET = "dirichlet"
STEKLOV = "steklov"
ROBIN = "robin"
CONDITIONS = (NEUMANN, DIRICHLET, STEKLOV, ROBIN)

# Sample count for inf over a curved boundary arc (straight faces are exact).
ARC_SAMPLES = 64


# ---------------------------------------------------------------------------
# Elementary predicates
# ---------------------------------------------------------------------------

def _cross(o, a, b) -> float:
    """Cross product of OA and OB; positive for a counter-clockwise turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _point_on_segment(p, a, b, eps: float) -> bool:
    if abs(_cross(a, b, p)) > eps:
        return False
    return (
        min(a[0], b[0]) - eps <= p[0] <= max(a[0], b[0]) + eps
        and min(a[1], b[1]) - eps <= p[1] <= max(a[1], b[1]) + eps
    )


def _segments_touch(p1, p2, q1, q2, eps: float) -> bool:
    """True if the closed segments [p1,p2] and [q1,q2] share any point."""
    d1 = _cross(q1, q2, p1)
    d2 = _cross(q1, q2, p2)
    d3 = _cross(p1, p2, q1)
    d4 = _cross(p1, p2, q2)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    ):
        return True
    return (
        _point_on_segment(p1, q1, q2, eps)
        or _point_on_segment(p2, q1, q2, eps)
        or _point_on_segment(q1, p1, p2, eps)
        or _point_on_segment(q2, p1, p2, eps)
    )


def polygon_area(vertices: Sequence[Sequence[float]]) -> float:
    """Signed shoelace area; positive for counter-clockwise orientation."""
    area = 0.0
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        area += x1 * y2 - x2 * y1
    return 0.5 * area


def point_in_polygon(vertices, p, eps: float = 1e-12):
    """Locate p relative to a polygon: 'inside', 'boundary', or 'outside'.

    Standard ray casting with an explicit on-edge test first.
    """
    n = len(vertices)
    scale = max(max(abs(x), abs(y)) for x, y in vertices) + 1.0
    tol = eps * scale
    for i in range(n):
        if _point_on_segment(p, vertices[i], vertices[(i + 1) % n], tol):
            return "boundary"
    inside = False
    x, y = p
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xint = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < xint:
                inside = not inside
    return "inside" if inside else "outside"


# ---------------------------------------------------------------------------
# Domain specification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DomainSpec:
    """A planar domain plus a per-segment boundary condition labelling.

    kind is one of "polygon", "half_disk", "disk", "hyperbolic_disk".
    Polygons carry one condition per edge (edge i joins vertex i to i+1 mod N).
    The half disk has two segments, in order (arc, diameter); the disk and the
    hyperbolic disk have a single segment (the full circle).  All segments not
    labelled "dirichlet" together form the part F of the boundary.
    """

    kind: str
    conditions: tuple
    vertices: tuple = ()
    radius: float = 0.0

    def __post_init__(self):
        for c in self.conditions:
            if c not in CONDITIONS:
                raise DomainError(f"unknown boundary condition {c!r}")
        if self.kind == "polygon":
            object.__setattr__(
                self, "vertices", tuple((float(x), float(y)) for x, y in self.vertices)
            )
            _validate_polygon(self.vertices)
            if len(self.conditions) != len(self.vertices):
                raise DomainError("polygon needs one condition per edge")
        elif self.kind == "half_disk":
            if self.radius <= 0:
                raise DomainError("half_disk radius must be positive")
            if len(self.conditions) != 2:
                raise DomainError("half_disk has two segments: (arc, diameter)")
        elif self.kind in ("disk", "hyperbolic_disk"):
            if self.radius <= 0:
                raise DomainError(f"{self.kind} radius must be positive")
            if len(self.conditions) != 1:
                raise DomainError(f"{self.kind} has a single boundary segment")
        else:
            raise DomainError(f"unknown domain kind {self.kind!r}")

    # -- boundary partition -------------------------------------------------

    def segment_count(self) -> int:
        return len(self.conditions)

    def f_indices(self) -> tuple:
        """Segments belonging to F (everything not labelled Dirichlet)."""
        return tuple(i for i, c in enumerate(self.conditions) if c != DIRICHLET)

    def dirichlet_indices(self) -> tuple:
        return tuple(i for i, c in enumerate(self.conditions) if c == DIRICHLET)

    def edge(self, i: int):
        """Endpoints of polygon edge i."""
        if self.kind != "polygon":
            raise DomainError("edge() is defined for polygons only")
        n = len(self.vertices)
        return self.vertices[i % n], self.vertices[(i + 1) % n]

    def diameter(self) -> float:
        if self.kind == "polygon":
            vs = self.vertices
            return max(
                math.dist(vs[i], vs[j])
                for i in range(len(vs))
                for j in range(i + 1, len(vs))
            )
        return 2.0 * self.radius


def _validate_polygon(vertices) -> None:
    n = len(vertices)
    if n < 3:
        raise DomainError("polygon needs at least 3 vertices")
    scale = max(max(abs(x), abs(y)) for x, y in vertices) + 1.0
    eps = 1e-12 * scale
    for i in range(n):
        for j in range(i + 1, n):
            if math.dist(vertices[i], vertices[j]) <= eps:
                raise DomainError(f"repeated polygon vertices {i} and {j}")
    if polygon_area(vertices) <= eps:
        raise DomainError("polygon must be positively oriented (counter-clockwise)")
    # Pairwise sweep over edges: non-adjacent edges must be disjoint, adjacent
    # ones may share only their common vertex.
    edges = [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                shared = edges[i][1] if j == i + 1 else edges[i][0]
                other_i = next(q for q in edges[i] if math.dist(q, shared) > eps)
                other_j = next(q for q in edges[j] if math.dist(q, shared) > eps)
                # a spike: one edge folded back onto the other
                if _point_on_segment(other_i, shared, other_j, eps) or _point_on_segment(
                    other_j, shared, other_i, eps
                ):
                    raise DomainError(f"edges {i} and {j} overlap near vertex {shared}")
            elif _segments_touch(*edges[i], *edges[j], eps):
                raise DomainError(f"polygon edges {i} and {j} intersect")


# ---------------------------------------------------------------------------
# Canonical domains
# ---------------------------------------------------------------------------

def unit_square(conditions=(NEUMANN, NEUMANN, NEUMANN, NEUMANN)) -> DomainSpec:
    """Unit square [0,1]^2; edges are (bottom, right, top, left)."""
    return DomainSpec(
        kind="polygon",
        vertices=((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)),
        conditions=tuple(conditions),
    )


def square_mixed() -> DomainSpec:
    """Unit square with F the two vertical sides, Dirichlet top and bottom."""
    return unit_square((DIRICHLET, NEUMANN, DIRICHLET, NEUMANN))


def square_one_dirichlet() -> DomainSpec:
    """Unit square with Dirichlet on the bottom side only."""
    return unit_square((DIRICHLET, NEUMANN, NEUMANN, NEUMANN))


def square_dirichlet() -> DomainSpec:
    return unit_square((DIRICHLET,) * 4)


def square_neumann() -> DomainSpec:
    return unit_square((NEUMANN,) * 4)


def half_disk(radius: float = 1.0, arc: str = NEUMANN, diameter: str = DIRICHLET) -> DomainSpec:
    """Upper half disk of the given radius; segments are (arc, diameter)."""
    return DomainSpec(kind="half_disk", radius=radius, conditions=(arc, diameter))


def disk(radius: float = 1.0, condition: str = STEKLOV) -> DomainSpec:
    return DomainSpec(kind="disk", radius=radius, conditions=(condition,))


def hyperbolic_disk(geodesic_radius: float, condition: str = STEKLOV) -> DomainSpec:
    """Geodesic ball of the hyperbolic plane (curvature -1)."""
    return DomainSpec(
        kind="hyperbolic_disk", radius=geodesic_radius, conditions=(condition,)
    )


# ---------------------------------------------------------------------------
# Geometric quantities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceGeometry:
    """Outward normal, length and signed base-point distance of one face."""

    index: int
    normal: tuple
    length: float
    signed_distance: float


@dataclass(frozen=True)
class GeometricConstants:
    """Constants entering the Steklov vs Neumann eigenvalue bound.

    h_min may be nonpositive, in which case the bound is trivial.
    """

    base_point: tuple
    r_max: float
    h_min: float
    c0: float
    kappa: float


def cot_kappa(r: float, kappa: float) -> float:
    """Generalized cotangent: coth(r*sqrt(-k))/sqrt(-k), 1/r, or cot(r*sqrt(k))/sqrt(k)."""
    if r <= 0:
        raise DomainError("cot_kappa requires r > 0")
    if kappa < 0:
        s = math.sqrt(-kappa)
        return math.cosh(r * s) / math.sinh(r * s) / s
    if kappa == 0:
        return 1.0 / r
    s = math.sqrt(kappa)
    if r * s >= math.pi:
        raise DomainError("cot_kappa requires r*sqrt(kappa) < pi for kappa > 0")
    return math.cos(r * s) / math.sin(r * s) / s


def _edge_normal(v0, v1):
    """Unit outward normal of a CCW polygon edge."""
    dx, dy = v1[0] - v0[0], v1[1] - v0[1]
    length = math.hypot(dx, dy)
    if length <= 0:
        raise DomainError("degenerate polygon face")
    return (dy / length, -dx / length), length


def signed_distance(domain: DomainSpec, face_index: int, p) -> float:
    """Signed distance from p to the supporting line of polygon face i.

    Positive when p lies on the interior side of the line; its magnitude is
    the Euclidean point-to-line distance.  With the base point at the origin
    this equals the constant value of n.x along the face.
    """
    if domain.kind != "polygon":
        raise DomainError("signed_distance is defined for polygons only")
    v0, v1 = domain.edge(face_index)
    normal, _ = _edge_normal(v0, v1)
    return normal[0] * (v0[0] - p[0]) + normal[1] * (v0[1] - p[1])


def face_geometry(domain: DomainSpec, face_index: int, p) -> FaceGeometry:
    v0, v1 = domain.edge(face_index)
    normal, length = _edge_normal(v0, v1)
    dist = normal[0] * (v0[0] - p[0]) + normal[1] * (v0[1] - p[1])
    return FaceGeometry(face_index, normal, length, dist)


def _arc_support_height(radius, theta0, theta1, p, samples=ARC_SAMPLES):
    """min over a circular arc (centre origin) of n.(x-p); n is radial."""
    thetas = np.linspace(theta0, theta1, samples + 1)
    # n = (cos t, sin t), x = radius*n, so n.(x-p) = radius - p.n
    values = radius - (p[0] * np.cos(thetas) + p[1] * np.sin(thetas))
    return float(values.min())


def _farthest_point_distance(domain: DomainSpec, p) -> float:
    """max over the closure of the domain of |x - p|.

    The maximum of a convex function over each shape is attained at
    extreme points: polygon vertices, half-disk corners/arc, the circle.
    """
    if domain.kind == "polygon":
        return max(math.dist(v, p) for v in domain.vertices)
    a = domain.radius
    if domain.kind == "disk":
        return a + math.hypot(*p)
    if domain.kind == "half_disk":
        candidates = [math.dist((a, 0.0), p), math.dist((-a, 0.0), p)]
        phi = math.atan2(p[1], p[0])
        theta_far = phi + math.pi
        for theta in (theta_far, theta_far - 2 * math.pi):
            if 0.0 <= theta <= math.pi:
                candidates.append(math.dist((a * math.cos(theta), a * math.sin(theta)), p))
        return max(candidates)
    raise DomainError(f"no Euclidean farthest point for kind {domain.kind!r}")


def geometric_constants(domain: DomainSpec, p=(0.0, 0.0), kappa: float = 0.0) -> GeometricConstants:
    """Constants (r_max, h_min, C0) of the Steklov/Neumann comparison bound.

    Euclidean domains require kappa == 0 and give C0 = 2.  The hyperbolic
    disk requires kappa == -1 with F the full boundary circle and base point
    at the geodesic centre; there r_max = h_min = R and C0 = 1 + R*coth(R).
    """
    p = (float(p[0]), float(p[1]))
    if domain.kind == "hyperbolic_disk":
        if kappa != -1.0:
            raise DomainError("hyperbolic disk constants require kappa = -1")
        if domain.f_indices() != (0,):
            raise DomainError("hyperbolic disk supports only F = full boundary circle")
        if p != (0.0, 0.0):
            raise DomainError("hyperbolic disk constants use the geodesic centre")
        R = domain.radius
        return GeometricConstants(p, R, R, 1.0 + R * cot_kappa(R, -1.0), -1.0)
    if kappa != 0.0:
        raise DomainError(f"{domain.kind} domains are Euclidean; use kappa = 0")

    r_max = _farthest_point_distance(domain, p)
    h_values = []
    for i in domain.f_indices():
        if domain.kind == "polygon":
            h_values.append(signed_distance(domain, i, p))
        elif domain.kind == "half_disk":
            if i == 0:
                h_values.append(_arc_support_height(domain.radius, 0.0, math.pi, p))
            else:
                # straight face on y = 0 with outward normal (0,-1):
                # n.(x-p) = p[1], constant along the face
                h_values.append(p[1])
        else:
            h_values.append(_arc_support_height(domain.radius, 0.0, 2.0 * math.pi, p))
    h_min = min(h_values) if h_values else math.inf
    return GeometricConstants(p, r_max, h_min, 2.0, 0.0)


def domain_area(domain: DomainSpec) -> float:
    if domain.kind == "polygon":
        return polygon_area(domain.vertices)
    if domain.kind == "disk":
        return math.pi * domain.radius ** 2
    if domain.kind == "half_disk":
        return 0.5 * math.pi * domain.radius ** 2
    raise DomainError(f"no Euclidean area for kind {domain.kind!r}")


def domain_perimeter(domain: DomainSpec) -> float:
    if domain.kind == "polygon":
        return sum(
            math.dist(*domain.edge(i)) for i in range(len(domain.vertices))
        )
    if domain.kind == "disk":
        return 2.0 * math.pi * domain.radius
    if domain.kind == "half_disk":
        return (math.pi + 2.0) * domain.radius
    raise DomainError(f"no Euclidean perimeter for kind {domain.kind!r}")


def scale_domain(domain: DomainSpec, factor: float) -> DomainSpec:
    """Dilate a Euclidean domain about the origin, keeping its labels."""
    if factor <= 0:
        raise DomainError("scale factor must be positive")
    if domain.kind == "polygon":
        return DomainSpec(
            kind="polygon",
            vertices=tuple((factor * x, factor * y) for x, y in domain.vertices),
            conditions=domain.conditions,
        )
    if domain.kind in ("half_disk", "disk"):
        return DomainSpec(
            kind=domain.kind, radius=factor * domain.radius, conditions=domain.conditions
        )
    raise DomainError("only Euclidean domains can be dilated")


def is_strictly_star_convex(domain: DomainSpec, p) -> bool:
    """Whether every ray from p crosses the polygon boundary exactly once.

    For polygons this is equivalent to all signed face distances from p being
    positive (p strictly inside every face's inner half-plane).
    """
    if domain.kind != "polygon":
        raise DomainError("star convexity test is implemented for polygons")
    if point_in_polygon(domain.vertices, p) != "inside":
        raise DomainError("base point must lie strictly inside the polygon")
    return all(
        signed_distance(domain, i, p) > 0.0 for i in range(len(domain.vertices))
    )
