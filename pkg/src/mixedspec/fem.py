"""P1 triangular finite elements for the mixed eigenvalue problems.

Meshing covers axis-aligned rectangles (structured right-triangle grids),
the half disk (polar fan with an exact diameter and a chord-approximated
arc) and general simple polygons (Delaunay of a filtered point cloud).
Assembly uses exact element integrals; Dirichlet conditions are imposed by
row/column deletion, which preserves symmetry and the discrete min-max
monotonicity.  The Steklov problem is reduced to the F-boundary unknowns
through a Schur complement (a discrete Dirichlet-to-Neumann operator).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import sparse
from scipy.linalg import eigh
from scipy.sparse.linalg import ArpackNoConvergence, eigsh, splu

from . import geometry
from .errors import DomainError, NoSteklovBoundary, NumericalError, UnsupportedDomain

_DENSE_CUTOFF = 600
_SEED = 20240901


# ---------------------------------------------------------------------------
# Mesh container
# ---------------------------------------------------------------------------

@dataclass
class TriMesh:
    """Triangle mesh with labelled boundary edges.

    Boundary edges are oriented so the domain lies on their left; the outward
    normal of edge (a, b) is then (b-a) rotated by -90 degrees.  edge_segment
    records which domain boundary segment each edge discretizes.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    boundary_edges: np.ndarray
    edge_labels: tuple
    edge_segment: np.ndarray
    h: float
    domain: Optional[geometry.DomainSpec] = None
    boundary_tri: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float)
        self.triangles = np.asarray(self.triangles, dtype=int)
        self.boundary_edges = np.asarray(self.boundary_edges, dtype=int)
        self.edge_segment = np.asarray(self.edge_segment, dtype=int)
        self._validate()

    def _validate(self):
        v, t = self.vertices, self.triangles
        areas = triangle_areas(v, t)
        if len(areas) and areas.min() <= 0.0:
            raise DomainError("mesh contains a non-positively-oriented or flat triangle")
        if len(self.edge_labels) != len(self.boundary_edges):
            raise DomainError("one label per boundary edge required")
        for lab in self.edge_labels:
            if lab not in geometry.CONDITIONS:
                raise DomainError(f"unknown boundary edge label {lab!r}")
        # each undirected triangle edge belongs to one or two triangles; the
        # degree-1 set must coincide with the declared boundary edges
        owner = {}
        for ti, (a, b, c) in enumerate(t):
            for e in ((a, b), (b, c), (c, a)):
                key = (min(e), max(e))
                owner.setdefault(key, []).append(ti)
        declared = set()
        adjacent = np.empty(len(self.boundary_edges), dtype=int)
        for i, (a, b) in enumerate(self.boundary_edges):
            key = (min(a, b), max(a, b))
            owners = owner.get(key, [])
            if len(owners) != 1:
                raise DomainError(
                    f"boundary edge {a}-{b} belongs to {len(owners)} triangles"
                )
            adjacent[i] = owners[0]
            declared.add(key)
        degree_one = {k for k, ts in owner.items() if len(ts) == 1}
        if degree_one != declared:
            raise DomainError("boundary edges do not tile the mesh boundary")
        self.boundary_tri = adjacent

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_length(self, i: int) -> float:
        a, b = self.boundary_edges[i]
        return float(np.linalg.norm(self.vertices[b] - self.vertices[a]))

    def edge_normal(self, i: int) -> np.ndarray:
        a, b = self.boundary_edges[i]
        d = self.vertices[b] - self.vertices[a]
        n = np.array([d[1], -d[0]])
        return n / np.linalg.norm(n)

    def scaled(self, factor: float) -> "TriMesh":
        """Same connectivity with every vertex multiplied by `factor`."""
        if factor <= 0:
            raise DomainError("scale factor must be positive")
        return TriMesh(
            self.vertices * factor,
            self.triangles.copy(),
            self.boundary_edges.copy(),
            self.edge_labels,
            self.edge_segment.copy(),
            self.h * factor,
            None,
        )

    # -- plain-text dump ----------------------------------------------------

    def to_text(self) -> str:
        out = io.StringIO()
        out.write("mixedspec-mesh 1\n")
        out.write(f"vertices {len(self.vertices)}\n")
        for x, y in self.vertices:
            out.write(f"{float(x)!r} {float(y)!r}\n")
        out.write(f"triangles {len(self.triangles)}\n")
        for a, b, c in self.triangles:
            out.write(f"{a} {b} {c}\n")
        out.write(f"edges {len(self.boundary_edges)}\n")
        for (a, b), lab, seg in zip(
            self.boundary_edges, self.edge_labels, self.edge_segment
        ):
            out.write(f"{a} {b} {lab} {seg}\n")
        return out.getvalue()

    @staticmethod
    def from_text(text: str, h: float = 0.0) -> "TriMesh":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("mixedspec-mesh"):
            raise DomainError("not a mesh dump")
        pos = 1

        def read_block(name):
            nonlocal pos
            tag, num = lines[pos].split()
            if tag != name:
                raise DomainError(f"expected '{name}' section")
            pos += 1
            rows = lines[pos : pos + int(num)]
            pos += int(num)
            return rows

        verts = [tuple(map(float, r.split())) for r in read_block("vertices")]
        tris = [tuple(map(int, r.split())) for r in read_block("triangles")]
        edges, labels, segs = [], [], []
        for r in read_block("edges"):
            a, b, lab, seg = r.split()
            edges.append((int(a), int(b)))
            labels.append(lab)
            segs.append(int(seg))
        return TriMesh(
            np.array(verts), np.array(tris, dtype=int), np.array(edges, dtype=int),
            tuple(labels), np.array(segs, dtype=int), h,
        )


def triangle_areas(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    p = vertices[triangles]
    d1 = p[:, 1] - p[:, 0]
    d2 = p[:, 2] - p[:, 0]
    return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])


# ---------------------------------------------------------------------------
# Triangulation
# ---------------------------------------------------------------------------

def triangulate(domain: geometry.DomainSpec, h: float) -> TriMesh:
    """Mesh a domain at target edge length h.

    Axis-aligned rectangles whose sides h divides become structured grids of
    right triangles; the half disk becomes a polar fan whose straight
    diameter is exact and whose arc is replaced by at least pi*radius/h
    chords; any other simple polygon is meshed by filtered Delaunay.
    """
    if not (0.0 < h < domain.diameter()):
        raise DomainError("need 0 < h < domain diameter")
    if domain.kind == "half_disk":
        return _polar_fan(domain, h)
    if domain.kind == "polygon":
        rect = _axis_rectangle_divisions(domain, h)
        if rect is not None:
            return _structured_rectangle(domain, h, *rect)
        return _delaunay_polygon(domain, h)
    raise UnsupportedDomain(f"no triangulation for domain kind {domain.kind!r}")


def _axis_rectangle_divisions(domain, h):
    vs = domain.vertices
    if len(vs) != 4:
        return None
    xs = sorted(set(v[0] for v in vs))
    ys = sorted(set(v[1] for v in vs))
    if len(xs) != 2 or len(ys) != 2:
        return None
    w, ht = xs[1] - xs[0], ys[1] - ys[0]
    nx, ny = w / h, ht / h
    if abs(nx - round(nx)) > 1e-9 or abs(ny - round(ny)) > 1e-9:
        return None
    return xs[0], ys[0], w, ht, int(round(nx)), int(round(ny))


def _polygon_edge_for_midpoint(domain, mid, tol):
    for i in range(len(domain.vertices)):
        a, b = domain.edge(i)
        if geometry._point_on_segment(mid, a, b, tol):
            return i
    raise DomainError(f"boundary edge midpoint {mid} not on any polygon edge")


def _structured_rectangle(domain, h, x0, y0, w, ht, nx, ny):
    xs = x0 + w * np.arange(nx + 1) / nx
    ys = y0 + ht * np.arange(ny + 1) / ny
    verts = np.array([(x, y) for y in ys for x in xs])
    vid = lambda ix, iy: iy * (nx + 1) + ix
    tris = []
    for iy in range(ny):
        for ix in range(nx):
            a, b = vid(ix, iy), vid(ix + 1, iy)
            c, d = vid(ix + 1, iy + 1), vid(ix, iy + 1)
            tris.append((a, b, c))
            tris.append((a, c, d))
    edges = []
    for ix in range(nx):  # bottom, oriented +x
        edges.append((vid(ix, 0), vid(ix + 1, 0)))
    for iy in range(ny):  # right, oriented +y
        edges.append((vid(nx, iy), vid(nx, iy + 1)))
    for ix in range(nx, 0, -1):  # top, oriented -x
        edges.append((vid(ix, ny), vid(ix - 1, ny)))
    for iy in range(ny, 0, -1):  # left, oriented -y
        edges.append((vid(0, iy), vid(0, iy - 1)))
    tol = 1e-9 * (1.0 + max(w, ht))
    segs, labels = [], []
    for a, b in edges:
        mid = 0.5 * (verts[a] + verts[b])
        seg = _polygon_edge_for_midpoint(domain, mid, tol)
        segs.append(seg)
        labels.append(domain.conditions[seg])
    return TriMesh(
        verts, np.array(tris), np.array(edges), tuple(labels),
        np.array(segs), h, domain,
    )


def _polar_fan(domain, h):
    a = domain.radius
    n_r = max(1, math.ceil(a / h))
    n_s = max(2, math.ceil(math.pi * a / h))
    arc_label, diam_label = domain.conditions
    verts = [(0.0, 0.0)]
    index = {}
    for i in range(1, n_r + 1):
        r = a * i / n_r
        for j in range(n_s + 1):
            theta = math.pi * j / n_s
            if j == 0:
                xy = (r, 0.0)
            elif j == n_s:
                xy = (-r, 0.0)
            else:
                xy = (r * math.cos(theta), r * math.sin(theta))
            index[(i, j)] = len(verts)
            verts.append(xy)
    tris = []
    for j in range(n_s):  # innermost fan around the origin
        tris.append((0, index[(1, j)], index[(1, j + 1)]))
    for i in range(1, n_r):
        for j in range(n_s):
            p00, p10 = index[(i, j)], index[(i + 1, j)]
            p11, p01 = index[(i + 1, j + 1)], index[(i, j + 1)]
            tris.append((p00, p10, p11))
            tris.append((p00, p11, p01))
    edges, labels, segs = [], [], []
    for j in range(n_s):  # arc chords, oriented CCW (domain on the left)
        edges.append((index[(n_r, j)], index[(n_r, j + 1)]))
        labels.append(arc_label)
        segs.append(0)
    # diameter: from (-a, 0) through the origin to (a, 0), domain above
    chain = [index[(i, n_s)] for i in range(n_r, 0, -1)] + [0] + [
        index[(i, 0)] for i in range(1, n_r + 1)
    ]
    for s, t in zip(chain[:-1], chain[1:]):
        edges.append((s, t))
        labels.append(diam_label)
        segs.append(1)
    return TriMesh(
        np.array(verts), np.array(tris), np.array(edges), tuple(labels),
        np.array(segs), h, domain,
    )


def _delaunay_polygon(domain, h):
    from scipy.spatial import Delaunay

    vs = np.array(domain.vertices)
    pitch = h / 2.0
    boundary_pts = []
    boundary_owner = []
    for i in range(len(vs)):
        a, b = np.array(domain.edge(i)[0]), np.array(domain.edge(i)[1])
        pieces = max(1, math.ceil(np.linalg.norm(b - a) / pitch))
        for k in range(pieces):
            boundary_pts.append(a + (b - a) * k / pieces)
            boundary_owner.append(i)
    boundary_pts = np.array(boundary_pts)
    xmin, ymin = vs.min(axis=0)
    xmax, ymax = vs.max(axis=0)
    xi = np.arange(xmin + 0.5 * pitch, xmax, pitch)
    yi = np.arange(ymin + 0.5 * pitch, ymax, pitch)
    interior = []
    for x in xi:
        for y in yi:
            if geometry.point_in_polygon(domain.vertices, (x, y)) != "inside":
                continue
            d = _distance_to_boundary(domain, (x, y))
            if d > 0.5 * pitch:
                interior.append((x, y))
    pts = np.vstack([boundary_pts] + ([np.array(interior)] if interior else []))
    tri = Delaunay(pts)
    scale = max(xmax - xmin, ymax - ymin)
    keep = []
    for simplex in tri.simplices:
        p = pts[simplex]
        centroid = p.mean(axis=0)
        area = 0.5 * abs(
            (p[1, 0] - p[0, 0]) * (p[2, 1] - p[0, 1])
            - (p[1, 1] - p[0, 1]) * (p[2, 0] - p[0, 0])
        )
        if area < 1e-12 * scale * scale:
            continue
        if geometry.point_in_polygon(domain.vertices, tuple(centroid)) == "inside":
            keep.append(tuple(simplex))
    tris = np.array(keep, dtype=int)
    areas = triangle_areas(pts, tris)
    flip = areas < 0
    tris[flip] = tris[flip][:, ::-1]
    # boundary edges = triangle edges used exactly once, oriented as in the
    # owning (CCW) triangle so the domain lies on their left
    count = {}
    oriented = {}
    for t in tris:
        for e in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            key = (min(e), max(e))
            count[key] = count.get(key, 0) + 1
            oriented[key] = e
    tol = 1e-9 * (1.0 + scale)
    edges, labels, segs = [], [], []
    for key, c in sorted(count.items()):
        if c != 1:
            continue
        e = oriented[key]
        mid = 0.5 * (pts[e[0]] + pts[e[1]])
        seg = _polygon_edge_for_midpoint(domain, mid, tol)
        edges.append(e)
        labels.append(domain.conditions[seg])
        segs.append(seg)
    mesh = TriMesh(
        pts, tris, np.array(edges), tuple(labels), np.array(segs), h, domain
    )
    lengths = np.linalg.norm(
        pts[tris[:, [1, 2, 0]]] - pts[tris], axis=2
    )
    if lengths.max() > h * (1.0 + 1e-9):
        raise NumericalError(
            f"Delaunay meshing exceeded the target edge length: {lengths.max():.3g} > {h:.3g}"
        )
    return mesh


def _distance_to_boundary(domain, p):
    best = math.inf
    for i in range(len(domain.vertices)):
        a, b = domain.edge(i)
        ax, ay = a
        bx, by = b
        dx, dy = bx - ax, by - ay
        t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / (dx * dx + dy * dy)
        t = min(1.0, max(0.0, t))
        best = min(best, math.hypot(p[0] - (ax + t * dx), p[1] - (ay + t * dy)))
    return best


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

@dataclass
class DiscreteProblem:
    """Assembled P1 operators plus the Dirichlet vertex mask.

    stiffness is symmetric PSD with constants in its kernel before
    elimination, mass is symmetric PD, and boundary_mass is supported on the
    vertices of the non-Dirichlet boundary part F.
    """

    stiffness: sparse.csr_matrix
    mass: sparse.csr_matrix
    boundary_mass: sparse.csr_matrix
    dirichlet_mask: np.ndarray
    mesh: TriMesh

    def free_indices(self) -> np.ndarray:
        return np.flatnonzero(~self.dirichlet_mask)


def assemble(mesh: TriMesh) -> DiscreteProblem:
    """Exact P1 stiffness/mass matrices and the boundary mass on F."""
    v, t = mesh.vertices, mesh.triangles
    n = len(v)
    p = v[t]
    areas = triangle_areas(v, t)
    if len(areas) and areas.min() <= 1e-14 * max(1.0, float(np.abs(v).max())) ** 2:
        raise DomainError("degenerate triangle encountered during assembly")
    # gradients of the barycentric hat functions
    b = np.stack(
        [
            p[:, 1, 1] - p[:, 2, 1],
            p[:, 2, 1] - p[:, 0, 1],
            p[:, 0, 1] - p[:, 1, 1],
        ],
        axis=1,
    ) / (2.0 * areas[:, None])
    c = np.stack(
        [
            p[:, 2, 0] - p[:, 1, 0],
            p[:, 0, 0] - p[:, 2, 0],
            p[:, 1, 0] - p[:, 0, 0],
        ],
        axis=1,
    ) / (2.0 * areas[:, None])
    rows, cols, kdata, mdata = [], [], [], []
    for i in range(3):
        for j in range(3):
            rows.append(t[:, i])
            cols.append(t[:, j])
            kdata.append(areas * (b[:, i] * b[:, j] + c[:, i] * c[:, j]))
            mdata.append(areas / 12.0 * (2.0 if i == j else 1.0))
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    K = sparse.coo_matrix((np.concatenate(kdata), (rows, cols)), shape=(n, n)).tocsr()
    mdata = [np.broadcast_to(d, t.shape[0]) if np.ndim(d) else d for d in mdata]
    M = sparse.coo_matrix(
        (np.concatenate([np.asarray(d, dtype=float) for d in mdata]), (rows, cols)),
        shape=(n, n),
    ).tocsr()

    brows, bcols, bdata = [], [], []
    for i, (a_, b_) in enumerate(mesh.boundary_edges):
        if mesh.edge_labels[i] == geometry.DIRICHLET:
            continue
        ln = mesh.edge_length(i)
        for (r_, c_), w in (
            ((a_, a_), 2.0), ((a_, b_), 1.0), ((b_, a_), 1.0), ((b_, b_), 2.0)
        ):
            brows.append(r_)
            bcols.append(c_)
            bdata.append(ln / 6.0 * w)
    B = sparse.coo_matrix((bdata, (brows, bcols)), shape=(n, n)).tocsr()

    mask = np.zeros(n, dtype=bool)
    for i, (a_, b_) in enumerate(mesh.boundary_edges):
        if mesh.edge_labels[i] == geometry.DIRICHLET:
            mask[a_] = True
            mask[b_] = True
    return DiscreteProblem(K, M, B, mask, mesh)


# ---------------------------------------------------------------------------
# Generalized eigensolver
# ---------------------------------------------------------------------------

def generalized_eigensolve(A, B, count: int, mode: str = "mass"):
    """Smallest `count` eigenpairs of A x = theta B x, A/B symmetric.

    Dense LAPACK for small systems, otherwise shift-invert Lanczos with a
    deterministic start vector.  mode="mass" expects B positive definite;
    mode="boundary" accepts a PSD B supported on a subset of indices with A
    decoupled outside that support.  Returned vectors are B-orthonormal.
    """
    A = sparse.csr_matrix(A)
    B = sparse.csr_matrix(B)
    n = A.shape[0]
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise DomainError("A and B must be square with matching shapes")
    if not (1 <= count <= n):
        raise DomainError(f"count must be between 1 and {n}")
    if mode == "boundary":
        support = np.flatnonzero(B.diagonal() > 0.0)
        if len(support) < n:
            rest = np.setdiff1d(np.arange(n), support)
            if abs(A[np.ix_(support, rest)]).sum() > 0 or abs(A[np.ix_(rest, rest)]).sum() > 0:
                raise DomainError(
                    "boundary-mode pencil couples indices outside the support of B"
                )
            vals, vecs_s = generalized_eigensolve(
                A[np.ix_(support, support)], B[np.ix_(support, support)], count, "mass"
            )
            vecs = np.zeros((n, count))
            vecs[support] = vecs_s
            return vals, vecs
    elif mode != "mass":
        raise DomainError(f"unknown eigensolve mode {mode!r}")

    if n <= _DENSE_CUTOFF:
        vals, vecs = eigh(A.toarray(), B.toarray())
        return vals[:count], vecs[:, :count]
    if count >= n - 1:
        raise DomainError("iterative path requires count < n - 1")
    sigma = -1e-6 * float(A.diagonal().sum()) / max(float(B.diagonal().sum()), 1e-300)
    sigma = min(sigma, -1e-12)
    v0 = np.random.default_rng(_SEED).standard_normal(n)
    try:
        vals, vecs = eigsh(A, k=count, M=B, sigma=sigma, which="LM", v0=v0, tol=0)
    except ArpackNoConvergence as exc:
        raise NumericalError(f"shift-invert Lanczos did not converge: {exc}") from exc
    order = np.argsort(vals)
    return vals[order], vecs[:, order]


# ---------------------------------------------------------------------------
# Problem solvers
# ---------------------------------------------------------------------------

@dataclass
class DiscreteEigenpair:
    """One discrete mode: vertex coefficients over the full mesh (zeros on
    Dirichlet nodes) plus the pencil residual recorded at solve time."""

    eigenvalue: float
    vector: np.ndarray
    kind: str
    orthonormal_in: str
    residual: float
    alpha: Optional[float] = None


def _pencil_residuals(A, B, vals, vecs):
    # ||Ax - theta Bx|| <= 1e-8 ||Ax||, with the operator scale as a backstop
    # for kernel modes where Ax itself is round-off.
    out = []
    norm_inf = np.abs(A).sum(axis=1).max()
    for theta, x in zip(vals, vecs.T):
        ax = A @ x
        r = np.linalg.norm(ax - theta * (B @ x))
        denom = max(np.linalg.norm(ax), 1e-6 * norm_inf * np.linalg.norm(x))
        out.append(r / denom)
        if r > 1e-8 * denom:
            raise NumericalError(
                f"eigenpair residual {r:.3e} exceeds 1e-8 bound for theta={theta:.6g}"
            )
    return out


def solve_neumann_dirichlet(problem: DiscreteProblem, count: int):
    """Smallest modes with natural (Neumann) conditions on F and eliminated
    Dirichlet nodes; eigenvectors are mass-orthonormal."""
    free = problem.free_indices()
    if not (1 <= count <= len(free)):
        raise DomainError(f"count must be between 1 and {len(free)}")
    K = problem.stiffness[np.ix_(free, free)]
    M = problem.mass[np.ix_(free, free)]
    vals, vecs = generalized_eigensolve(K, M, count, "mass")
    residuals = _pencil_residuals(K, M, vals, vecs)
    out = []
    for theta, x, r in zip(vals, vecs.T, residuals):
        full = np.zeros(problem.mesh.vertex_count)
        full[free] = x
        out.append(DiscreteEigenpair(float(theta), full, "neumann_dirichlet", "mass", r))
    return out


def solve_robin_dirichlet(problem: DiscreteProblem, alpha: float, count: int):
    """Same pencil with the F-boundary mass added: (K + alpha B_F) x = lambda M x."""
    if alpha < 0:
        raise DomainError("Robin solve requires alpha >= 0")
    free = problem.free_indices()
    if not (1 <= count <= len(free)):
        raise DomainError(f"count must be between 1 and {len(free)}")
    K = (problem.stiffness + alpha * problem.boundary_mass)[np.ix_(free, free)]
    M = problem.mass[np.ix_(free, free)]
    vals, vecs = generalized_eigensolve(K, M, count, "mass")
    residuals = _pencil_residuals(K, M, vals, vecs)
    out = []
    for theta, x, r in zip(vals, vecs.T, residuals):
        full = np.zeros(problem.mesh.vertex_count)
        full[free] = x
        out.append(
            DiscreteEigenpair(float(theta), full, "robin_dirichlet", "mass", r, alpha)
        )
    return out


def _steklov_partition(problem: DiscreteProblem):
    mesh = problem.mesh
    on_f = np.zeros(mesh.vertex_count, dtype=bool)
    for i, (a, b) in enumerate(mesh.boundary_edges):
        if mesh.edge_labels[i] != geometry.DIRICHLET:
            on_f[a] = True
            on_f[b] = True
    on_f &= ~problem.dirichlet_mask
    interior = ~on_f & ~problem.dirichlet_mask
    return np.flatnonzero(on_f), np.flatnonzero(interior)


def solve_steklov_dirichlet(problem: DiscreteProblem, count: int):
    """Steklov modes via the boundary Schur complement.

    Interior unknowns are eliminated by S = K_bb - K_bi K_ii^{-1} K_ib (the
    discrete Dirichlet-to-Neumann map) and S x = sigma B x is solved with the
    boundary mass B on F.  Eigenvectors come back B-orthonormal and are
    harmonically extended to the interior.
    """
    bidx, iidx = _steklov_partition(problem)
    if len(bidx) == 0:
        raise NoSteklovBoundary("the non-Dirichlet boundary part F is empty")
    if not (1 <= count <= len(bidx)):
        raise DomainError(f"count must be between 1 and {len(bidx)}")
    K = problem.stiffness
    S = K[np.ix_(bidx, bidx)].toarray()
    lu = None
    K_ib = None
    if len(iidx):
        K_ii = K[np.ix_(iidx, iidx)].tocsc()
        K_ib = K[np.ix_(iidx, bidx)].toarray()
        lu = splu(K_ii)
        S -= K[np.ix_(bidx, iidx)].toarray() @ lu.solve(K_ib)
    Bd = problem.boundary_mass[np.ix_(bidx, bidx)].toarray()
    vals, vecs = eigh(S, Bd)
    vals, vecs = vals[:count], vecs[:, :count]
    residuals = _pencil_residuals(sparse.csr_matrix(S), sparse.csr_matrix(Bd), vals, vecs)
    out = []
    for theta, xb, r in zip(vals, vecs.T, residuals):
        full = np.zeros(problem.mesh.vertex_count)
        full[bidx] = xb
        if lu is not None:
            full[iidx] = -lu.solve(K_ib @ xb)
        out.append(
            DiscreteEigenpair(float(theta), full, "steklov_dirichlet", "boundary", r)
        )
    return out


# ---------------------------------------------------------------------------
# P1 field wrapper for the boundary-identity checks
# ---------------------------------------------------------------------------

def fem_spectrum(domain, problem_kind, count, h, alpha=None):
    """Discrete spectrum packaged like the closed forms, for the verifiers.

    Labels carry the 1-based discrete index; provenance records the mesh
    size.  "dirichlet"/"neumann" are the mixed problem with F empty/full,
    which the domain's own labels already encode.
    """
    from .closed_form import EigenEntry, EigenSequence

    mesh = triangulate(domain, h)
    problem = assemble(mesh)
    if problem_kind in ("neumann_dirichlet", "dirichlet", "neumann"):
        pairs = solve_neumann_dirichlet(problem, count)
    elif problem_kind == "steklov_dirichlet":
        pairs = solve_steklov_dirichlet(problem, count)
    elif problem_kind == "robin_dirichlet":
        if alpha is None:
            raise DomainError("robin_dirichlet spectrum needs alpha")
        pairs = solve_robin_dirichlet(problem, alpha, count)
    else:
        raise DomainError(f"unknown problem kind {problem_kind!r}")
    entries = tuple(
        EigenEntry(k, p.eigenvalue, (k,)) for k, p in enumerate(pairs, start=1)
    )
    return EigenSequence(
        problem_kind, _domain_tag(domain), entries, f"fem(h={h:g})", alpha, None
    )


def _domain_tag(domain) -> str:
    from . import closed_form

    try:
        return closed_form.domain_tag(domain)
    except Exception:
        if domain.kind == "polygon":
            return f"polygon{tuple(domain.vertices)!r}"
        return f"{domain.kind}(radius={domain.radius})"


class FemEigenfunction:
    """Vertex field with per-edge traces and one-sided gradients.

    On a boundary edge the trace is the linear interpolant of its endpoint
    values and the gradient is the adjacent triangle's constant gradient.
    """

    def __init__(self, mesh: TriMesh, problem: DiscreteProblem, vector: np.ndarray):
        self.mesh = mesh
        self.problem = problem
        self.vector = np.asarray(vector, dtype=float)

    def squared_norm(self) -> float:
        return float(self.vector @ (self.problem.mass @ self.vector))

    def edge_values(self, edge_index: int, s: np.ndarray) -> np.ndarray:
        a, b = self.mesh.boundary_edges[edge_index]
        return self.vector[a] * (1.0 - s) + self.vector[b] * s

    def edge_points(self, edge_index: int, s: np.ndarray) -> np.ndarray:
        a, b = self.mesh.boundary_edges[edge_index]
        pa, pb = self.mesh.vertices[a], self.mesh.vertices[b]
        return pa[None, :] * (1.0 - s[:, None]) + pb[None, :] * s[:, None]

    def edge_gradient(self, edge_index: int) -> np.ndarray:
        ti = self.mesh.boundary_tri[edge_index]
        tri = self.mesh.triangles[ti]
        p = self.mesh.vertices[tri]
        area2 = (p[1, 0] - p[0, 0]) * (p[2, 1] - p[0, 1]) - (p[1, 1] - p[0, 1]) * (
            p[2, 0] - p[0, 0]
        )
        grad = np.zeros(2)
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            grad += self.vector[tri[i]] * np.array(
                [p[j, 1] - p[k, 1], p[k, 0] - p[j, 0]]
            )
        return grad / area2
