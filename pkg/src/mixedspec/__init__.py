"""Laplace eigenvalues under mixed Steklov/Neumann/Robin/Dirichlet boundary
conditions on planar domains: closed-form spectra, a P1 finite-element
discretization, and machine verification of eigenvalue inequalities and
Rellich-type boundary identities."""

from .closed_form import (
    ClosedFormEigenfunction,
    EigenEntry,
    EigenSequence,
    closed_form_spectrum,
    disk_steklov_spectrum,
    eigenfunction,
    halfdisk_nd_spectrum,
    halfdisk_sd_spectrum,
    hyperbolic_disk_steklov_spectrum,
    robin_halfdisk_spectrum,
    square_dirichlet_spectrum,
    square_nd_spectrum,
    square_neumann_spectrum,
    square_one_dirichlet_side_spectrum,
    square_sd_spectrum,
)
from .errors import (
    BracketError,
    DomainError,
    NoSteklovBoundary,
    NumericalError,
    UnsupportedDomain,
    WeylFitError,
)
from .fem import (
    DiscreteEigenpair,
    DiscreteProblem,
    FemEigenfunction,
    TriMesh,
    assemble,
    fem_spectrum,
    generalized_eigensolve,
    solve_neumann_dirichlet,
    solve_robin_dirichlet,
    solve_steklov_dirichlet,
    triangulate,
)
from .geometry import (
    DomainSpec,
    FaceGeometry,
    GeometricConstants,
    cot_kappa,
    disk,
    domain_area,
    domain_perimeter,
    face_geometry,
    geometric_constants,
    half_disk,
    hyperbolic_disk,
    is_strictly_star_convex,
    scale_domain,
    signed_distance,
    square_dirichlet,
    square_mixed,
    square_neumann,
    square_one_dirichlet,
    unit_square,
)
from .inequalities import (
    InequalityReport,
    WeylReport,
    ball_corollary_bound,
    hyperbolic_mu_upper_bound,
    ks_bound,
    robin_derivative_reports,
    verify_ks,
    verify_ks_pair,
    verify_robin,
    verify_robin_on_domain,
    weyl_check,
)
from .rellich import (
    BoundaryIntegrals,
    HadamardReport,
    RellichReport,
    boundary_integrals,
    hadamard_scaling_check,
    rellich_christianson,
    rellich_residual,
)
from .specfun import (
    BesselZero,
    bessel_j,
    bessel_j_prime,
    bessel_prime_zero,
    robin_eigenvalue_derivative_at_zero,
    robin_zero,
)

__version__ = "0.1.0"
