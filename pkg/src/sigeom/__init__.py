"""Differential geometry of surfaces of revolution in the semi-isotropic
3-space: vector algebra, series special functions, fundamental forms, two
Laplace operators, and numerical verification of the eigenvalue
classifications."""

from .bessel import (
    DEFAULT_SERIES,
    EULER_GAMMA,
    BesselKind,
    PrecisionLossWarning,
    SeriesConfig,
    bessel_i0,
    bessel_j,
    bessel_j0,
    bessel_k0,
    bessel_y0,
    gamma,
    harmonic,
    jp_pair_solution,
    modified_pair_solution,
    ode_residual,
    pochhammer,
)
from .classify import (
    CertifiedProfile,
    CurvatureReport,
    EigenReport,
    Grid,
    OperatorKind,
    Verdict,
    check_eigen_i,
    check_eigen_ii,
    eigen_system_residual,
    make_grid,
    solve_radial_eigen_ode,
    verify_constant_curvature,
)
from .core import (
    CausalClass,
    Motion,
    Vec3SI,
    apply_motion,
    boost,
    causal_class,
    inverse_motion,
    is_null_eps,
    scalar_product,
    semi_norm,
    si_angle,
    vector_product,
)
from .errors import (
    AdmissibilityError,
    DomainError,
    NonConvergenceError,
    ParabolicPointError,
    ProfileSpecError,
    StencilError,
)
from .expressions import expression_profile
from .profiles import (
    DEFAULT_DOMAIN,
    ProfileCurve,
    ProfileFamily,
    bessel_profile,
    constant_h_profile,
    constant_k_profile,
    derivative_consistency_error,
    eval_profile,
    linear_profile,
    log_profile,
    power_profile,
)
from .surfaces import (
    FundamentalForms,
    Mesh,
    RevolutionKind,
    RevolutionSurface,
    ScalarField,
    b_function,
    b_of_profile,
    coord_laplacians_i,
    coord_laplacians_ii,
    coordinate_fields,
    curvatures,
    fundamental_forms,
    fundamental_forms_fd,
    laplacian_i,
    laplacian_ii,
    mesh,
    point_at,
)

__version__ = "0.1.0"
