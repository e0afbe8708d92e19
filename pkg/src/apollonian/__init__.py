"""Apollonian weak metric on the unit disc and its Randers-type Finsler geometry.

Distances and boundary supremum points, the induced Finsler norm and its
fundamental tensor and indicatrix, the full curvature calculus (S-curvature,
Riemann, Ricci, flag) with finite-difference oracles for every closed form,
geodesic integration and length reconstruction, Zermelo navigation data, and
the hyperboloid realization.
"""
from .curvature import (
    MEASURED_ALPHA_CURVATURE,
    STATED_ALPHA_CURVATURE,
    BetaDerivatives,
    ChristoffelSymbols,
    CurvatureReport,
    SprayCoefficients,
    beta_derivatives,
    beta_second_cov_numeric,
    bh_density,
    christoffel,
    christoffel_numeric,
    curvature_report,
    distortion,
    flag_curvature,
    flag_curvature_numeric,
    phi_psi_tau,
    ricci,
    riemann_curvature,
    rho_density_log,
    s_curvature,
    spray_closed,
    spray_numeric,
)
from .errors import (
    ApollonianError,
    DegenerateInputError,
    DegenerateNavigationError,
    NonSpacelikeError,
    OutsideDiscError,
    ZeroTangentError,
)
from .finsler import (
    FundamentalTensor,
    IndicatrixEllipse,
    RandersSplit,
    busemann_mayer_ratio,
    finsler_norm,
    fundamental_tensor,
    indicatrix_ellipse,
    indicatrix_sample,
    one_form_coefficients,
    one_form_potential,
    potential_check,
    randers_split,
    symmetrized_norm,
)
from .geodesics import (
    GeodesicPath,
    IntegratorConfig,
    SampledCurve,
    distance_via_length,
    finsler_length,
    hyperbolic_segment,
    integrate_geodesic,
    trajectory_residual,
)
from .navigation import (
    HyperboloidPoint,
    ZermeloData,
    hyperboloid_jacobian,
    hyperboloid_map,
    hyperboloid_pushforward,
    lorentz_randers_value,
    pullback_check,
    zermelo_data,
    zermelo_reconstruct,
)
from .points import BoundaryPoint, DiscPoint, TangentVector
from .validation import CheckRecord, GridSpec, ValidationReport, run_validation
from .weakmetric import (
    GeodesicArc,
    SupremumResult,
    apollonian_distance,
    barbilian_distance,
    boundary_objective,
    brute_force_supremum,
    geodesic_arc,
    supremum_points,
)

__version__ = "0.1.0"
