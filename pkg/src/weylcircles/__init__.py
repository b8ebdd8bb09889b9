"""Weyl circles and lens regions for one-dimensional moment problems.

Build an orthonormal system from a finite moment sequence, evaluate the
Nevanlinna kernels, and compute the regions filled by Stieltjes
transforms of all solutions of the Hamburger, Stieltjes, interval and
gap problems::

    >>> from weylcircles import classical_moments, orthonormal_system, hamburger_disk
    >>> sys = orthonormal_system(classical_moments("gaussian", 5), 2)
    >>> hamburger_disk(sys, 1, 1j)
    Circle(center=0.75j, radius=0.25)
"""
from .errors import *  # noqa: F401,F403
from .errors import WeylError
from .kernels import (
    RELATION_IDS,
    KernelKind,
    Kernels,
    RelationReport,
    all_kernels,
    double_det,
    kernel,
    kernel_convergence,
    kernel_det,
    random_quadruples,
    relation_residuals,
    relation_sides,
)
from .measures import (
    DiscreteMeasure,
    TransformValue,
    canonical_measure,
    gauss_quadrature,
    mix,
    stieltjes_transform,
)
from .moebius import (
    INF,
    Circle,
    MoebiusImage,
    MoebiusMap,
    circle_through,
    eval_map,
    image_of_real_line,
)
from .moments import (
    MomentSequence,
    PositivityReport,
    SupportSpec,
    apply_functional,
    check_positivity,
    classical_moments,
    moments_of,
)
from .orthopoly import (
    OrthoSystem,
    eval_all,
    eval_poly,
    orthonormal_system,
    second_kind_by_recurrence,
    truncated_t,
)
from .weyl import (
    Arc,
    MembershipDiagnostic,
    ParameterCone,
    WeylRegion,
    boundary_samples,
    cone_angle,
    contains,
    fit_circle,
    gap_circles,
    hamburger_disk,
    hamburger_map,
    hamburger_region,
    interval_region,
    multi_gap_region,
    sample_parameters,
    stieltjes_k2_closed_form,
    stieltjes_region,
    step_function_arg,
    validate_membership,
)

__version__ = "0.1.0"
