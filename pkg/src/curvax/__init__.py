"""curvax: developable ruled surfaces swept by the curvature axes of space curves."""

from .errors import (
    ArityError,
    CurvatureVanishes,
    CurvaxError,
    CylindricalRuling,
    DomainError,
    EmptyMesh,
    GeometryError,
    IoError,
    ParseError,
    SingularPoint,
    SurfaceSingularPoint,
    TooFewSamples,
    TorsionVanishes,
    ZeroVector,
)
from .expr import CurveDef, eval_curve, eval_expr, format_curve, parse_curve
from .jets import Jet, JetVec3, eval_jet
from .frenet import (
    DerivedCurve,
    FrenetData,
    Line3,
    arc_length,
    curvature_axis,
    evolute,
    frenet_apparatus,
    involute,
    osculating_center,
    osculating_sphere_center,
)
from .ruled import (
    RuledSurface,
    SurfaceKind,
    cone_surface,
    curvature_axis_surface,
    developability_residual,
    eval_surface,
    gaussian_curvature,
    gaussian_curvature_numeric,
    generalized_cylinder,
    regression_edge,
    ruled_surface_from_curves,
    striction_curve,
    tangent_developable,
)
from .classify import Classification, SurfaceClass, classify_developable
from .inverse import (
    RecoveredGenerator,
    conical_generator,
    is_planar_curve,
    ode_residual,
    recover_generator,
)
from .singular import (
    SingularityKind,
    SingularityReport,
    classify_tangent_dev_singularity,
    find_curve_singularities,
    singularity_report,
    surface_singular_locus,
)
from .mesh import Mesh, tessellate, write_circle_texture, write_obj, write_surface_csv

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "Classification",
    "CurvatureVanishes",
    "CurvaxError",
    "CurveDef",
    "CylindricalRuling",
    "DerivedCurve",
    "DomainError",
    "EmptyMesh",
    "FrenetData",
    "GeometryError",
    "IoError",
    "Jet",
    "JetVec3",
    "Line3",
    "Mesh",
    "ParseError",
    "RecoveredGenerator",
    "RuledSurface",
    "SingularPoint",
    "SingularityKind",
    "SingularityReport",
    "SurfaceClass",
    "SurfaceKind",
    "SurfaceSingularPoint",
    "TooFewSamples",
    "TorsionVanishes",
    "ZeroVector",
    "arc_length",
    "classify_developable",
    "classify_tangent_dev_singularity",
    "cone_surface",
    "conical_generator",
    "curvature_axis",
    "curvature_axis_surface",
    "developability_residual",
    "eval_curve",
    "eval_expr",
    "eval_jet",
    "eval_surface",
    "evolute",
    "find_curve_singularities",
    "format_curve",
    "frenet_apparatus",
    "gaussian_curvature",
    "gaussian_curvature_numeric",
    "generalized_cylinder",
    "involute",
    "is_planar_curve",
    "ode_residual",
    "osculating_center",
    "osculating_sphere_center",
    "parse_curve",
    "recover_generator",
    "regression_edge",
    "ruled_surface_from_curves",
    "singularity_report",
    "striction_curve",
    "surface_singular_locus",
    "tangent_developable",
    "tessellate",
    "write_circle_texture",
    "write_obj",
    "write_surface_csv",
]
