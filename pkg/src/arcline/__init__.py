"""arcline: planar curve synthesis maximizing the minimum turn radius.

Given two endpoints with prescribed tangent directions meeting at an
apex, construct the unique positive-curvature curve (one circular arc
plus one line segment) whose smallest radius of curvature is as large
as possible, together with the bounded-radius curve families, numerical
optimality certificates, a parabola baseline, constant-distance offsets
and SVG export.
"""

from .baselines import ComparisonReport, QuadraticBezier, bezier_min_radius, compare_report
from .certificates import (
    Certificate,
    frame_gap_profiles,
    make_certificate,
    support_min,
    tangent_intercepts,
    theta_phi_bound,
    zeta0_closed_form,
    zeta0_coefficients,
    zeta0_geometric,
    zeta_profile,
)
from .curves import (
    Arc,
    MembershipReport,
    PathBuilder,
    PiecewiseCurve,
    Segment,
    check_membership,
    curve_from_json,
    curve_to_json,
    heading,
    max_curvature,
    numeric_curvature,
    sample_polyline,
)
from .dubins import (
    CompositeCurve,
    DubinsCurve,
    SweepReport,
    composite_solve,
    dubins_curve,
    family_sweep,
    is_feasible_radius,
)
from .errors import (
    ArclineError,
    DegenerateInput,
    HypothesisViolated,
    IllPosedAngle,
    InternalError,
    InvalidInput,
    NoAdmissibleCurve,
    OutOfRange,
    RadiusNotAdmissible,
    UndefinedHeading,
)
from .geometry import Frame, Point2, Vec2, oriented_angle, principal_angle, rot90
from .instance import (
    ProblemInstance,
    instance_from_json,
    instance_from_tangents,
    instance_to_json,
    make_instance,
    random_instance,
    similarity_transform,
)
from .offsets import OffsetResult, offset
from .svg import to_svg
from .synthesis import OptimalSolution, arc_radius, illposed_demo, synthesize, tangency_oracle

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArclineError",
    "Certificate",
    "ComparisonReport",
    "CompositeCurve",
    "DegenerateInput",
    "DubinsCurve",
    "Frame",
    "HypothesisViolated",
    "IllPosedAngle",
    "InternalError",
    "InvalidInput",
    "MembershipReport",
    "NoAdmissibleCurve",
    "OffsetResult",
    "OptimalSolution",
    "OutOfRange",
    "PathBuilder",
    "PiecewiseCurve",
    "Point2",
    "ProblemInstance",
    "QuadraticBezier",
    "RadiusNotAdmissible",
    "Segment",
    "SweepReport",
    "UndefinedHeading",
    "Vec2",
    "arc_radius",
    "bezier_min_radius",
    "check_membership",
    "compare_report",
    "composite_solve",
    "curve_from_json",
    "curve_to_json",
    "dubins_curve",
    "family_sweep",
    "frame_gap_profiles",
    "heading",
    "illposed_demo",
    "instance_from_json",
    "instance_from_tangents",
    "instance_to_json",
    "is_feasible_radius",
    "make_certificate",
    "make_instance",
    "max_curvature",
    "numeric_curvature",
    "offset",
    "oriented_angle",
    "principal_angle",
    "random_instance",
    "rot90",
    "sample_polyline",
    "similarity_transform",
    "support_min",
    "synthesize",
    "tangency_oracle",
    "tangent_intercepts",
    "theta_phi_bound",
    "to_svg",
    "zeta0_closed_form",
    "zeta0_coefficients",
    "zeta0_geometric",
    "zeta_profile",
]
