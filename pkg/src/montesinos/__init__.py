"""Exact crossing numbers and edgepath twist bounds for Montesinos knots."""
from .crossing import CrossingReport, crossing_number, tangle_crossings
from .diagram import (
    Direction,
    Edge,
    EdgeKind,
    Edgepath,
    PathType,
    Vertex,
    classify_type,
    edgepath_length,
    edgepath_twist,
    enumerate_basic_edgepaths,
    farey_parents,
    is_minimal,
    monotone_basic_edgepath,
    parse_edgepath,
    rational_point,
    vertex_coords,
)
from .harness import TheoremRecord, check_theorem, sweep
from .model import (
    FormKind,
    InvalidTuple,
    IntegralTangle,
    InfiniteTangle,
    MontesinosTuple,
    NotAKnot,
    ReducedForm,
    TooFewTangles,
    is_alternating_form,
    normalize,
    validate_knot,
)
from .rationals import (
    ContinuedFraction,
    continued_fraction,
    eval_continued_fraction,
    format_fraction,
    mirror,
    parse_fraction,
    reduce,
)
from .systems import (
    EdgepathSystem,
    InconsistentSystem,
    TwistBounds,
    diameter_bound,
    enumerate_systems,
    monotone_system,
    system_twist,
    twist_bounds,
)

__version__ = "0.1.0"
