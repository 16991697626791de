"""Package entry point and version."""

from .diagram_core import (
    BasedPlanarCurve,
    GaussDiagram,
    PlanarCurve,
    Shadow,
    crossing_change,
    mirror,
    reverse,
    shadow,
)
from .gauss_codes import parse_gauss_code, parse_planar_curve, parse_shadow
from .planar import (
    checkerboard,
    compute_faces,
    induced_alternating,
    orient_even_rotation,
    orient_even_warping,
    orient_odd_black_right,
    orient_odd_warping,
    rotation_number,
)
from .polynomial import IntPolynomial, parse_polynomial
from .realization import realizability_check, realize_search
from .statesum import state_sum
from .verification import VerifyConfig, run_verification
from .warping import (
    classify,
    edge_degrees,
    warping_crossing_polynomial,
    warping_polynomial,
)

__version__ = "1.0.0"

__all__ = [
    "BasedPlanarCurve",
    "GaussDiagram",
    "PlanarCurve",
    "Shadow",
    "crossing_change",
    "mirror",
    "reverse",
    "shadow",
    "parse_gauss_code",
    "parse_planar_curve",
    "parse_shadow",
    "checkerboard",
    "compute_faces",
    "induced_alternating",
    "orient_even_rotation",
    "orient_even_warping",
    "orient_odd_black_right",
    "orient_odd_warping",
    "rotation_number",
    "IntPolynomial",
    "parse_polynomial",
    "realizability_check",
    "realize_search",
    "state_sum",
    "VerifyConfig",
    "run_verification",
    "classify",
    "edge_degrees",
    "warping_crossing_polynomial",
    "warping_polynomial",
]
