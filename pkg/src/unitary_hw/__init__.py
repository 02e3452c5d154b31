"""Unitary highest weight parameters for su(p,q) and so*(2n) at integral infinitesimal character."""

from .errors import (
    CoordinateCapError,
    LimitExceededError,
    NotIntegralError,
    ParseError,
    UHWError,
    WrongCaseError,
)
from .hasse import HasseDiagram, YoungDiagram, build_hasse, edge_marks, to_dot, young_of
from .numeric import (
    SU,
    HalfInteger,
    Integrality,
    Parameter,
    SOStar,
    from_parameter,
    integrality_class,
    parse_coords,
    rho,
    to_parameter,
)
from .report import ClassificationResult, ScanReport, classify, from_json, scan_so, scan_su, to_json
from .so import (
    case_profile,
    classify_halfint_so,
    classify_integer_so,
    is_unitary_so,
    unitary_hasse_points_so,
    zero_structure,
)
from .su import (
    classify_regular_su,
    classify_singular_su,
    decompose_singular,
    is_unitary_su,
    string_profile,
    translation_cone_check,
)
from .weyl import (
    BarSplit,
    DominantParameter,
    SignedArrangement,
    dominant_representative,
    enumerate_so,
    enumerate_su,
    sign_change_count,
)

__version__ = "0.1.0"
