"""Continuous Yao graphs on planar point sets: construction, spanning-ratio
analysis, adversarial generators and exact certificates for the dilation bound."""

from .errors import (
    CYaoError, CoincidentPoints, DimensionMismatch, DomainError, DuplicatePoints,
    EmptyInput, InvalidParameter, NoRealRoot, OutOfProvenRange, ParseError,
    PreconditionViolated,
)
from .geometry import (
    EPS_ANG, EPS_GP, TAU, GeneralPositionReport, Point, angle_at, as_points, ccw_gap,
    check_aperture, check_general_position, cw_gap, direction, dist, in_cone,
    normalize_angle, rotate,
)
from .graphs import (
    AngularGapPair, Graph, build_cyao, build_cyao_oracle, build_yao, edge_gaps, has_edge,
)
from .spanner import (
    SpannerReport, all_pairs_lengths, certified_ratio, connectivity, dilation_upper_bound,
    shortest_path_lengths, spanning_ratio,
)
from .polynomial import Polynomial, count_roots, isolate_real_roots, largest_real_root, sturm_sequence
from .certificates import (
    P_CERT, Certificate, InductiveSetParams, certificate_suite, inductive_contains, named_points,
    quartic_residual, verify_case1, verify_case2, verify_lemma1, verify_lemma2,
)
from .generators import (
    GenSpec, gen_double_polygon, gen_ellipse_chain, gen_two_segments, gen_uniform, generate, perturb,
)

__version__ = "0.1.0"
