"""Exact rectifiability analysis for real rational plane curves."""

from .affine import AffineCubic, affine_cubic_diff, affine_rectify, graph_cubic
from .algebra import (
    I,
    GaussianRational,
    Poly,
    RadicalElement,
    RatFunc,
    count_real_roots,
    poly_gcd,
    radical_derivative,
    squarefree_decompose,
)
from .corpus import FIXTURES, run_corpus
from .differentials import Divisor, KDifferential, StratumSignature, divisor_of, stratum_of
from .errors import (
    DegenerateCurve,
    IsotropicLine,
    LineHasNoEvolute,
    NotRectifiable,
    RectifiableError,
    ZeroCubicDifferential,
)
from .geometry import (
    Circle,
    Degenerate,
    Line,
    Neither,
    PlaneCurve,
    RadicalCurve,
    Realization,
    arc_length_qdiff,
    classify_line_circle,
    euclidean_equivalent,
    evolute,
    evolute_of_radical,
    involutes,
    isotropic_split,
    real_divisor_check,
    realize_genus0,
)
from .integration import (
    Exact,
    NotExact,
    RadicalPrimitive,
    build_from_f,
    decompose_radicand,
    hermite_reduce,
    rectify,
    solve_radical_ansatz,
)
from .parser import ParseError, parse_expr
from .pluecker import evolute_counts, pluecker
from .report import AnalysisError, AnalysisReport, analyze
from .specfile import CurveSpec, load_curve_spec, parse_curve_spec

__version__ = "0.1.0"
