"""Lê numbers of Newton non-degenerate germs from their Newton diagrams."""
from .errors import (ConsistencyError, HypothesisViolation, InconclusiveError,
                     InputError, LeNewtonError, PolynomialSyntaxError,
                     PurePowerError, StabilizationError, TriangulationError)
from .geometry import (Face, NewtonDiagram, compact_faces, face_function,
                       is_convenient, m_bound, restrict, support_data)
from .lenumbers import (CompareReport, ExponentPlan, LeResult, choose_exponents,
                        compare, consistency_check, estimate_critical_dimension,
                        euler_characteristic, le_numbers, plan_from_alphas, run)
from .newton import (INFINITE, NewtonNumber, classify, modified_newton_number,
                     newton_number, newton_number_convenient, reduce_simplex,
                     special_modified_newton_number)
from .poly import Polynomial, augment, parse_polynomial, pure_power_indices
from .triangulate import (ConeDecomposition, Simplex, cone_volume, decompose,
                          simplex_volume, triangulate_cone)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "HypothesisViolation",
    "InconclusiveError",
    "InputError",
    "LeNewtonError",
    "PolynomialSyntaxError",
    "PurePowerError",
    "StabilizationError",
    "TriangulationError",
    "Face",
    "NewtonDiagram",
    "compact_faces",
    "face_function",
    "is_convenient",
    "m_bound",
    "restrict",
    "support_data",
    "CompareReport",
    "ExponentPlan",
    "LeResult",
    "choose_exponents",
    "compare",
    "consistency_check",
    "estimate_critical_dimension",
    "euler_characteristic",
    "le_numbers",
    "plan_from_alphas",
    "run",
    "INFINITE",
    "NewtonNumber",
    "classify",
    "modified_newton_number",
    "newton_number",
    "newton_number_convenient",
    "reduce_simplex",
    "special_modified_newton_number",
    "Polynomial",
    "augment",
    "parse_polynomial",
    "pure_power_indices",
    "ConeDecomposition",
    "Simplex",
    "cone_volume",
    "decompose",
    "simplex_volume",
    "triangulate_cone",
]
