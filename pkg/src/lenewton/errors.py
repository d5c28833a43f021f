"""Exception hierarchy.

Every error carries a short machine-readable ``reason`` string which the
command-line front-end copies into its reports.
"""


class LeNewtonError(Exception):
    reason = "error"


class InputError(LeNewtonError, ValueError):
    """The input is malformed or outside the supported class of germs."""

    reason = "invalid_input"


class PolynomialSyntaxError(InputError):
    reason = "syntax_error"

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.position = position


class HypothesisViolation(LeNewtonError):
    """A hypothesis of the Lê-number formulas fails for this germ."""

    reason = "hypothesis_violation"


class PurePowerError(HypothesisViolation):
    """A pure power z_i^a with i <= d occurs in f."""

    reason = "pure_power_term"


class StabilizationError(LeNewtonError):
    reason = "stabilization_failure"


class InconclusiveError(LeNewtonError):
    reason = "inconclusive"


class ConsistencyError(LeNewtonError):
    reason = "internal_inconsistency"


class TriangulationError(LeNewtonError):
    reason = "triangulation_failure"
