"""Exception types shared across the toolkit.

Domain violations (negative energies, malformed parameters) raise plain
ValueError; the classes below cover numerical failure modes only.
"""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap before meeting tolerance."""


class DivergenceError(RuntimeError):
    """A bracket expansion ran past the representable range without enclosing
    a solution."""


class PrecisionError(RuntimeError):
    """Quadrature refinement was exhausted before the requested tolerance.

    Carries the best estimate computed so far together with its error
    estimate, so callers can decide whether the partial answer is usable.
    """

    def __init__(self, message: str, best_estimate: float, error_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
