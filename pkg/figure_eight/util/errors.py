class CollisionError(ValueError):
    """Raised when two bodies coincide, or get closer than an allowed floor."""

    def __init__(self, message: str, separation: float = 0.0) -> None:
        super().__init__(message)
        self.separation = separation
        return


class ConvergenceError(RuntimeError):
    """Raised when an iterative procedure does not reach its tolerance."""

    def __init__(self, message: str, best: object = None, gap: float = float("nan")):
        super().__init__(message)
        self.best = best
        self.gap = gap
        return


class IntegrationError(RuntimeError):
    """Raised when the ODE integrator cannot continue."""

    def __init__(self, message: str, time: float = float("nan")) -> None:
        super().__init__(message)
        self.time = time
        return


class JunctionError(RuntimeError):
    """Raised when two assembled arcs do not match smoothly."""

    def __init__(self, message: str, mismatch: float = float("nan")) -> None:
        super().__init__(message)
        self.mismatch = mismatch
        return


class StageError(RuntimeError):
    """Raised by the pipeline when one of its stages fails."""

    def __init__(self, message: str, stage: str = "") -> None:
        super().__init__(message)
        self.stage = stage
        return
