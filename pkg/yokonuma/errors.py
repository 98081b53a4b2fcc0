"""Exception types raised by the yokonuma package."""


class YokonumaError(Exception):
    """Base class for all package errors."""


class PoleError(YokonumaError, ZeroDivisionError):
    """Evaluation of a rational function at a genuine pole.

    Args:
        point: the evaluation point
        multiplicity: order of vanishing of the denominator at ``point``
        cancelled: how many of those factors the numerator could absorb
        step: optional fusion step at which the pole was met
    """

    def __init__(self, point, multiplicity: int, cancelled: int = 0, step: int | None = None):
        self.point = point
        self.multiplicity = multiplicity
        self.cancelled = cancelled
        self.step = step
        where = f" at fusion step {step}" if step is not None else ""
        super().__init__(
            f"pole of order {multiplicity - cancelled} at u = {point}{where} "
            f"(factor (u - {point})^{multiplicity} in the denominator, "
            f"{cancelled} cancelled)"
        )


class NoSolutionError(YokonumaError, ValueError):
    """The linear system has no solution."""


class ConsistencyError(YokonumaError, RuntimeError):
    """An internal invariant failed. Seeing this is a bug."""


class ContextMismatchError(YokonumaError, ValueError):
    """Elements of different algebra contexts were combined."""


class SemisimplicityError(YokonumaError):
    """The parameters fail the semisimplicity criterion."""


class SizeLimitError(YokonumaError):
    """The requested computation exceeds the configured dimension guard."""


class SchemaError(YokonumaError, ValueError):
    """Malformed serialized data or parameters.

    Args:
        message: what is wrong
        location: JSON path of the offending value, e.g. ``terms[3].alpha[1]``
    """

    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{location}: {message}")
