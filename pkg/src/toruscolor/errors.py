"""Exception types shared across the package."""


class ToruscolorError(Exception):
    """Base class for all package errors."""


class InputError(ToruscolorError, ValueError):
    """Malformed input: bad file, inconsistent rotation, unknown vertex, ..."""


class SearchBoundExceeded(ToruscolorError):
    """An exhaustive search was asked to run beyond its configured size bound."""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds search bound {bound}")


class HypothesisViolation(ToruscolorError):
    """A theorem hypothesis failed on the input.

    ``name`` identifies which one (e.g. ``"six_cycle"``, ``"k5_minus"``).
    """

    def __init__(self, name: str, detail: str = ""):
        self.name = name
        self.detail = detail
        super().__init__(f"hypothesis violated: {name}" + (f" ({detail})" if detail else ""))
