class RectifiableError(ValueError):
    """Base class for degenerate-input errors raised by the analysis layers."""


class DegenerateCurve(RectifiableError):
    pass


class IsotropicLine(RectifiableError):
    pass


class LineHasNoEvolute(RectifiableError):
    pass


class NotRectifiable(RectifiableError):
    pass


class ZeroCubicDifferential(RectifiableError):
    pass
