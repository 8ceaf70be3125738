"""Exception types raised across the package."""


class ToricError(ValueError):
    """Base class for domain errors (bad input for a well-formed call)."""


class NotPositivelyGraded(ToricError):
    def __init__(self, msg="not positively graded"):
        super().__init__(msg)


class NotSimple(ToricError):
    def __init__(self, msg="toric ideal is not simple"):
        super().__init__(msg)


class CodimensionError(ToricError):
    pass


class NotInKernel(ToricError):
    pass


class MatrixFormatError(ToricError):
    pass
