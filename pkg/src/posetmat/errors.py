"""Exception types shared across the package."""


class PosetMatError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(PosetMatError):
    """A binary matrix is not a poset matrix."""


class NotReflexive(ValidationError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"diagonal entry ({i},{i}) is 0, expected 1")


class NotLowerTriangular(ValidationError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"entry ({i},{j}) above the diagonal is 1, expected 0")


class TransitivityViolation(ValidationError):
    def __init__(self, i, j, k):
        self.i, self.j, self.k = i, j, k
        super().__init__(
            f"a[{i},{j}]=1 and a[{j},{k}]=1 but a[{i},{k}]=0"
        )


class IndexOutOfRange(PosetMatError):
    pass


class DimensionMismatch(PosetMatError):
    pass


class OrderMismatch(PosetMatError):
    pass


class PreconditionViolated(PosetMatError):
    pass


class RequiresDistinctIndices(PosetMatError):
    pass


class ResourceLimit(PosetMatError):
    pass


class ParseError(PosetMatError):
    def __init__(self, line, column, reason):
        self.line, self.column, self.reason = line, column, reason
        super().__init__(f"line {line}, column {column}: {reason}")
