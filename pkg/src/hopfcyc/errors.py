"""Exception types shared across the package."""


class HopfCycError(Exception):
    pass


class SingularMatrix(HopfCycError):
    def __init__(self, msg="matrix is singular", rank=None, shape=None):
        super().__init__(msg)
        self.rank = rank
        self.shape = shape


class NotWellDefined(HopfCycError):
    """A map failed to descend to a quotient or to land in a subspace.

    ``witness`` is a json-friendly dict naming the offending input column
    and the residual vector.
    """

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotAGroup(HopfCycError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotGalois(HopfCycError):
    def __init__(self, msg, source_dim=None, target_dim=None, rank=None):
        super().__init__(msg)
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.rank = rank


class NotCoideal(HopfCycError):
    pass


class NotSubalgebra(HopfCycError):
    pass


class ParseError(HopfCycError):
    def __init__(self, msg, position=None):
        if position is not None:
            msg = f"{position}: {msg}"
        super().__init__(msg)
        self.position = position


class ValidationError(HopfCycError):
    def __init__(self, msg, check=None):
        super().__init__(msg)
        self.check = check


class UnsupportedCommand(HopfCycError):
    pass
