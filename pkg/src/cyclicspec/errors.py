"""Exception hierarchy shared by every module."""


class CycspecError(Exception):
    pass


class VariableMismatch(CycspecError, ValueError):
    """Polynomials in different variables were combined."""


class PreconditionError(CycspecError, ValueError):
    pass


class UnsupportedRegime(CycspecError):
    """Input lies outside the regime the construction is defined for
    (singular or reducible curve, unequal dimension vector, ...)."""


class LoopRelationError(PreconditionError):
    """Loop composites around the cyclic quiver do not equal the t-action."""


class CharacteristicError(UnsupportedRegime):
    pass


class RetryBudgetExhausted(CycspecError):
    pass
