"""Exception hierarchy shared by every module of the package."""


class CycloError(ValueError):
    """Base class for all errors raised by cyclolc."""


class InvalidInput(CycloError):
    pass


class NotAUnit(CycloError):
    pass


class InvalidOrder(CycloError):
    pass


class InvalidGenerator(CycloError):
    pass


class InvalidModulus(CycloError):
    pass


class FormulaInconsistency(CycloError):
    """A closed-form table entry came out non-integral or negative."""


class InvariantViolation(CycloError):
    pass


class Inapplicable(CycloError):
    """A check was requested outside the hypotheses under which it is stated."""


class TooLarge(CycloError):
    pass
