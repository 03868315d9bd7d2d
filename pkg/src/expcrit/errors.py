"""Exception hierarchy shared by every module of the package."""


class ExpCritError(Exception):
    """Base class for all errors raised by expcrit."""


class CapExceeded(ExpCritError):
    """A desk-scale cap (elements, lattice, cosets, isomorphism) was hit."""

    def __init__(self, what, limit, message=None):
        self.what = what
        self.limit = limit
        super().__init__(message or f"{what} exceeds cap {limit}")


class DegreeMismatch(ExpCritError):
    pass


class NotAHomomorphism(ExpCritError):
    """Raised with the first violated (element, generator) pair."""

    def __init__(self, element, generator, message=None):
        self.element = element
        self.generator = generator
        super().__init__(
            message
            or f"images do not define a homomorphism: relation fails at element {element}, generator {generator}"
        )


class ActionError(ExpCritError):
    """An action does not give an automorphism, or its order is wrong."""


class NotNormal(ExpCritError):
    pass


class NotAPGroup(ExpCritError):
    pass


class PreconditionViolated(ExpCritError):
    """A constructor precondition failed; ``check`` names which one."""

    def __init__(self, check, message=None):
        self.check = check
        super().__init__(message or f"precondition violated: {check}")


class NoSuchOrder(ExpCritError):
    pass


class NoSuchAction(ExpCritError):
    pass


class SearchExhausted(ExpCritError):
    pass


class IncompleteTable(ExpCritError):
    pass


class SpecSyntaxError(ExpCritError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
