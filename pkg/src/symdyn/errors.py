class SymdynError(Exception):
    pass


class SpecError(SymdynError, ValueError):
    """Malformed alphabet, shift description, block code or file."""


class NonPrimitiveError(SpecError):
    pass


class EmptySubshiftError(SymdynError):
    """The described subshift has no points."""


class InadmissibleWindowError(SymdynError, KeyError):
    """A block rule was consulted on a window it is not defined on."""


class BudgetExceededError(SymdynError):
    pass
