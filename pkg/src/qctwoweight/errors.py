class FieldMismatchError(ValueError):
    """Operands live in different fields."""


class EnumerationGuardError(RuntimeError):
    """Code has too many codewords to enumerate under the active guard."""


class ConstructionError(RuntimeError):
    """A builder produced a code whose measured parameters disagree with its claim."""
