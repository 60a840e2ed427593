"""Exception types shared across the package."""


class StatelError(Exception):
    """Base class for all errors raised by this package."""


class DistributionError(StatelError):
    """A weight map is not a valid finite probability distribution."""


class DomainMismatchError(StatelError):
    """Two distributions being compared are declared over different outcome sets."""


class ModelError(StatelError):
    """A model document violates the schema or a model invariant.

    ``path`` locates the offending entry inside the document,
    e.g. ``"worlds.w0"`` or ``"states.s1.assign.x"``.
    """

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class FormulaParseError(StatelError):
    """Syntax error in a formula string, with position and expectations."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        hint = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{line}:{column}: {message}{hint}")


class SignatureError(StatelError):
    """A formula refers to predicates, variables, or agents a model does not declare."""


class UnknownWorldError(StatelError):
    """A world id is not part of the model (or not resolvable by an explicit relation)."""


class MechanismError(StatelError):
    """A mechanism table is malformed or too large to encode explicitly."""
