"""Exception types shared across the library."""


class ArgentError(Exception):
    """Base class for all library errors."""


class ParseError(ArgentError):
    """Malformed input text; carries a line/column position when known."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}, col {self.col}: {self.message}"


class VocabularyMismatchError(ArgentError):
    """A formula or interpretation refers to variables outside its vocabulary."""


class UnknownArgumentError(ArgentError):
    """An argument identifier is not declared in the framework at hand."""


class ResourceLimitError(ArgentError):
    """A combinatorial search exceeded its configured size guard."""
