from typing import Optional


class ValidationError(ValueError):
    """Raised when a metric space or an instance violates one of its invariants."""


class InstanceParseError(ValidationError):
    def __init__(
            self,
            message: str,
            *,
            path: Optional[str] = None,
            line: Optional[int] = None,
            column: Optional[int] = None,
            field: Optional[str] = None
    ):
        """Malformed instance file.

        :param message:
                What went wrong
        :param path:
                Path of the file being parsed, if known
        :param line:
                1-based line of the syntax error, if the file is not valid JSON
        :param column:
                1-based column of the syntax error
        :param field:
                Dotted path of the offending field, e.g. "depots[2]"
        """
        context = []
        if path is not None:
            context.append(str(path))
        if line is not None:
            context.append('line {}'.format(line))
        if column is not None:
            context.append('column {}'.format(column))
        if field is not None:
            context.append('field "{}"'.format(field))
        super().__init__('{}: {}'.format(', '.join(context), message) if context else message)
        self.reason = message
        self.path = path
        self.line = line
        self.column = column
        self.field = field


class PreconditionError(ValueError):
    """Raised when an operation is called outside of its domain (e.g. Level partition on non-collinear depots)."""


class UnsupportedOperationError(Exception):
    """Raised for geodesic operations on spaces that have no canonical geodesic."""


class CapacityError(Exception):
    def __init__(self, message: str, *, limit: Optional[str] = None, value=None, allowed=None):
        """Exact oracle or enumeration would exceed its configured limit.

        :param message:
                Human readable explanation, including the suggested fallback
        :param limit:
                Name of the exceeded limit ("exact_cap" or "enumeration_budget")
        :param value:
                Requested size
        :param allowed:
                Configured limit
        """
        super().__init__(message)
        self.limit = limit
        self.value = value
        self.allowed = allowed


class GenerationError(Exception):
    """Raised when a random instance family exhausts its rejection budget."""
