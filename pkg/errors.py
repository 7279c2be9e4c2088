"""Exception hierarchy. Each error knows the CLI exit code it maps to."""


class DfiError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code: int = 3


class InputError(DfiError):
    """Malformed user input: pmf files, family specs, grids, corpus sizes."""

    exit_code = 2


class ParameterError(InputError):
    """A family parameter or tolerance is out of range or unreachable."""


class InvalidPmfError(InputError):
    """A pmf failed validation and cannot be used downstream."""


class PreconditionError(InputError):
    """An operation was called outside its documented precondition."""


class InconsistencyError(DfiError):
    """A computed result contradicts a proved statement; indicates a bug."""

    exit_code = 3
