class LyxError(Exception):
    """Base class for all errors raised by the package."""


class InvalidInput(LyxError):
    pass


class InvalidRange(LyxError):
    pass


class InvalidArguments(LyxError):
    pass
