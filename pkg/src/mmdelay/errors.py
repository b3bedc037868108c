"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A physical or numerical parameter is outside its allowed range."""


class UndefinedVisibilityError(ArithmeticError):
    """Both interferometer arms carry zero power."""


class GridTooSmallError(RuntimeError):
    """The sampling grid cannot resolve the field it is asked to hold.

    ``suggested`` carries a grid that would pass the check, when one can be
    computed.
    """

    def __init__(self, message, suggested=None):
        super().__init__(message)
        self.suggested = suggested


class ConfigError(ValueError):
    """A sweep configuration file or CLI override is malformed."""
