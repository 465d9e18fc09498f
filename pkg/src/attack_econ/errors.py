"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A model parameter is missing, non-finite, or out of bounds.

    ``field`` names the offending parameter when there is one.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class ScenarioFileError(Exception):
    """A scenario file is missing, unparseable, or violates the schema."""
