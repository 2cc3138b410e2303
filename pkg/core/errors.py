class DomainError(ValueError):
    """An input outside the domain where an operation is defined."""


class VerificationFailure(AssertionError):
    """An identity that must hold exactly (or within tolerance) did not."""


class ZeroSearchError(DomainError):
    def __init__(self, requested: int, found: int, xmax: float):
        self.requested = requested
        self.found = found
        self.xmax = xmax
        super().__init__(
            f"found {found} zero(s) below xmax={xmax}, {requested} requested"
        )


class ConfigError(ValueError):
    """Invalid configuration (env file, environment variable or CLI flag)."""
