"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Raised when a distribution, rule, or scenario is mis-specified."""


class DomainError(ValueError):
    """Raised when a closed-form result is undefined for the given inputs."""


class NumericError(RuntimeError):
    """Raised when a numeric routine fails to converge."""
