"""Exception hierarchy for pipeline failures (distinct from argument errors)."""


class RbfPielmError(Exception):
    """Base class for numerical pipeline failures."""


class UnderdeterminedSystemError(RbfPielmError):
    """Raised when the collocation system has no more rows than unknowns."""


class AssemblyError(RbfPielmError):
    """Raised when the assembled system contains non-finite entries."""


class SolveError(RbfPielmError):
    """Raised when the least-squares solve fails numerically."""


class RankZeroError(SolveError):
    """Raised when every singular value falls below the truncation cutoff."""


class ConfigError(ValueError):
    """Raised for unparseable or inconsistent run configuration."""
