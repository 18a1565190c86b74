"""Exception types shared across the package."""


class HullmapError(Exception):
    """Base class for every failure raised by this package."""


class OffsetsParseError(HullmapError, ValueError):
    """An offsets file could not be tokenized."""


class SectionValidationError(HullmapError, ValueError):
    """Parsed points violate a section invariant."""


class DegenerateSectionError(SectionValidationError):
    """Breadth or draft of a section is not strictly positive."""


class DegenerateNormalError(HullmapError, ValueError):
    """The secant through neighbouring points has zero length."""


class DimensionMismatchError(HullmapError, ValueError):
    """Inputs that must share a length do not."""


class ConfigurationError(HullmapError, ValueError):
    """A fit or assembly was requested with an unusable parameter count."""


class SingularSystemError(HullmapError, ArithmeticError):
    """A pivot fell below the singularity threshold during elimination."""


class FitAbortError(HullmapError, RuntimeError):
    """The angle assignment lost both of its leading anchor points."""


class SearchFailedError(HullmapError, RuntimeError):
    """No coefficient count converged at the loosest tolerance."""
