"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A parameter is outside its admissible range."""


class PhysicalityError(ValueError):
    """Inputs are individually valid but describe an unphysical configuration."""


class NumericsError(RuntimeError):
    """A numerical routine failed to converge or left its trusted domain."""
