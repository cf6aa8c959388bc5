from .GeometryError import GeometryError

class PreconditionViolation(GeometryError):
    """A verification precondition does not hold for the given input."""
