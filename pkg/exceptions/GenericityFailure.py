from .GeometryError import GeometryError

class GenericityFailure(GeometryError):
    """A construction could not be made generic within the retry budget."""
