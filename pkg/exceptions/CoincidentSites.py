from .GeometryError import GeometryError

class CoincidentSites(GeometryError):
    """A site pair (p, q) has p = q."""
