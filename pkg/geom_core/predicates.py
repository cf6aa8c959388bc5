"""
Robust sign predicates.

Both predicates evaluate the determinant in floating point first and only fall
back to exact rational arithmetic (fractions.Fraction) when the result lies
inside the forward error bound of the float evaluation.
"""
from enum import Enum
from fractions import Fraction

_EPS = 2.0 ** -53
_CCW_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_ERRBOUND = (10.0 + 96.0 * _EPS) * _EPS


class Orientation(Enum):
    CounterClockwise = 1
    Clockwise = -1
    Collinear = 0

    @classmethod
    def from_sign(cls, sign: int) -> "Orientation":
        if sign > 0:
            return cls.CounterClockwise
        if sign < 0:
            return cls.Clockwise
        return cls.Collinear


def _sign(value) -> int:
    return int(value > 0) - int(value < 0)


def orient_sign(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> int:
    """Sign of the signed area of triangle abc (+1 CCW, -1 CW, 0 collinear)."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    errbound = _CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > errbound or -det > errbound:
        return _sign(det)

    fax, fay, fbx, fby, fcx, fcy = (Fraction(v) for v in (ax, ay, bx, by, cx, cy))
    return _sign((fax - fcx) * (fby - fcy) - (fay - fcy) * (fbx - fcx))


def cross_sign(ux: float, uy: float, vx: float, vy: float) -> int:
    """Exact sign of the cross product u x v of two float vectors."""
    left = ux * vy
    right = uy * vx
    det = left - right
    # a single product each, so the error is bounded by one rounding per term
    errbound = 3.0 * _EPS * (abs(left) + abs(right))
    if det > errbound or -det > errbound:
        return _sign(det)
    return _sign(Fraction(ux) * Fraction(vy) - Fraction(uy) * Fraction(vx))


def orient(a, b, c) -> Orientation:
    """Orientation of the ordered triple (a, b, c)."""
    return Orientation.from_sign(orient_sign(a.x, a.y, b.x, b.y, c.x, c.y))


def in_circle_sign(a, b, c, d) -> int:
    """
    +1 if d lies strictly inside the circle through a, b, c (given CCW),
    -1 if strictly outside, 0 if cocircular.
    """
    adx, ady = a.x - d.x, a.y - d.y
    bdx, bdy = b.x - d.x, b.y - d.y
    cdx, cdy = c.x - d.x, c.y - d.y

    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    alift = adx * adx + ady * ady
    cdxady, adxcdy = cdx * ady, adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady)
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    errbound = _ICC_ERRBOUND * permanent
    if det > errbound or -det > errbound:
        return _sign(det)

    fa = [Fraction(a.x) - Fraction(d.x), Fraction(a.y) - Fraction(d.y)]
    fb = [Fraction(b.x) - Fraction(d.x), Fraction(b.y) - Fraction(d.y)]
    fc = [Fraction(c.x) - Fraction(d.x), Fraction(c.y) - Fraction(d.y)]
    exact = (
        (fa[0] ** 2 + fa[1] ** 2) * (fb[0] * fc[1] - fc[0] * fb[1])
        + (fb[0] ** 2 + fb[1] ** 2) * (fc[0] * fa[1] - fa[0] * fc[1])
        + (fc[0] ** 2 + fc[1] ** 2) * (fa[0] * fb[1] - fb[0] * fa[1])
    )
    return _sign(exact)
