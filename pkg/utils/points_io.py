"""
Points file format: UTF-8 text, one point per line as "x y" separated by
whitespace; '#' starts a comment; blank lines are ignored.
"""
import math
from pathlib import Path

from exceptions import InputParseError
from geom_core import Point2
from logger.Logger import LOG


def parse_points(text: str, source: str = "<string>") -> list[Point2]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputParseError(f"{source}:{lineno}: expected 'x y', got {raw.strip()!r}")
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise InputParseError(f"{source}:{lineno}: non-numeric coordinate in {raw.strip()!r}")
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InputParseError(f"{source}:{lineno}: coordinates must be finite")
        points.append(Point2(x, y))
    return points


def read_points(path: str | Path) -> list[Point2]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputParseError(f"cannot read {path}: {e}")
    points = parse_points(text, source=str(path))
    LOG.info(f"Read {len(points)} points from {path}")
    return points


def format_points(points: list[Point2], header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"{p.x!r} {p.y!r}" for p in points)
    return "\n".join(lines) + "\n"


def write_points(path: str | Path, points: list[Point2], header: str | None = None) -> None:
    Path(path).write_text(format_points(points, header), encoding="utf-8")
    LOG.info(f"Wrote {len(points)} points to {path}")
