from pathlib import Path
from xml.sax.saxutils import escape

from geom_core import Point2
from logger.Logger import LOG
from envelope_raster import pair_color
from .models import Arrangement

_SIZE = 800.0


def arrangement_to_svg(arr: Arrangement, sites: list[Point2]) -> str:
    xmin, ymin, xmax, ymax = arr.box
    scale = _SIZE / max(xmax - xmin, ymax - ymin)
    width, height = (xmax - xmin) * scale, (ymax - ymin) * scale

    def tx(x, y):
        return (x - xmin) * scale, (ymax - y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">'
    ]
    for face in arr.faces:
        points = " ".join("{:.3f},{:.3f}".format(*tx(x, y)) for x, y in face.polygon)
        fill = "#eeeeee" if face.label is None else "#{:02x}{:02x}{:02x}".format(*pair_color(face.label))
        parts.append(f'<polygon points="{points}" fill="{fill}" stroke="#333333" stroke-width="0.5"/>')
    for face in arr.faces:
        if face.label is None:
            continue
        x, y = tx(*face.representative)
        text = f"({face.label.i},{face.label.j}){'*' if face.tie else ''}"
        parts.append(f'<text x="{x:.2f}" y="{y:.2f}" font-size="10" text-anchor="middle">{escape(text)}</text>')
    for s in sites:
        x, y = tx(s.x, s.y)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path: str | Path, arr: Arrangement, sites: list[Point2]) -> None:
    Path(path).write_text(arrangement_to_svg(arr, sites), encoding="utf-8")
    LOG.info(f"Wrote arrangement SVG ({len(arr.faces)} faces) to {path}")
