from pathlib import Path

import numpy as np

from distances import SitePair
from geom_core import Point2
from logger.Logger import LOG
from utils.util import sha256_hex
from .models import RasterDiagram

UNDEFINED_COLOR = (255, 255, 255)
SITE_RADIUS_CELLS = 2


def pair_color(pair: SitePair) -> tuple[int, int, int]:
    digest = sha256_hex(f"{pair.i},{pair.j}")
    return int(digest[0:2], 16), int(digest[2:4], 16), int(digest[4:6], 16)


def render_rgb(raster: RasterDiagram, sites: list[Point2]) -> np.ndarray:
    """
    RGB image (top row = max y). Tie cells show their lexicographic winner;
    sites are overdrawn as black disks.
    """
    palette = np.array([pair_color(p) for p in raster.candidates] + [UNDEFINED_COLOR], dtype=np.uint8)
    index = np.where(raster.labels >= 0, raster.labels, len(raster.candidates))
    rgb = palette[index]

    grid = raster.grid
    height, width = raster.labels.shape
    rr, cc = np.mgrid[-SITE_RADIUS_CELLS:SITE_RADIUS_CELLS + 1, -SITE_RADIUS_CELLS:SITE_RADIUS_CELLS + 1]
    disk = rr ** 2 + cc ** 2 <= SITE_RADIUS_CELLS ** 2
    for s in sites:
        col = int(np.floor((s.x - grid.bbox[0]) / grid.dx))
        row = int(np.floor((s.y - grid.bbox[1]) / grid.dy))
        r = row + rr[disk]
        c = col + cc[disk]
        keep = (r >= 0) & (r < height) & (c >= 0) & (c < width)
        rgb[r[keep], c[keep]] = 0
    return rgb[::-1]


def write_ppm(path: str | Path, rgb: np.ndarray) -> None:
    """Binary P6 portable pixmap."""
    height, width = rgb.shape[:2]
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    with open(path, "wb") as f:
        f.write(header)
        f.write(np.ascontiguousarray(rgb, dtype=np.uint8).tobytes())
    LOG.info(f"Wrote {width}x{height} image to {path}")
