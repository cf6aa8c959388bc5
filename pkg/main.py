"""
2-site Voronoi toolkit (main.py)

- Entry point: `main()` (run with `uv run python main.py ...` or the `bisite` script)
- Commands:
    compute      raster diagram of a points file -> P6 image + stats JSON
    verify       one desk-scale check (or `all`) -> JSON report on stdout
    bench        pruned vs full candidates, 1 vs N threads -> timing JSON
    generate     construction sets in the points file format
    arrangement  labeled supporting-line arrangement -> SVG

Exit codes:
  0 ok, 1 verification failed, 2 parse/validation error,
  3 degenerate input rejected by a module, 4 verification precondition failed

Environment variables (see config/Config.py):
  - BISITE_THREADS      : worker threads for raster evaluation (default: available cores)
  - BISITE_GRID_WIDTH   : default raster width (512)
  - BISITE_GRID_HEIGHT  : default raster height (512)
  - BISITE_SEED         : default seed (0)
  - LOG_LEVEL           : logging level (INFO)

Points files: UTF-8, one "x y" per line, '#' comments, blank lines ignored.
"""
import argparse
import sys
from typing import Optional

from pydantic import ValidationError

from cli.RunConfig import RunConfig
from cli.commands import COMMAND_HANDLERS
from config.Config import debug_print_config
from constructions import Provenance
from distances import parse_kind
from envelope_raster import Mode
from exceptions import GeometryError, InputParseError, PreconditionViolation
from logger.Logger import LOG
from verify import THEOREMS


def parse_grid(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 512x512, got '{text}'")


def parse_bbox(text: str) -> tuple[float, float, float, float]:
    try:
        xmin, ymin, xmax, ymax = (float(v) for v in text.split(","))
        return xmin, ymin, xmax, ymax
    except ValueError:
        raise argparse.ArgumentTypeError(f"bbox must look like xmin,ymin,xmax,ymax, got '{text}'")


def _raster_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--distance", dest="kind", type=parse_kind, help="circumradius | containing | viewangle | inradius | ccc-dist | ccc-area | ccc-perimeter | param-perimeter")
    p.add_argument("--c", type=float, help="parameter of param-perimeter (c >= -1)")
    p.add_argument("--grid", type=parse_grid, help="raster size WxH (default 512x512)")
    p.add_argument("--bbox", type=parse_bbox, help="xmin,ymin,xmax,ymax (default: site bbox inflated 25%% per side)")
    p.add_argument("--no-jitter", dest="jitter", action="store_false", default=None, help="sample exact cell centers")
    p.add_argument("--threads", type=int, help="worker threads (default BISITE_THREADS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bisite", description="2-site Voronoi diagrams: rasters, checks and constructions")
    parser.add_argument("--show-config", action="store_true", help="print the effective configuration and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("compute", help="raster diagram of a points file")
    p.add_argument("input")
    _raster_options(p)
    p.add_argument("--mode", type=Mode, choices=list(Mode))
    p.add_argument("--output", help="P6 image path")
    p.add_argument("--stats", help="stats JSON path")

    p = sub.add_parser("verify", help="run a desk-scale check")
    p.add_argument("theorem", choices=THEOREMS + ("all",))
    p.add_argument("--input", help="points file (default: random sites from --n/--seed)")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--multiplier", type=float, help="far-field radius in site diameters (default 1000)")
    _raster_options(p)

    p = sub.add_parser("bench", help="time pruning and thread scaling")
    p.add_argument("--input")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--mode", type=Mode, choices=list(Mode))
    p.add_argument("--repeats", type=int)
    _raster_options(p)

    p = sub.add_parser("generate", help="write a construction set")
    p.add_argument("construction", type=Provenance, choices=list(Provenance))
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--d", type=float, help="two-line distance (default 10)")
    p.add_argument("--spread", type=float, help="two-line intra-line spread (default 0.05)")
    p.add_argument("--output")

    p = sub.add_parser("arrangement", help="SVG of the labeled supporting-line arrangement")
    p.add_argument("input")
    p.add_argument("--output")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None and k not in ("show_config", "grid")}
    if getattr(args, "grid", None) is not None:
        values["width"], values["height"] = args.grid
    return RunConfig(**values)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.show_config:
        debug_print_config()
        if args.command is None:
            return 0
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2

    try:
        config = config_from_args(args)
        return COMMAND_HANDLERS[config.command](config)
    except (InputParseError, ValidationError) as e:
        LOG.error(f"Invalid input: {e}")
        return 2
    except PreconditionViolation as e:
        LOG.error(f"Precondition failed: {e}")
        return 4
    except GeometryError as e:
        LOG.error(f"Degenerate input: {type(e).__name__}: {e}")
        return 3
    except ValueError as e:
        LOG.error(f"Invalid argument: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
