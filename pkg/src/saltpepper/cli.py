"""Command line front end.

Exit codes: 0 success, 2 usage or configuration error, 3 I/O error,
4 malformed image data.
"""
import argparse
import sys

from . import bench
from .exceptions import (ImageValueError, NoiseSpecError, ParameterError,
                         PGMError, PipelineError, ShapeError)
from .filters import TABLE_FILTERS, available_filters
from .metrics import format_float, ief, mae, mse, psnr
from .noise import NoiseSpec, inject
from .pgm import read_pgm, write_pgm

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DATA = 0, 2, 3, 4


def _csv_list(cast):
    def parse(text):
        try:
            return [cast(t.strip()) for t in text.split(",") if t.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list: {text!r}") from None
    return parse


def _seed(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="saltpepper",
        description="Salt-and-pepper noise injection, removal and benchmarking.")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("P5", "P2"), default="P5",
                     help="PGM flavour for written images (default: P5)")
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--mdbptgmf-case12", choices=("paper", "mean"), default="paper",
                        help="all-0 / all-255 window rule of MDBPTGMF (default: paper)")
    options.add_argument("--recursive", action="store_true",
                        help="let 3x3 decision filters read already-restored neighbours")

    p = sub.add_parser("inject", parents=[fmt], help="add salt-and-pepper noise to a PGM")
    p.add_argument("--image", required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--salt-fraction", type=float, default=0.5)
    p.add_argument("--out", required=True)

    p = sub.add_parser("filter", parents=[fmt, options],
                       help="optionally noise an image, restore it, print metrics")
    p.add_argument("--image", required=True)
    p.add_argument("--filter", required=True,
                   help="one of: " + ", ".join(available_filters()))
    p.add_argument("--density", type=float, default=0.0,
                   help="noise density injected before filtering (default: 0)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", help="where to write the restored image")

    p = sub.add_parser("metrics", help="score a restored image against a reference")
    p.add_argument("--image", required=True, help="clean reference image")
    p.add_argument("--restored", required=True)
    p.add_argument("--noisy", help="noisy input, needed for IEF")

    p = sub.add_parser("sweep", parents=[options], help="density sweep to CSV")
    p.add_argument("--image", required=True)
    p.add_argument("--densities", type=_csv_list(float), default=list(bench.DEFAULT_DENSITIES))
    p.add_argument("--filters", type=_csv_list(str), default=list(TABLE_FILTERS))
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", required=True)
    return parser


def _cmd_inject(args):
    spec = NoiseSpec(args.density, args.seed, args.salt_fraction)
    record = inject(read_pgm(args.image), spec)
    write_pgm(record.noisy, args.out, format=args.format)
    print(f"corrupted {record.count} of {record.mask.size} pixels")


def _cmd_filter(args):
    row, _ = bench.run_single(args.image, args.filter, args.density, args.seed,
                              out_path=args.out, format=args.format,
                              mdbptgmf_case12=args.mdbptgmf_case12, recursive=args.recursive)
    sys.stdout.write(bench.format_csv([row]))


def _cmd_metrics(args):
    ref, restored = read_pgm(args.image), read_pgm(args.restored)
    print(f"mae,{format_float(mae(ref, restored))}")
    print(f"mse,{format_float(mse(ref, restored))}")
    print(f"psnr_db,{format_float(psnr(ref, restored))}")
    if args.noisy:
        print(f"ief,{format_float(ief(ref, read_pgm(args.noisy), restored))}")


def _cmd_sweep(args):
    cfg = bench.SweepConfig(image_path=args.image, output_path=args.out,
                            densities=args.densities, filter_ids=args.filters,
                            seed=args.seed, mdbptgmf_case12=args.mdbptgmf_case12,
                            recursive=args.recursive)
    rows = bench.run_sweep(cfg)
    print(f"wrote {len(rows)} rows to {args.out}")


_COMMANDS = {"inject": _cmd_inject, "filter": _cmd_filter,
             "metrics": _cmd_metrics, "sweep": _cmd_sweep}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (PipelineError, NoiseSpecError, ParameterError) as exc:
        print(f"saltpepper: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PGMError, ImageValueError, ShapeError) as exc:
        print(f"saltpepper: bad image data: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"saltpepper: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
