"""Density sweeps: inject, restore, score, write CSV."""
import csv
import io
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .exceptions import NoiseSpecError
from .filters import TABLE_FILTERS, check_pipeline, make_filter
from .metrics import MetricsRow
from .noise import NoiseSpec, inject
from .pgm import read_pgm, write_pgm

CSV_HEADER = ("density", "filter", "mae", "psnr_db", "ief")
DEFAULT_DENSITIES = tuple(round(0.1 * i, 1) for i in range(1, 10))
_MASK64 = (1 << 64) - 1


def splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def density_seed(seed, index):
    """Seed for the ``index``-th density of a sweep: ``seed XOR splitmix64(index)``.

    Every filter at that density sees the same noisy image.
    """
    return (seed ^ splitmix64(index)) & _MASK64


def thread_count():
    """Worker threads for sweeps: CPU count, capped by ``SALTPEPPER_THREADS``."""
    n = os.cpu_count() or 1
    cap = os.environ.get("SALTPEPPER_THREADS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


@dataclass
class SweepConfig:
    image_path: str
    output_path: str
    densities: tuple = DEFAULT_DENSITIES
    filter_ids: tuple = TABLE_FILTERS
    seed: int = 0
    mdbptgmf_case12: str = "paper"
    recursive: bool = False
    threads: int = None

    def __post_init__(self):
        self.densities = tuple(self.densities)
        if not self.densities:
            raise NoiseSpecError("at least one density is required")
        for d in self.densities:
            if not isinstance(d, (int, float)) or not 0 < d <= 1:
                raise NoiseSpecError(f"sweep densities must lie in (0, 1], got {d!r}")
        self.filter_ids = tuple(check_pipeline(self.filter_ids))
        NoiseSpec(0.0, self.seed)  # validates the seed


def sweep_rows(image, densities, filter_ids, seed=0, threads=1, **options):
    """Yield one :class:`MetricsRow` per (density, filter), density-major.

    ``options`` are forwarded to :func:`~saltpepper.filters.make_filter`.
    """
    filters = [(fid, make_filter(fid, **options)) for fid in filter_ids]
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for index, density in enumerate(densities):
            noisy = inject(image, NoiseSpec(density, density_seed(seed, index))).noisy

            def score(item):
                fid, flt = item
                return MetricsRow.compute(density, fid, image, noisy, flt.transform(noisy))

            yield from (pool.map(score, filters) if pool else map(score, filters))
    finally:
        if pool:
            pool.shutdown()


def format_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv_fields())
    return buf.getvalue()


def run_sweep(cfg):
    """Run the sweep described by ``cfg`` and write its CSV atomically.

    Returns the list of rows. On any failure no output file is left behind.
    """
    image = read_pgm(cfg.image_path)
    threads = cfg.threads if cfg.threads is not None else thread_count()
    rows = list(sweep_rows(image, cfg.densities, cfg.filter_ids, cfg.seed, threads,
                           mdbptgmf_case12=cfg.mdbptgmf_case12, recursive=cfg.recursive))
    out = Path(cfg.output_path)
    fd, tmp = tempfile.mkstemp(prefix=out.name + ".", suffix=".part",
                               dir=out.parent if str(out.parent) else ".")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(format_csv(rows))
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return rows


def run_single(image_path, filter_id, density, seed=0, out_path=None,
               format="P5", **options):
    """Noise one image, restore it with one filter and score the result.

    The restored image is written to ``out_path`` when given. Returns the
    :class:`MetricsRow` and the restored array.
    """
    flt = make_filter(filter_id, **options)
    image = read_pgm(image_path)
    noisy = inject(image, NoiseSpec(density, seed)).noisy
    restored = flt.transform(noisy)
    if out_path is not None:
        write_pgm(restored, out_path, format=format)
    return MetricsRow.compute(density, filter_id, image, noisy, restored), restored
