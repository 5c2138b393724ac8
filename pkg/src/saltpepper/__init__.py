"""Salt-and-pepper noise removal for 8-bit grayscale images.

Decision-based 3x3 filters, their two-stage cascades, the comparison
baselines, a seeded noise injector, restoration metrics and a density-sweep
benchmark.
"""
from .filters import (DBPTGMF, DBUTMF, MDBPTGMF, MDBUTMF, TABLE_FILTERS, UTMF,
                      UTMP, AdaptiveMedianFilter, Cascade, DecisionMedianFilter,
                      MedianFilter, amf, available_filters, cascade, dbptgmf,
                      dbutmf, dmf, dmf_utmf, dmf_utmp, make_filter, mdbptgmf,
                      mdbutmf, median_filter, pa1, pa2, utmf, utmp)
from .image import Window3, extract_window3, mean_of, median_of, pixel_is_noisy
from .metrics import INFINITE, MetricsRow, ief, mae, mse, psnr
from .noise import CorruptionRecord, NoiseSpec, SaltPepperNoise, inject
from .pgm import read_pgm, write_pgm

__version__ = "0.1.0"
