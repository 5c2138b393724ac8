"""Restoration quality measures: MAE, MSE, PSNR and IEF.

Error sums are accumulated exactly in int64 and divided once. A perfect
restoration yields ``math.inf`` for PSNR and IEF.
"""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_image, check_same_shape

INFINITE = math.inf
PEAK_SQUARED = 255 ** 2


def _pair(reference, test):
    reference = check_image(reference, name="reference")
    test = check_image(test, name="test")
    check_same_shape(reference, test)
    return reference.astype(np.int64), test.astype(np.int64)


def abs_error_sum(reference, test):
    a, b = _pair(reference, test)
    return int(np.abs(a - b).sum())


def squared_error_sum(reference, test):
    a, b = _pair(reference, test)
    d = a - b
    return int((d * d).sum())


def mae(reference, test):
    return abs_error_sum(reference, test) / np.asarray(reference).size


def mse(reference, test):
    return squared_error_sum(reference, test) / np.asarray(reference).size


def psnr(reference, test):
    err = mse(reference, test)
    if err == 0:
        return INFINITE
    return 10 * math.log10(PEAK_SQUARED / err)


def ief(reference, noisy, restored):
    """Image enhancement factor: noisy squared error over restored squared error.

    1.0 when both are zero, ``inf`` when only the restored error is zero.
    """
    reference = check_image(reference, name="reference")
    check_same_shape(reference, check_image(noisy, name="noisy"),
                     check_image(restored, name="restored"))
    before = squared_error_sum(reference, noisy)
    after = squared_error_sum(reference, restored)
    if after == 0:
        return 1.0 if before == 0 else INFINITE
    return before / after


@dataclass(frozen=True)
class MetricsRow:
    density: float
    filter_id: str
    mae: float
    psnr_db: float
    ief: float

    @classmethod
    def compute(cls, density, filter_id, reference, noisy, restored):
        return cls(density, filter_id, mae(reference, restored),
                   psnr(reference, restored), ief(reference, noisy, restored))

    def as_csv_fields(self):
        return [format_float(self.density), self.filter_id, format_float(self.mae),
                format_float(self.psnr_db), format_float(self.ief)]


def format_float(x):
    if math.isinf(x):
        return "inf"
    return f"{x:.4f}"
