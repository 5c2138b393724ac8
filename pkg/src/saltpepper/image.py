"""Grayscale raster helpers: 3x3 windows, noise test and rounded statistics.

Images are 2-D ``uint8`` numpy arrays indexed ``img[row, col]``; the
height is ``shape[0]`` and the width ``shape[1]``. Windows at the border use
replicate (clamp-to-edge) padding, so a window never contains a value that is
absent from the image.

Two flavours of each statistic live here. ``median_of`` / ``mean_of`` work on
a single list of ints. The ``batch_*`` functions work on an ``(n, 9)`` array
of windows at once and are what the filters run on.
"""
from dataclasses import dataclass

import numpy as np

from ._validation import check_image
from .exceptions import CoordinateError, DomainError

SALT = 255
PEPPER = 0


@dataclass(frozen=True)
class Window3:
    """The nine values of a 3x3 neighbourhood in row-major order."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if len(vals) != 9:
            raise DomainError(f"a 3x3 window holds 9 values, got {len(vals)}")
        if any(v < 0 or v > 255 for v in vals):
            raise DomainError("window values must lie in [0, 255]")
        object.__setattr__(self, "values", vals)

    @property
    def center(self):
        return self.values[4]


def extract_window3(img, row, col):
    img = check_image(img)
    h, w = img.shape
    if not (0 <= row < h and 0 <= col < w):
        raise CoordinateError(f"({row}, {col}) outside {h}x{w} image")
    rows = np.clip(np.arange(row - 1, row + 2), 0, h - 1)
    cols = np.clip(np.arange(col - 1, col + 2), 0, w - 1)
    return Window3(tuple(img[np.ix_(rows, cols)].ravel().tolist()))


def pixel_is_noisy(v):
    return v == PEPPER or v == SALT


def _round_half_up(num, den):
    # floor(num/den + 1/2) for non-negative integers
    return (2 * num + den) // (2 * den)


def median_of(values):
    """Sample median rounded to an integer, halves rounding up.

    >>> median_of([80, 90, 100, 110])
    95
    """
    vals = sorted(int(v) for v in values)
    n = len(vals)
    if n == 0:
        raise DomainError("median of an empty list")
    if n % 2:
        return vals[n // 2]
    return _round_half_up(vals[n // 2 - 1] + vals[n // 2], 2)


def mean_of(values):
    vals = [int(v) for v in values]
    if not vals:
        raise DomainError("mean of an empty list")
    return _round_half_up(sum(vals), len(vals))


def noisy_windows(img):
    """Coordinates of extreme-valued pixels and their ``(n, 9)`` windows."""
    rows, cols = np.nonzero((img == PEPPER) | (img == SALT))
    padded = np.pad(img, 1, mode="edge")
    dr, dc = np.divmod(np.arange(9), 3)
    windows = padded[rows[:, None] + dr, cols[:, None] + dc]
    return (rows, cols), windows


# -- batch statistics over (n, 9) uint8 windows -------------------------------

def batch_median(windows):
    return np.sort(windows, axis=1)[:, 4]


def batch_mean(windows):
    total = windows.sum(axis=1, dtype=np.int64)
    return ((2 * total + 9) // 18).astype(np.uint8)


def _trim(windows):
    keep = (windows != PEPPER) & (windows != SALT)
    return keep, keep.sum(axis=1)


def batch_trimmed_median(windows):
    """Median of the values strictly inside (0, 255), per window.

    Rows whose trimmed set is empty get 0; callers mask them out.
    """
    keep, count = _trim(windows)
    # removed entries sort past every kept one
    ranked = np.sort(np.where(keep, windows.astype(np.int16), 256), axis=1)
    idx = np.arange(len(windows))
    lo = ranked[idx, np.maximum(count - 1, 0) // 2]
    hi = ranked[idx, count // 2]
    out = (lo.astype(np.int32) + hi + 1) // 2
    return np.where(count > 0, out, 0).astype(np.uint8), count


def batch_trimmed_mean(windows):
    keep, count = _trim(windows)
    total = np.where(keep, windows, 0).sum(axis=1, dtype=np.int64)
    safe = np.maximum(count, 1)
    out = (2 * total + safe) // (2 * safe)
    return np.where(count > 0, out, 0).astype(np.uint8), count


def batch_trimmed_midpoint(windows):
    keep, count = _trim(windows)
    w = windows.astype(np.int16)
    lo = np.where(keep, w, 256).min(axis=1)
    hi = np.where(keep, w, -1).max(axis=1)
    out = (lo + hi + 1) // 2
    return np.where(count > 0, out, 0).astype(np.uint8), count


def batch_midpoint(windows):
    lo = windows.min(axis=1).astype(np.int16)
    hi = windows.max(axis=1).astype(np.int16)
    return ((lo + hi + 1) // 2).astype(np.uint8)
