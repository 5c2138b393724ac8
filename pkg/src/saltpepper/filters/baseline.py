"""Comparison filters: plain and adaptive median, and the earlier
decision-based trimmed filters."""
import numpy as np
from scipy import ndimage

from .._validation import check_odd_window
from ..image import (PEPPER, SALT, batch_median, batch_mean, batch_midpoint,
                     batch_trimmed_mean, batch_trimmed_median,
                     batch_trimmed_midpoint)
from ._base import DecisionFilter, ImageFilter


class MedianFilter(ImageFilter):
    """Unconditional k x k median with replicate padding."""

    def __init__(self, k=3):
        self.k = k

    def _filter(self, img):
        k = check_odd_window(self.k)
        return ndimage.median_filter(img, size=k, mode="nearest")


class AdaptiveMedianFilter(ImageFilter):
    """Two-level adaptive median filter (Hwang and Haddad).

    Starting from 3x3, a window is accepted when its median lies strictly
    between its min and max; the pixel then keeps its own value if that is
    also strictly inside (min, max), and takes the median otherwise. A
    rejected window grows by 2 up to ``max_window``; pixels never accepted take
    the median of the largest window.
    """

    def __init__(self, max_window=11):
        self.max_window = max_window

    def _filter(self, img):
        max_window = check_odd_window(self.max_window)
        out = img.copy()
        pending = np.ones(img.shape, dtype=bool)
        for k in range(3, max_window + 1, 2):
            zmed = ndimage.median_filter(img, size=k, mode="nearest")
            zmin = ndimage.minimum_filter(img, size=k, mode="nearest")
            zmax = ndimage.maximum_filter(img, size=k, mode="nearest")
            accept = pending & (zmin < zmed) & (zmed < zmax)
            keep = (zmin < img) & (img < zmax)
            out[accept] = np.where(keep, img, zmed)[accept]
            pending &= ~accept
            if k == max_window:
                out[pending] = zmed[pending]
            elif not pending.any():
                break
        return out


class DBUTMF(DecisionFilter):
    """Decision-based unsymmetric trimmed median filter.

    Falls back to the untrimmed window median when every neighbour is 0 or
    255, which leaves those pixels noisy at high densities.
    """

    def _restore(self, windows):
        trimmed, count = batch_trimmed_median(windows)
        return np.where(count > 0, trimmed, batch_median(windows))


class DBPTGMF(DecisionFilter):
    """Decision-based partial trimmed global mean filter.

    Same cases as :class:`~saltpepper.filters.MDBPTGMF` except that a window of
    mixed 0s and 255s yields its untrimmed median, which is again 0 or 255.
    """

    def _restore(self, windows):
        trimmed, count = batch_trimmed_median(windows)
        out = np.where(count > 0, trimmed, batch_median(windows))
        out[(windows == PEPPER).all(axis=1)] = SALT
        out[(windows == SALT).all(axis=1)] = PEPPER
        return out


class UTMF(DecisionFilter):
    """Unsymmetric trimmed mean; window mean when nothing survives trimming."""

    def _restore(self, windows):
        trimmed, count = batch_trimmed_mean(windows)
        return np.where(count > 0, trimmed, batch_mean(windows))


class UTMP(DecisionFilter):
    """Unsymmetric trimmed midpoint, ``round((min + max) / 2)`` of the kept
    values; window midpoint when nothing survives trimming."""

    def _restore(self, windows):
        trimmed, count = batch_trimmed_midpoint(windows)
        return np.where(count > 0, trimmed, batch_midpoint(windows))
