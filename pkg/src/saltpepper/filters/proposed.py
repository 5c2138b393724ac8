"""The two-stage salt-and-pepper cascade: a decision median stage followed by a
trimmed-statistics stage."""
import numpy as np

from ..exceptions import ParameterError
from ..image import (PEPPER, SALT, batch_mean, batch_median,
                     batch_trimmed_median)
from ._base import DecisionFilter


class DecisionMedianFilter(DecisionFilter):
    """Replace every 0/255 pixel by the plain median of its 3x3 window.

    The median is untrimmed, so inside dense noise it is often 0 or 255 itself;
    the second cascade stage cleans those up.
    """

    def _restore(self, windows):
        return batch_median(windows)


class MDBPTGMF(DecisionFilter):
    """Modified decision-based partial trimmed global mean filter.

    For a noisy pixel with window W:

    * all of W is 0 -> 255, all of W is 255 -> 0 (``case12="paper"``), or the
      window mean, i.e. 0 and 255 respectively (``case12="mean"``);
    * W holds only 0s and 255s, both present -> mean of W;
    * otherwise -> median of W with every 0 and 255 removed.

    Parameters
    ----------
    case12 : {"paper", "mean"}, default="paper"
    recursive : bool, default=False
    """

    def __init__(self, case12="paper", recursive=False):
        self.case12 = case12
        self.recursive = recursive

    def _restore(self, windows):
        if self.case12 not in ("paper", "mean"):
            raise ParameterError(f"case12 must be 'paper' or 'mean', got {self.case12!r}")
        trimmed, count = batch_trimmed_median(windows)
        out = np.where(count > 0, trimmed, batch_mean(windows))
        if self.case12 == "paper":
            out[(windows == PEPPER).all(axis=1)] = SALT
            out[(windows == SALT).all(axis=1)] = PEPPER
        return out


class MDBUTMF(DecisionFilter):
    """Modified decision-based unsymmetric trimmed median filter.

    A noisy pixel whose window is made only of 0s and 255s becomes the window
    mean (so an all-0 window stays 0); otherwise it becomes the median of the
    window values strictly inside (0, 255).
    """

    def _restore(self, windows):
        trimmed, count = batch_trimmed_median(windows)
        return np.where(count > 0, trimmed, batch_mean(windows))
