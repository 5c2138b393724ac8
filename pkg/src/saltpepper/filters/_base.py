import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .._validation import check_image
from ..image import noisy_windows


class ImageFilter(TransformerMixin, BaseEstimator):
    """Stateless image-to-image transformer.

    ``fit`` only validates its input; every filter here is non-adaptive, so
    ``transform`` may be called on an unfitted instance too. Subclasses
    implement ``_filter(img) -> ndarray`` on a validated ``uint8`` array and
    must never write into ``img``.
    """

    def fit(self, X, y=None):
        check_image(X)
        return self

    def transform(self, X):
        return self._filter(check_image(X))

    def __sklearn_is_fitted__(self):
        return True

    def __call__(self, X):
        return self.transform(X)


class DecisionFilter(ImageFilter):
    """3x3 filter that rewrites only pixels valued 0 or 255.

    By default every window is read from the input image, so output pixels
    are independent of processing order. With ``recursive=True`` noisy pixels
    are visited in raster order and windows see already-restored neighbours
    (much slower; pure Python loop).

    Subclasses define ``_restore(windows)`` mapping ``(n, 9)`` windows of
    noisy pixels to their ``n`` replacement values.
    """

    def __init__(self, recursive=False):
        self.recursive = recursive

    def _filter(self, img):
        (rows, cols), windows = noisy_windows(img)
        out = img.copy()
        if not len(rows):
            return out
        if not self.recursive:
            out[rows, cols] = self._restore(windows)
            return out
        h, w = img.shape
        for r, c in zip(rows.tolist(), cols.tolist()):
            ri = np.clip(np.arange(r - 1, r + 2), 0, h - 1)
            ci = np.clip(np.arange(c - 1, c + 2), 0, w - 1)
            out[r, c] = self._restore(out[np.ix_(ri, ci)].reshape(1, 9))[0]
        return out

    def _restore(self, windows):
        raise NotImplementedError


class IdentityFilter(ImageFilter):
    def _filter(self, img):
        return np.array(img, copy=True)
