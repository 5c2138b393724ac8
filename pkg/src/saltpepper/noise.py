"""Seeded salt-and-pepper noise injection.

Random stream: numpy's PCG64 bit generator seeded with the 64-bit ``seed``.
One raw 64-bit draw is taken per pixel in row-major order; pixels are ranked
by (draw, index) with a stable sort and the first ``floor(density * h * w)``
ranks are corrupted. Of those, the first ``floor(salt_fraction * count)`` in
rank order become 255 and the rest 0. Only ``PCG64.random_raw`` is used, whose
output stream numpy keeps fixed across releases, so results do not depend on
the numpy version.
"""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_image
from .exceptions import NoiseSpecError
from .filters import ImageFilter
from .image import PEPPER, SALT

RNG_ALGORITHM = "numpy.random.PCG64.random_raw, stable rank selection"
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class NoiseSpec:
    density: float
    seed: int = 0
    salt_fraction: float = 0.5

    def __post_init__(self):
        for name in ("density", "salt_fraction"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not 0 <= value <= 1:
                raise NoiseSpecError(f"{name} must lie in [0, 1], got {value!r}")
        seed = self.seed
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) \
                or not 0 <= seed <= _MASK64:
            raise NoiseSpecError(f"seed must be an unsigned 64-bit integer, got {seed!r}")


@dataclass(frozen=True)
class CorruptionRecord:
    noisy: np.ndarray
    mask: np.ndarray

    @property
    def count(self):
        return int(self.mask.sum())


def corrupted_count(density, n_pixels):
    # float product can land a hair under an integer (0.7 * 10 -> 6.9999...)
    return math.floor(round(density * n_pixels, 9))


def inject(img, spec):
    """Corrupt exactly ``floor(density * h * w)`` pixels of ``img``."""
    img = check_image(img)
    if not isinstance(spec, NoiseSpec):
        raise NoiseSpecError(f"expected a NoiseSpec, got {type(spec).__name__}")
    n = img.size
    count = corrupted_count(spec.density, n)
    keys = np.random.PCG64(int(spec.seed)).random_raw(n)
    chosen = np.argsort(keys, kind="stable")[:count]
    n_salt = math.floor(round(spec.salt_fraction * count, 9))

    flat = img.ravel().copy()
    flat[chosen[:n_salt]] = SALT
    flat[chosen[n_salt:]] = PEPPER
    mask = np.zeros(n, dtype=bool)
    mask[chosen] = True
    return CorruptionRecord(noisy=flat.reshape(img.shape), mask=mask.reshape(img.shape))


class SaltPepperNoise(ImageFilter):
    """Transformer wrapper around :func:`inject`; returns the noisy image."""

    def __init__(self, density=0.1, seed=0, salt_fraction=0.5):
        self.density = density
        self.seed = seed
        self.salt_fraction = salt_fraction

    def _filter(self, img):
        spec = NoiseSpec(self.density, self.seed, self.salt_fraction)
        return inject(img, spec).noisy
