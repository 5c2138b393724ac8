import numpy as np
from sklearn.utils import check_array

from .exceptions import ImageValueError, ParameterError, ShapeError


def check_image(img, *, name="image"):
    """Validate ``img`` as an 8-bit grayscale raster and return a uint8 array.

    Accepts any 2-D array-like of integers in [0, 255] (lists, int arrays,
    integral floats). Never modifies the input; the returned array may share
    memory with it when it is already ``uint8``.
    """
    try:
        arr = check_array(img, dtype=None, ensure_2d=True, ensure_all_finite=True,
                          ensure_min_samples=1, ensure_min_features=1)
    except ValueError as exc:
        raise ImageValueError(f"{name}: {exc}") from exc
    if arr.dtype == np.uint8:
        return arr
    if arr.dtype.kind == "b":
        raise ImageValueError(f"{name}: boolean arrays are not images")
    if arr.dtype.kind == "f":
        if not np.all(arr == np.floor(arr)):
            raise ImageValueError(f"{name}: pixel values must be integers")
    elif arr.dtype.kind not in "iu":
        raise ImageValueError(f"{name}: unsupported dtype {arr.dtype}")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ImageValueError(f"{name}: pixel values must lie in [0, 255]")
    return arr.astype(np.uint8)


def check_same_shape(*images):
    shapes = {img.shape for img in images}
    if len(shapes) != 1:
        raise ShapeError(f"image dimensions differ: {sorted(shapes)}")


def check_odd_window(k, *, minimum=3):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise ParameterError(f"window size must be an integer, got {k!r}")
    if k < minimum or k % 2 == 0:
        raise ParameterError(f"window size must be odd and >= {minimum}, got {k}")
    return int(k)
