"""Reader and writer for 8-bit PGM (P2 ASCII and P5 binary)."""
import os
import re

import numpy as np

from ._validation import check_image
from .exceptions import (PGMDepthError, PGMHeaderError, PGMTruncatedError,
                         ParameterError)

_WS = b" \t\n\r\x0b\x0c"


def _header_tokens(data, n):
    """Return the first ``n`` whitespace-separated header tokens (comments
    skipped) and the offset just past the last one."""
    tokens = []
    pos = 0
    while len(tokens) < n:
        while pos < len(data) and data[pos] in _WS:
            pos += 1
        if pos >= len(data):
            raise PGMHeaderError("header ends early")
        if data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and data[pos] not in _WS and data[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _header_int(token, what):
    if not re.fullmatch(rb"[0-9]+", token):
        raise PGMHeaderError(f"bad {what}: {token[:20]!r}")
    return int(token)


def parse_pgm(data):
    if data[:2] not in (b"P2", b"P5"):
        raise PGMHeaderError(f"not a P2/P5 PGM file (magic {data[:2]!r})")
    (magic, w, h, maxval), pos = _header_tokens(data, 4)
    if magic not in (b"P2", b"P5"):
        raise PGMHeaderError(f"bad magic {magic!r}")
    width = _header_int(w, "width")
    height = _header_int(h, "height")
    maxval = _header_int(maxval, "maxval")
    if width < 1 or height < 1:
        raise PGMHeaderError(f"bad dimensions {width}x{height}")
    if maxval != 255:
        raise PGMDepthError(f"unsupported maxval {maxval}; only 8-bit (255) images are supported")
    n = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos] not in _WS:
            raise PGMTruncatedError("no pixel data after header")
        payload = data[pos + 1:pos + 1 + n]
        if len(payload) < n:
            raise PGMTruncatedError(f"expected {n} pixel bytes, found {len(payload)}")
        return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()

    body = re.sub(rb"#[^\n]*", b"", data[pos:]).split()
    if len(body) < n:
        raise PGMTruncatedError(f"expected {n} pixel values, found {len(body)}")
    try:
        values = np.array([int(t) for t in body[:n]], dtype=np.int64)
    except ValueError:
        raise PGMHeaderError("non-integer token in P2 pixel data") from None
    if values.min() < 0 or values.max() > 255:
        raise PGMDepthError("P2 pixel value outside [0, 255]")
    return values.astype(np.uint8).reshape(height, width)


def read_pgm(path):
    """Load a P2 or P5 PGM with maxval 255 as a 2-D uint8 array.

    Raises ``FileNotFoundError`` for a missing file and a
    :class:`~saltpepper.exceptions.PGMError` subclass for bad content.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_pgm(data)


def encode_pgm(img, format="P5"):
    img = check_image(img)
    h, w = img.shape
    if format == "P5":
        return b"P5\n%d %d\n255\n" % (w, h) + img.tobytes()
    if format == "P2":
        lines = [" ".join(map(str, row)) for row in img.tolist()]
        return ("P2\n%d %d\n255\n" % (w, h) + "\n".join(lines) + "\n").encode("ascii")
    raise ParameterError(f"format must be 'P5' or 'P2', got {format!r}")


def write_pgm(img, path, format="P5"):
    data = encode_pgm(img, format)
    with open(os.fspath(path), "wb") as fh:
        fh.write(data)
