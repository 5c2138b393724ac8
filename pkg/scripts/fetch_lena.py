"""Rebuild tests/data/lena512.pgm from the SciPy 0.16.1 source distribution.

SciPy shipped the standard 512x512 8-bit grayscale Lena as a pickled array
(``scipy/misc/lena.dat``) until release 0.17. This script downloads the sdist
from PyPI, checks its sha256, unpickles the array and writes it as binary PGM.

    python scripts/fetch_lena.py [OUTPUT]
"""
import hashlib
import pickle
import sys
import tarfile
import tempfile
import urllib.request
from pathlib import Path

import numpy as np

from saltpepper.pgm import write_pgm

URL = ("https://files.pythonhosted.org/packages/7b/e1/"
       "ecc1820874c396a094e6df30d4d3aa8119d4987c5ff0b9caec73db362849/scipy-0.16.1.tar.gz")
SHA256 = "ecd1efbb1c038accb0516151d1e6679809c6010288765eb5da6051550bf52260"
MEMBER = "scipy-0.16.1/scipy/misc/lena.dat"


def main(out):
    with tempfile.TemporaryDirectory() as tmp:
        tarball = Path(tmp) / "scipy.tar.gz"
        urllib.request.urlretrieve(URL, tarball)
        digest = hashlib.sha256(tarball.read_bytes()).hexdigest()
        if digest != SHA256:
            sys.exit(f"checksum mismatch: {digest}")
        with tarfile.open(tarball) as tar:
            raw = tar.extractfile(MEMBER).read()
    lena = np.asarray(pickle.loads(raw, encoding="latin1"))
    assert lena.shape == (512, 512) and 0 <= lena.min() and lena.max() <= 255
    write_pgm(lena.astype(np.uint8), out)
    print(f"wrote {out}")


if __name__ == "__main__":
    default = Path(__file__).resolve().parents[1] / "tests" / "data" / "lena512.pgm"
    main(sys.argv[1] if len(sys.argv) > 1 else default)
