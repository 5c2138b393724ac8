import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from saltpepper import Window3, extract_window3, mean_of, median_of, pixel_is_noisy
from saltpepper.exceptions import CoordinateError, DomainError, ImageValueError
from saltpepper.image import (batch_mean, batch_median, batch_midpoint,
                              batch_trimmed_mean, batch_trimmed_median,
                              batch_trimmed_midpoint, noisy_windows)

GRID = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]

images = arrays(np.uint8, st.tuples(st.integers(1, 9), st.integers(1, 9)))
value_lists = st.lists(st.integers(0, 255), min_size=1, max_size=12)


def test_window_single_pixel_replicates():
    assert extract_window3([[7]], 0, 0).values == (7,) * 9


def test_window_interior_is_the_block():
    win = extract_window3(GRID, 1, 1)
    assert win.values == tuple(range(1, 10))
    assert win.center == 5


def test_window_corner_clamps():
    assert extract_window3(GRID, 0, 0).values == (1, 1, 2, 1, 1, 2, 4, 4, 5)


@pytest.mark.parametrize("row,col", [(-1, 0), (0, 3), (3, 3), (0, -1)])
def test_window_out_of_range(row, col):
    with pytest.raises(CoordinateError):
        extract_window3(GRID, row, col)


def test_window3_validates():
    with pytest.raises(DomainError):
        Window3((1, 2, 3))
    with pytest.raises(DomainError):
        Window3((0,) * 8 + (256,))


def test_extract_window_rejects_non_images():
    with pytest.raises(ImageValueError):
        extract_window3([[300]], 0, 0)
    with pytest.raises(ImageValueError):
        extract_window3([[1.5]], 0, 0)


@pytest.mark.parametrize("v,expected", [(0, True), (255, True), (128, False), (1, False), (254, False)])
def test_pixel_is_noisy(v, expected):
    assert pixel_is_noisy(v) is expected


@pytest.mark.parametrize("values,expected", [
    ([10, 20, 30, 40, 50, 60, 70, 80, 255], 50),
    ([5], 5),
    ([80, 90, 100, 110], 95),
    ([0, 255], 128),
    ([1, 2], 2),
])
def test_median_of(values, expected):
    assert median_of(values) == oracles.o_median(values) == expected


@pytest.mark.parametrize("values,expected", [
    ([0, 0, 0, 0, 0, 255, 255, 255, 255], 113),
    ([200] * 9, 200),
    ([0, 255], 128),
])
def test_mean_of(values, expected):
    assert mean_of(values) == oracles.o_mean(values) == expected


def test_empty_statistics_raise():
    with pytest.raises(DomainError):
        median_of([])
    with pytest.raises(DomainError):
        mean_of([])


@given(value_lists, st.randoms())
def test_median_permutation_invariant(values, random):
    shuffled = list(values)
    random.shuffle(shuffled)
    assert median_of(shuffled) == median_of(values)


@given(value_lists)
def test_statistics_bounded(values):
    assert min(values) <= median_of(values) <= max(values)
    assert min(values) <= mean_of(values) <= max(values)
    assert median_of(values) == oracles.o_median(values)
    assert mean_of(values) == oracles.o_mean(values)


@given(images)
def test_window_values_come_from_image(img):
    present = set(img.ravel().tolist())
    for r in range(img.shape[0]):
        for c in range(img.shape[1]):
            win = extract_window3(img, r, c)
            assert set(win.values) <= present
            assert win.center == img[r, c]


def test_interior_windows_match_raw_blocks(rng):
    for _ in range(20):
        img = rng.integers(0, 256, size=(rng.integers(3, 12), rng.integers(3, 12)), dtype=np.uint8)
        for r in range(1, img.shape[0] - 1):
            for c in range(1, img.shape[1] - 1):
                assert extract_window3(img, r, c).values == tuple(img[r - 1:r + 2, c - 1:c + 2].ravel())


@given(images)
def test_noisy_windows_match_extract(img):
    (rows, cols), windows = noisy_windows(img)
    expected = [(r, c) for r in range(img.shape[0]) for c in range(img.shape[1])
                if img[r, c] in (0, 255)]
    assert list(zip(rows.tolist(), cols.tolist())) == expected
    for (r, c), win in zip(expected, windows):
        assert tuple(win.tolist()) == extract_window3(img, r, c).values


windows_strategy = arrays(np.uint8, st.tuples(st.integers(1, 30), st.just(9)),
                          elements=st.sampled_from([0, 1, 7, 128, 200, 254, 255]))


@given(windows_strategy)
def test_batch_statistics_match_scalar(windows):
    rows = windows.tolist()
    assert batch_median(windows).tolist() == [median_of(w) for w in rows]
    assert batch_mean(windows).tolist() == [mean_of(w) for w in rows]
    assert batch_midpoint(windows).tolist() == [oracles.o_midpoint(w) for w in rows]
    for fn, stat in [(batch_trimmed_median, median_of), (batch_trimmed_mean, mean_of),
                     (batch_trimmed_midpoint, oracles.o_midpoint)]:
        values, count = fn(windows)
        for w, v, k in zip(rows, values.tolist(), count.tolist()):
            kept = oracles.trimmed(w)
            assert k == len(kept)
            if kept:
                assert v == stat(kept)
