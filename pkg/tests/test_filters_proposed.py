import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from saltpepper import (MDBPTGMF, MDBUTMF, Cascade, DecisionMedianFilter,
                        cascade, dmf, make_filter, mdbptgmf, mdbutmf, pa1, pa2)
from saltpepper.exceptions import ParameterError, PipelineError

MIXED = [0, 0, 0, 0, 255, 255, 255, 255, 255]
PARTLY_CLEAN = [0, 255, 80, 90, 0, 100, 255, 110, 0]

noisy_images = arrays(np.uint8, st.tuples(st.integers(1, 12), st.integers(1, 12)),
                      elements=st.sampled_from([0, 0, 255, 255, 3, 90, 128, 250]))


class TestDMF:
    def test_impulse_gets_window_median(self):
        assert oracles.center_output(DecisionMedianFilter(),
                                     [10, 20, 30, 40, 255, 50, 60, 70, 80]) == 50

    def test_clean_pixel_kept(self):
        assert oracles.center_output(DecisionMedianFilter(), [0, 255, 0, 255, 100, 0, 0, 0, 0]) == 100

    def test_saturated_window_stays_noisy(self):
        assert oracles.center_output(DecisionMedianFilter(), [255] * 9) == 255

    def test_reads_input_only(self, rng):
        img = np.where(rng.random((20, 20)) < 0.7, rng.choice([0, 255], (20, 20)),
                       rng.integers(1, 255, (20, 20))).astype(np.uint8)
        plain = dmf(img)
        recursive = DecisionMedianFilter(recursive=True).transform(img)
        assert plain.tolist() == oracles.apply_rule(oracles.dmf, img.tolist())
        assert recursive.tolist() == oracles.apply_rule(oracles.dmf, img.tolist(), recursive=True)
        assert not np.array_equal(plain, recursive)


class TestMDBPTGMF:
    def test_all_zero_becomes_salt(self):
        assert oracles.center_output(MDBPTGMF(), [0] * 9) == 255

    def test_all_salt_becomes_pepper(self):
        assert oracles.center_output(MDBPTGMF(), [255] * 9) == 0

    def test_mixed_extremes_take_mean(self):
        w = list(MIXED)
        w[4] = 255
        assert oracles.center_output(MDBPTGMF(), w) == 142

    def test_partly_clean_takes_trimmed_median(self):
        assert oracles.center_output(MDBPTGMF(), PARTLY_CLEAN) == 95

    def test_mean_option_for_uniform_windows(self):
        assert oracles.center_output(MDBPTGMF(case12="mean"), [0] * 9) == 0
        assert oracles.center_output(MDBPTGMF(case12="mean"), [255] * 9) == 255

    def test_bad_option(self):
        with pytest.raises(ParameterError):
            MDBPTGMF(case12="other").transform([[0]])


class TestMDBUTMF:
    def test_mixed_extremes_take_mean(self):
        w = list(MIXED)
        w[4] = 255
        assert oracles.center_output(MDBUTMF(), w) == 142

    def test_trimmed_median(self):
        assert oracles.center_output(MDBUTMF(), [78, 90, 0, 120, 0, 255, 97, 255, 73]) == 90

    def test_all_zero_stays_zero(self):
        assert oracles.center_output(MDBUTMF(), [0] * 9) == 0


class TestCascade:
    def test_identity_stage(self, rng):
        img = rng.integers(0, 256, (9, 7), dtype=np.uint8)
        assert np.array_equal(cascade(img, ["identity"]), img)

    def test_composition(self, rng):
        img = rng.choice([0, 255, 40, 160], size=(30, 30)).astype(np.uint8)
        assert np.array_equal(cascade(img, ["dmf", "mdbutmf"]), mdbutmf(dmf(img)))
        assert np.array_equal(pa2(img), mdbutmf(dmf(img)))
        assert np.array_equal(pa1(img), mdbptgmf(dmf(img)))

    def test_clean_image_unchanged(self, rng):
        img = rng.integers(1, 255, (20, 20), dtype=np.uint8)
        assert np.array_equal(cascade(img, ["dmf", "mdbptgmf"]), img)
        assert np.array_equal(pa1(img), img)
        assert np.array_equal(pa2(img), img)

    def test_all_zero_image_pa1(self):
        img = np.zeros((6, 5), dtype=np.uint8)
        assert (pa1(img) == 255).all()
        assert (pa1(img, case12="mean") == 0).all()

    def test_unknown_stage(self):
        with pytest.raises(PipelineError):
            cascade(np.zeros((2, 2), np.uint8), ["dmf", "nope"])
        with pytest.raises(PipelineError):
            make_filter("nope")

    def test_empty_pipeline(self):
        with pytest.raises(PipelineError):
            cascade(np.zeros((2, 2), np.uint8), [])
        with pytest.raises(PipelineError):
            Cascade([]).transform(np.zeros((2, 2), np.uint8))

    def test_mixed_stage_kinds(self, rng):
        img = rng.choice([0, 255, 99], size=(10, 10)).astype(np.uint8)
        pipe = Cascade(["dmf", MDBUTMF()])
        assert np.array_equal(pipe.transform(img), pa2(img))

    def test_case12_reaches_inner_stage(self):
        img = np.zeros((4, 4), np.uint8)
        assert (make_filter("pa1", mdbptgmf_case12="mean").transform(img) == 0).all()


@pytest.mark.parametrize("name", ["dmf", "mdbptgmf", "mdbutmf", "pa1", "pa2"])
@settings(max_examples=60, deadline=None)
@given(img=noisy_images)
def test_matches_literal_oracle(name, img):
    rules = {"pa1": ("dmf", "mdbptgmf"), "pa2": ("dmf", "mdbutmf")}.get(name, (name,))
    expected = img.tolist()
    for rule in rules:
        expected = oracles.apply_rule(oracles.WINDOW_RULES[rule], expected)
    assert make_filter(name).transform(img).tolist() == expected


@pytest.mark.parametrize("name", ["dmf", "mdbptgmf", "mdbutmf"])
@settings(max_examples=40, deadline=None)
@given(img=noisy_images)
def test_recursive_matches_literal_oracle(name, img):
    expected = oracles.apply_rule(oracles.WINDOW_RULES[name], img.tolist(), recursive=True)
    assert make_filter(name, recursive=True).transform(img).tolist() == expected


@pytest.mark.parametrize("name", ["dmf", "mdbptgmf", "mdbutmf", "pa1", "pa2"])
@settings(max_examples=40, deadline=None)
@given(img=noisy_images)
def test_invariants(name, img):
    flt = make_filter(name)
    before = img.copy()
    out = flt.transform(img)
    assert np.array_equal(img, before), "input must not be modified"
    assert out.dtype == np.uint8 and out.shape == img.shape
    assert np.array_equal(out, flt.transform(img))
    if name in ("dmf", "mdbptgmf", "mdbutmf"):
        changed = out != img
        assert np.isin(img[changed], (0, 255)).all()
