import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_gray
from ringseg import (GrayImage, ScalarImage, ShapeError, is_strong_equivalent,
                     is_weak_equivalent, ned, we_index)
from ringseg.fixtures import checkerboard, stripes


def test_we_index_examples(rng):
    a = random_gray(rng, 8, 8)
    assert we_index(a, a) == 0.0
    assert we_index(checkerboard(), stripes()) == 0.0
    const = GrayImage.full(3, 2, 2)
    two = GrayImage([[0, 9], [9, 0]])
    assert we_index(const, two) == 1.0


def test_ned_examples(rng):
    a = random_gray(rng, 8, 8)
    assert ned(a, a) == 0.0
    for s in (1, 100, 255):
        assert ned(a, a + ScalarImage.like(a, s)) == 0.0


def test_checkerboard_stripes_separation():
    a, b = checkerboard(), stripes()
    assert is_weak_equivalent(a, b)
    assert not is_strong_equivalent(a, b)
    # diff is 0 on half the pixels and +-255 (levels 1, 255) on a quarter each
    assert ned(a, b) == pytest.approx(1.5, abs=1e-12)


def test_weak_equivalence():
    a = np.arange(16).reshape(4, 4)
    img = GrayImage(a)
    assert is_weak_equivalent(img, img + ScalarImage.like(img, 40))
    assert not is_weak_equivalent(GrayImage.full(0, 4, 4), img)


def test_incompatible_operands():
    with pytest.raises(ShapeError):
        ned(GrayImage([[1, 2]]), GrayImage([[1], [2]]))
    with pytest.raises(ShapeError):
        we_index(GrayImage([[1, 2]]), GrayImage([[1], [2]]))


@st.composite
def pairs(draw):
    n = draw(st.sampled_from([2, 5, 8, 256]))
    k = draw(st.integers(1, 30))
    a = draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k))
    b = draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k))
    return GrayImage([a], n), GrayImage([b], n)


@settings(max_examples=300)
@given(pairs(), st.integers(0, 1000), st.integers(0, 1000))
def test_ned_properties(pair, s, t):
    a, b = pair
    d = ned(a, b)
    assert d >= 0.0
    assert d <= math.log2(a.modulus) + 1e-12
    assert abs(d - ned(b, a)) <= 1e-12
    assert (d == 0.0) == is_strong_equivalent(a, b)
    shifted = ned(a + ScalarImage.like(a, s), b + ScalarImage.like(b, t))
    assert abs(shifted - d) <= 1e-12
    if is_strong_equivalent(a, b):
        assert is_weak_equivalent(a, b)
