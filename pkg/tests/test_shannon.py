import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_gray
from oracles import entropy_mp, tally
from ringseg import (GrayImage, Histogram, ScalarImage, entropy,
                     entropy_of_histogram, histogram, ring_add, ring_neg)


def test_histogram_two_levels():
    h = histogram(GrayImage([[0, 0], [255, 255]]))
    assert h.counts[0] == 2 and h.counts[255] == 2
    assert h.counts.sum() == h.total == 4
    assert h.records() == [(0, 2), (255, 2)]


def test_histogram_constant():
    h = histogram(GrayImage.full(7, 10, 10))
    assert h.counts[7] == 100
    assert h.records() == [(7, 100)]


def test_histogram_matches_tally(rng):
    img = random_gray(rng, 64, 64)
    assert histogram(img).counts.tolist() == tally(img.pixels, 256)


def test_histogram_probabilities_sum_to_one(rng):
    p = histogram(random_gray(rng, 9, 11, modulus=16)).probabilities()
    assert math.isclose(p.sum(), 1.0, rel_tol=0, abs_tol=1e-15)


def test_histogram_validation():
    with pytest.raises(ValueError):
        Histogram(4, [1, 2, 3])
    with pytest.raises(ValueError):
        Histogram(2, [0, 0])
    with pytest.raises(ValueError):
        Histogram(2, [-1, 2])


def test_constant_image_entropy_is_exact_zero():
    e = entropy(GrayImage.full(200, 5, 3))
    assert e == 0.0 and math.copysign(1.0, e) == 1.0


@pytest.mark.parametrize("k", [2, 4, 8, 16])
def test_equiprobable_levels(k):
    img = GrayImage(np.arange(64).reshape(8, 8) % k * (256 // k))
    assert abs(entropy(img) - math.log2(k)) <= 1e-12


def test_matches_extended_precision(rng):
    for _ in range(10):
        img = random_gray(rng, 32, 32)
        assert abs(entropy(img) - entropy_mp(tally(img.pixels, 256))) <= 1e-12


def test_entropy_of_histogram_agrees_exactly(rng):
    img = random_gray(rng, 20, 20, modulus=64)
    assert entropy(img) == entropy_of_histogram(histogram(img))


def test_negation_permutes_histogram(rng):
    img = random_gray(rng, 30, 30)
    h = histogram(img).counts
    hn = histogram(ring_neg(img)).counts
    assert all(hn[(256 - g) % 256] == h[g] for g in range(256))
    assert entropy(ring_neg(img)) == entropy(img)


@given(st.lists(st.integers(0, 15), min_size=1, max_size=60), st.integers(0, 15))
def test_shift_invariance_and_bounds(vals, s):
    img = GrayImage([vals], 16)
    e = entropy(img)
    assert abs(entropy(ring_add(img, ScalarImage.like(img, s))) - e) <= 1e-12
    distinct = len(set(vals))
    assert 0.0 <= e <= math.log2(distinct) + 1e-12
    assert (e == 0.0) == (distinct == 1)


@given(st.lists(st.integers(0, 7), min_size=2, max_size=40), st.permutations(range(8)))
def test_relabeling_invariance(vals, perm):
    img = GrayImage([vals], 8)
    relabeled = GrayImage([[perm[v] for v in vals]], 8)
    assert entropy(relabeled) == entropy(img)
