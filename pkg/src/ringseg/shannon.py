"""Gray-level histograms and Shannon entropy in bits."""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class Histogram:
    """Occurrence counts for each of the ``modulus`` gray levels."""

    modulus: int
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.shape != (self.modulus,):
            raise ValueError(
                f"expected {self.modulus} counts, got shape {counts.shape}"
            )
        if (counts < 0).any():
            raise ValueError("counts must be non-negative")
        if counts.sum() == 0:
            raise ValueError("histogram must contain at least one pixel")
        counts = counts.copy()
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)

    @property
    def total(self):
        return int(self.counts.sum())

    def probabilities(self):
        return self.counts / self.total

    def records(self, include_empty=False):
        """``(level, count)`` rows in level order, empty levels omitted."""
        return [
            (level, int(c))
            for level, c in enumerate(self.counts)
            if include_empty or c > 0
        ]

    def __eq__(self, other):
        if not isinstance(other, Histogram):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(
            self.counts, other.counts
        )


def histogram(image):
    return Histogram(
        image.modulus, np.bincount(image.pixels.ravel(), minlength=image.modulus)
    )


def entropy_of_histogram(hist):
    """Shannon entropy ``-sum p log2 p`` over levels with ``p > 0``.

    Terms are accumulated from the rarest level upward so that two
    histograms holding the same multiset of counts give bitwise-equal
    results regardless of which levels carry them.
    """
    total = hist.total
    bits = 0.0
    for c in sorted(int(c) for c in hist.counts if c > 0):
        p = c / total
        bits -= p * math.log2(p)
    # single-level images yield -0.0 otherwise
    return bits + 0.0


def entropy(image):
    """Entropy in bits of the gray-level distribution of ``image``.

    Examples
    --------
    >>> from ringseg import GrayImage
    >>> entropy(GrayImage([[0, 0, 255, 255]]))
    1.0
    """
    return entropy_of_histogram(histogram(image))
