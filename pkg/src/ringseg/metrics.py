"""Entropy-based similarity indices between two gray images.

``we_index`` compares entropies only and so ignores where the gray levels
sit; ``ned`` takes the entropy of the ring difference and therefore sees
spatial disagreement. NED is zero exactly on strongly equivalent pairs, is
symmetric and non-negative, but is not claimed to satisfy the triangle
inequality.
"""

from .shannon import entropy
from .ring_image import _check_compatible, ring_sub

WEAK_TOLERANCE = 1e-12


def we_index(a, b):
    """Weak-entropy index ``|E(a) - E(b)|`` in bits."""
    _check_compatible(a, b)
    return abs(entropy(a) - entropy(b))


def ned(a, b):
    """Natural Entropy Distance ``E(a + (-b))`` in bits."""
    return entropy(ring_sub(a, b))


def is_weak_equivalent(a, b, tol=WEAK_TOLERANCE):
    return we_index(a, b) <= tol
