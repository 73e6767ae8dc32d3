"""Gray images as elements of the pixelwise ring over Z_n.

A k x m image whose pixels lie in ``[0, n-1]`` is an element of the ring
``G_{k x m}(Z_n)`` under pixel-by-pixel addition and multiplication mod n.
Scalar images (all pixels equal) form a normal subgroup of the additive
group; two images are *strongly equivalent* when their difference is scalar.

Examples
--------
>>> a = GrayImage([[200, 50]], modulus=256)
>>> b = GrayImage([[100, 100]], modulus=256)
>>> (a + b).pixels.tolist()
[[44, 150]]
>>> (a - b).pixels.tolist()
[[100, 206]]
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import IncompatibleRingError, PixelRangeError, ShapeError

DEFAULT_MODULUS = 256


class GrayImage:
    """Immutable 2-D grid of gray levels in Z_n.

    Parameters
    ----------
    pixels : array-like of int, shape (height, width)
        Row-major gray levels. A 1-D sequence is accepted together with
        ``width`` and ``height``.
    modulus : int, default=256
        Number of gray levels ``n``; ``n = 2**B`` for a B-bit image.
    width, height : int, optional
        Required only when ``pixels`` is flat.
    """

    __slots__ = ("_pixels", "_modulus")

    def __init__(self, pixels, modulus=DEFAULT_MODULUS, width=None, height=None):
        modulus = int(modulus)
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        arr = np.array(pixels, dtype=np.int64, copy=True)
        if width is not None or height is not None:
            if width is None or height is None:
                raise ValueError("width and height must be given together")
            if arr.size != width * height:
                raise ShapeError(
                    f"pixel count {arr.size} != width*height = {width * height}"
                )
            arr = arr.reshape(height, width)
        if arr.ndim != 2 or arr.size == 0:
            raise ShapeError(f"expected a non-empty 2-D grid, got shape {arr.shape}")
        if arr.min() < 0 or arr.max() >= modulus:
            raise PixelRangeError(
                f"pixel values must lie in [0, {modulus - 1}], "
                f"got range [{arr.min()}, {arr.max()}]"
            )
        arr.flags.writeable = False
        self._pixels = arr
        self._modulus = modulus

    @classmethod
    def _trusted(cls, arr, modulus):
        # Skips validation; callers guarantee a reduced int64 2-D array.
        obj = object.__new__(cls)
        arr.flags.writeable = False
        obj._pixels = arr
        obj._modulus = modulus
        return obj

    @classmethod
    def full(cls, value, width, height, modulus=DEFAULT_MODULUS):
        return cls(np.full((height, width), value, dtype=np.int64), modulus)

    @property
    def pixels(self):
        """Read-only ``(height, width)`` int64 array."""
        return self._pixels

    @property
    def modulus(self):
        return self._modulus

    @property
    def width(self):
        return self._pixels.shape[1]

    @property
    def height(self):
        return self._pixels.shape[0]

    @property
    def shape(self):
        return self._pixels.shape

    def flat(self):
        """Row-major pixel list."""
        return self._pixels.ravel().tolist()

    def __array__(self, dtype=None, copy=None):
        return self._pixels.astype(dtype) if dtype is not None else self._pixels.copy()

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self._modulus == other._modulus
            and self.shape == other.shape
            and bool(np.array_equal(self._pixels, other._pixels))
        )

    def __hash__(self):
        return hash((self._modulus, self.shape, self._pixels.tobytes()))

    def __repr__(self):
        return f"GrayImage({self.width}x{self.height}, modulus={self._modulus})"

    def __add__(self, other):
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return ring_add(self, other)

    def __radd__(self, other):
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return ring_add(other, self)

    def __sub__(self, other):
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return ring_sub(self, other)

    def __rsub__(self, other):
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return ring_sub(other, self)

    def __mul__(self, other):
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return ring_mul(self, other)

    def __rmul__(self, other):
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return ring_mul(other, self)

    def __neg__(self):
        return ring_neg(self)


@dataclass(frozen=True)
class ScalarImage:
    """Constant image stored as one value plus its dimensions.

    ``value`` is reduced mod ``modulus`` on construction.
    """

    value: int
    width: int
    height: int
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.width < 1 or self.height < 1:
            raise ShapeError("scalar image dimensions must be positive")
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    @classmethod
    def like(cls, image, value):
        """Scalar image with the dimensions and modulus of ``image``."""
        return cls(value, image.width, image.height, image.modulus)

    @property
    def shape(self):
        return (self.height, self.width)

    def expand(self):
        arr = np.full(self.shape, self.value, dtype=np.int64)
        return GrayImage._trusted(arr, self.modulus)

    def __neg__(self):
        return ScalarImage(-self.value, self.width, self.height, self.modulus)

    def __add__(self, other):
        if isinstance(other, ScalarImage):
            _check_compatible(self, other)
            return ScalarImage(self.value + other.value, self.width, self.height,
                               self.modulus)
        return ring_add(self, other)

    def __sub__(self, other):
        if isinstance(other, ScalarImage):
            return self + (-other)
        return ring_sub(self, other)


_OPERANDS = (GrayImage, ScalarImage)


def zeros_like(image):
    """The additive neutral ``O`` with the geometry of ``image``."""
    return ScalarImage.like(image, 0).expand()


def ones_like(image):
    """The multiplicative neutral ``I`` with the geometry of ``image``."""
    return ScalarImage.like(image, 1).expand()


def _check_compatible(a, b):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.modulus != b.modulus:
        raise IncompatibleRingError(
            f"modulus mismatch: Z_{a.modulus} vs Z_{b.modulus}"
        )


def _values(x):
    # Scalar operands broadcast without materializing a grid.
    if isinstance(x, ScalarImage):
        return np.int64(x.value)
    return x.pixels


def _binary(a, b, op):
    if not isinstance(a, _OPERANDS) or not isinstance(b, _OPERANDS):
        raise TypeError(
            f"ring operands must be images, got {type(a).__name__} "
            f"and {type(b).__name__}"
        )
    _check_compatible(a, b)
    out = np.broadcast_to(op(_values(a), _values(b)) % a.modulus, a.shape)
    return GrayImage._trusted(np.array(out, dtype=np.int64), a.modulus)


def ring_add(a, b):
    """Pixelwise ``(a + b) mod n``."""
    return _binary(a, b, np.add)


def ring_neg(a):
    """Additive inverse: pixelwise ``(n - v) mod n``."""
    if isinstance(a, ScalarImage):
        return (-a).expand()
    return GrayImage._trusted((-a.pixels) % a.modulus, a.modulus)


def ring_sub(a, b):
    """``a + (-b)`` in the ring."""
    return _binary(a, b, np.subtract)


def ring_mul(a, b):
    """Pixelwise ``(a * b) mod n`` (elementwise, not a matrix product)."""
    return _binary(a, b, np.multiply)


def saturating_add(a, s):
    """Classical clipped addition ``min(v + s, n - 1)``.

    Kept outside the ring API; it exists to contrast truncation with the
    cyclic ring sum.
    """
    _check_compatible(a, s)
    out = np.minimum(a.pixels + _values(s), a.modulus - 1)
    return GrayImage._trusted(np.array(np.broadcast_to(out, a.shape)), a.modulus)


def saturating_sub(a, s):
    """Classical clipped subtraction ``max(v - s, 0)``."""
    _check_compatible(a, s)
    out = np.maximum(a.pixels - _values(s), 0)
    return GrayImage._trusted(np.array(np.broadcast_to(out, a.shape)), a.modulus)


def is_scalar(a):
    if isinstance(a, ScalarImage):
        return True
    p = a.pixels
    return bool((p == p.flat[0]).all())


def is_strong_equivalent(a, b):
    """True iff ``a - b`` is a scalar image, i.e. ``a = S + b``."""
    return is_scalar(ring_sub(a, b))


def canonical_representative(a):
    """Member of the strong-equivalence class of ``a`` whose first pixel is 0.

    Two images share a class exactly when their canonical representatives
    are equal.
    """
    return ring_sub(a, ScalarImage.like(a, int(a.pixels[0, 0])))
