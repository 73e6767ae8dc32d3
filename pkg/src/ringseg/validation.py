"""Input checking shared by the estimator front-ends."""

import numpy as np

from .exceptions import IncompatibleRingError, PixelRangeError
from .ring_image import DEFAULT_MODULUS, GrayImage


def check_gray_image(X, modulus=None):
    """Coerce ``X`` to a :class:`GrayImage`.

    ``X`` may already be a GrayImage, in which case its modulus must agree
    with ``modulus`` when one is given. Otherwise ``X`` must be a 2-D
    array-like of integral values in ``[0, modulus - 1]``; ``modulus``
    defaults to 256.
    """
    if isinstance(X, GrayImage):
        if modulus is not None and modulus != X.modulus:
            raise IncompatibleRingError(
                f"image lives in Z_{X.modulus}, estimator expects Z_{modulus}"
            )
        return X
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D gray image, got array with shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("empty image")
    if arr.dtype.kind == "f":
        if not np.isfinite(arr).all():
            raise ValueError("image contains NaN or infinity")
        if not (arr == np.round(arr)).all():
            raise PixelRangeError("gray levels must be integers")
    elif arr.dtype.kind not in "iub":
        raise ValueError(f"unsupported pixel dtype {arr.dtype}")
    return GrayImage(arr.astype(np.int64), modulus or DEFAULT_MODULUS)


def as_output(image, like):
    """Return ``image`` as a GrayImage if ``like`` was one, else as ndarray."""
    if isinstance(like, GrayImage):
        return image
    return np.array(image.pixels)
