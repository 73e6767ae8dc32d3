"""Joint spatial-range mean-shift filtering of gray images.

Every pixel becomes a point ``(row, col, gray)``. Mode seeking moves that
point to the (weighted) mean of all pixels lying inside the product window
``||(row, col) - x_s|| <= h_s`` and ``|gray - x_r| <= h_r`` until the move
is shorter than ``inner_tolerance``. The filtered pixel takes the gray
value of the mode it reached.

The range distance is the ordinary linear one; wraparound mod n belongs to
the image algebra, not to the filter.
"""

import math
from dataclasses import dataclass

import numba
import numpy as np

from .ring_image import GrayImage

PROFILES = ("uniform", "epanechnikov")


@dataclass(frozen=True)
class FilterConfig:
    """Bandwidths, kernel profile and inner-loop controls for one pass."""

    h_s: float = 15.0
    h_r: float = 12.0
    profile: str = "uniform"
    inner_tolerance: float = 0.5
    inner_max_iters: int = 100

    def __post_init__(self):
        if not self.h_s >= 1:
            raise ValueError(f"h_s must be >= 1, got {self.h_s}")
        if not self.h_r >= 1:
            raise ValueError(f"h_r must be >= 1, got {self.h_r}")
        if self.profile not in PROFILES:
            raise ValueError(
                f"profile must be one of {PROFILES}, got {self.profile!r}"
            )
        if not self.inner_tolerance > 0:
            raise ValueError("inner_tolerance must be positive")
        if int(self.inner_max_iters) < 1:
            raise ValueError("inner_max_iters must be >= 1")


@dataclass(frozen=True)
class ModeSeekState:
    row: float
    col: float
    value: float
    iterations: int = 0
    converged: bool = False


def epanechnikov_profile(t):
    """Unnormalized Epanechnikov profile ``1 - t`` on ``t < 1``, else 0.

    ``t`` is a squared normalized distance. The kernel's constant factor
    cancels in every weighted mean, so it is dropped.
    """
    if t < 0:
        raise ValueError(f"profile argument must be non-negative, got {t}")
    return 1.0 - t if t < 1.0 else 0.0


@numba.njit(cache=True)
def _step(img, r, c, v, hs, hr, epan):
    # One mean-shift update; pixels are visited in row-major order so that
    # weighted sums accumulate in a fixed sequence.
    height, width = img.shape
    hs2 = hs * hs
    hr2 = hr * hr
    r_lo = max(0, int(math.ceil(r - hs)))
    r_hi = min(height - 1, int(math.floor(r + hs)))
    c_lo = max(0, int(math.ceil(c - hs)))
    c_hi = min(width - 1, int(math.floor(c + hs)))
    sw = 0.0
    sr = 0.0
    sc = 0.0
    sv = 0.0
    for i in range(r_lo, r_hi + 1):
        di = i - r
        for j in range(c_lo, c_hi + 1):
            dj = j - c
            ds2 = di * di + dj * dj
            if ds2 > hs2:
                continue
            g = img[i, j]
            dv = g - v
            if abs(dv) > hr:
                continue
            if epan:
                t = ds2 / hs2 + dv * dv / hr2
                if t >= 1.0:
                    continue
                w = 1.0 - t
            else:
                w = 1.0
            sw += w
            sr += w * i
            sc += w * j
            sv += w * g
    return sw, sr, sc, sv


@numba.njit(cache=True)
def _seek(img, r, c, v, hs, hr, epan, tol, max_iter):
    iters = 0
    converged = False
    while iters < max_iter:
        sw, sr, sc, sv = _step(img, r, c, v, hs, hr, epan)
        iters += 1
        if sw == 0.0:
            # every in-window pixel sits on the profile's zero boundary
            converged = True
            break
        nr = sr / sw
        nc = sc / sw
        nv = sv / sw
        disp = math.sqrt((nr - r) ** 2 + (nc - c) ** 2 + (nv - v) ** 2)
        r = nr
        c = nc
        v = nv
        if disp < tol:
            converged = True
            break
    return r, c, v, iters, converged


@numba.njit(cache=True)
def _filter_values(img, hs, hr, epan, tol, max_iter):
    height, width = img.shape
    out = np.empty((height, width), dtype=np.float64)
    for i in range(height):
        for j in range(width):
            res = _seek(img, float(i), float(j), img[i, j], hs, hr, epan, tol,
                        max_iter)
            out[i, j] = res[2]
    return out


def _as_float(image):
    return np.ascontiguousarray(image.pixels, dtype=np.float64)


def mean_shift_step(image, state, cfg):
    """Move ``state`` to the mean of its joint window.

    The window always contains the seed pixel on the first step, so the
    uniform profile never sees an empty window. With the Epanechnikov
    profile a window whose points all carry zero weight leaves the state
    where it is.
    """
    sw, sr, sc, sv = _step(
        _as_float(image), float(state.row), float(state.col), float(state.value),
        float(cfg.h_s), float(cfg.h_r), cfg.profile == "epanechnikov",
    )
    if sw == 0.0:
        return ModeSeekState(state.row, state.col, state.value,
                             state.iterations + 1, True)
    return ModeSeekState(sr / sw, sc / sw, sv / sw, state.iterations + 1, False)


def mode_seek(image, seed, cfg):
    """Follow mean-shift steps from pixel ``seed = (row, col)`` to a mode."""
    row, col = seed
    if not (0 <= row < image.height and 0 <= col < image.width):
        raise IndexError(f"seed {seed} outside {image.height}x{image.width} image")
    r, c, v, iters, converged = _seek(
        _as_float(image), float(row), float(col), float(image.pixels[row, col]),
        float(cfg.h_s), float(cfg.h_r), cfg.profile == "epanechnikov",
        float(cfg.inner_tolerance), int(cfg.inner_max_iters),
    )
    return ModeSeekState(r, c, v, iters, bool(converged))


def round_half_away(values):
    """Round non-negative reals to the nearest integer, ties upward."""
    floor = np.floor(values)
    return np.where(values - floor >= 0.5, floor + 1.0, floor)


def filter_values(image, cfg):
    """Converged range value of every pixel's mode, before rounding."""
    return _filter_values(
        _as_float(image), float(cfg.h_s), float(cfg.h_r),
        cfg.profile == "epanechnikov", float(cfg.inner_tolerance),
        int(cfg.inner_max_iters),
    )


def filter_pass(image, cfg):
    """One mean-shift filtering pass over every pixel of ``image``."""
    out = round_half_away(filter_values(image, cfg))
    out = np.clip(out, 0, image.modulus - 1).astype(np.int64)
    return GrayImage._trusted(out, image.modulus)
