"""Seeded synthetic images used by the tests, examples and CLI demos."""

import numpy as np

from .ring_image import GrayImage

DEFAULT_SEED = 20140101


def random_image(width, height, modulus=256, seed=DEFAULT_SEED):
    rng = np.random.default_rng(seed)
    return GrayImage(rng.integers(0, modulus, size=(height, width)), modulus)


def two_region(width=64, height=64, left=60, right=190, noise=0, modulus=256,
               seed=DEFAULT_SEED):
    """Left half at ``left``, right half at ``right``.

    ``noise > 0`` adds integers drawn uniformly from ``[-noise, noise]``;
    results are clipped to the valid range.
    """
    grid = np.full((height, width), left, dtype=np.int64)
    grid[:, width // 2:] = right
    if noise:
        rng = np.random.default_rng(seed)
        grid = grid + rng.integers(-noise, noise + 1, size=grid.shape)
    return GrayImage(np.clip(grid, 0, modulus - 1), modulus)


def checkerboard(size=64, block=8, low=0, high=255, modulus=256):
    """Half-dark, half-bright board of ``block``-sized squares."""
    idx = np.arange(size) // block
    mask = (idx[:, None] + idx[None, :]) % 2 == 1
    return GrayImage(np.where(mask, high, low), modulus)


def stripes(size=64, width=8, low=0, high=255, modulus=256):
    """Vertical bands with the same gray-level histogram as :func:`checkerboard`."""
    mask = (np.arange(size) // width) % 2 == 1
    return GrayImage(np.where(np.broadcast_to(mask, (size, size)), high, low), modulus)


def fixture_set():
    """Named images written to ``tests/data`` by :func:`write_fixture_set`."""
    return {
        "constant": GrayImage.full(128, 16, 16),
        "two_region": two_region(64, 64, left=0, right=200),
        "noisy_two_region": two_region(64, 64, left=60, right=190, noise=3, seed=7),
        "checkerboard": checkerboard(),
        "stripes": stripes(),
        "random16": random_image(16, 16, seed=1),
        "random_10bit": random_image(24, 12, modulus=1024, seed=2),
    }


def ascii_pgm(image, comment="generated by ringseg.fixtures"):
    """P2 encoding with a header comment, one image row per line."""
    lines = ["P2", f"# {comment}", f"{image.width} {image.height}",
             "# maxval follows", str(image.modulus - 1)]
    lines += [" ".join(str(v) for v in row) for row in image.pixels.tolist()]
    return ("\n".join(lines) + "\n").encode("ascii")


def write_fixture_set(directory):
    from pathlib import Path

    from .fileio import write_pgm

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, image in fixture_set().items():
        write_pgm(image, directory / f"{name}.pgm")
        written.append(directory / f"{name}.pgm")
    p2 = directory / "random16_ascii.pgm"
    p2.write_bytes(ascii_pgm(fixture_set()["random16"]))
    written.append(p2)
    return written
