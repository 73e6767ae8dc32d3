"""Portable graymap I/O, row profiles and CSV output."""

import csv
import io
import sys
from dataclasses import dataclass

import numpy as np

from .exceptions import PgmLengthError, PgmParseError, PixelRangeError
from .ring_image import GrayImage

_WHITESPACE = b" \t\r\n\v\f"


class _HeaderReader:
    """Token scanner for netpbm headers; ``#`` starts a comment to EOL."""

    def __init__(self, data):
        self.data = data
        self.pos = 0

    def skip_space(self):
        data = self.data
        while self.pos < len(data):
            ch = data[self.pos:self.pos + 1]
            if ch == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = len(data) if end < 0 else end + 1
            elif ch in _WHITESPACE:
                self.pos += 1
            else:
                break

    def token(self, what):
        self.skip_space()
        start = self.pos
        data = self.data
        while self.pos < len(data) and data[self.pos:self.pos + 1] not in _WHITESPACE \
                and data[self.pos:self.pos + 1] != b"#":
            self.pos += 1
        if start == self.pos:
            raise PgmLengthError(f"missing {what}", start)
        return data[start:self.pos], start

    def integer(self, what):
        tok, start = self.token(what)
        if not tok.isdigit():
            raise PgmParseError(f"invalid {what} {tok!r}", start)
        return int(tok)


def parse_pgm(data):
    """Decode P2 or P5 graymap bytes into a :class:`GrayImage`."""
    if data[:2] not in (b"P2", b"P5"):
        raise PgmParseError(f"bad magic number {data[:2]!r}, expected P2 or P5", 0)
    binary = data[:2] == b"P5"
    reader = _HeaderReader(data)
    reader.pos = 2
    if reader.pos < len(data) and data[2:3] not in _WHITESPACE and data[2:3] != b"#":
        raise PgmParseError("magic number must be followed by whitespace", 2)
    width = reader.integer("width")
    height = reader.integer("height")
    maxval = reader.integer("maxval")
    if width < 1 or height < 1:
        raise PgmParseError(f"non-positive size {width}x{height}", reader.pos)
    if not 1 <= maxval <= 65535:
        raise PgmParseError(f"maxval {maxval} outside [1, 65535]", reader.pos)
    count = width * height

    if binary:
        if reader.pos >= len(data) or data[reader.pos:reader.pos + 1] not in _WHITESPACE:
            raise PgmLengthError("missing whitespace after maxval", reader.pos)
        start = reader.pos + 1
        dtype = np.dtype(">u1") if maxval < 256 else np.dtype(">u2")
        need = count * dtype.itemsize
        payload = data[start:start + need]
        if len(payload) < need:
            raise PgmLengthError(
                f"payload has {len(payload)} bytes, expected {need}", start + len(payload)
            )
        pixels = np.frombuffer(payload, dtype=dtype).astype(np.int64)
    else:
        values = []
        for _ in range(count):
            values.append(reader.integer("pixel value"))
        pixels = np.array(values, dtype=np.int64)

    if pixels.max() > maxval:
        bad = int(np.argmax(pixels > maxval))
        raise PixelRangeError(
            f"pixel {bad} has value {int(pixels[bad])} > maxval {maxval}"
        )
    return GrayImage(pixels.reshape(height, width), modulus=maxval + 1)


def read_pgm(path, modulus=None):
    """Read a graymap; ``modulus`` overrides the ``maxval + 1`` default."""
    with open(path, "rb") as fh:
        image = parse_pgm(fh.read())
    if modulus is not None and modulus != image.modulus:
        image = GrayImage(image.pixels, modulus=modulus)
    return image


def pgm_bytes(image):
    """Binary P5 encoding with ``maxval = modulus - 1``."""
    maxval = image.modulus - 1
    if maxval > 65535:
        raise ValueError(f"modulus {image.modulus} too large for PGM")
    header = f"P5\n{image.width} {image.height}\n{maxval}\n".encode("ascii")
    dtype = ">u1" if maxval < 256 else ">u2"
    return header + image.pixels.astype(dtype).tobytes()


def write_pgm(image, path):
    with open(path, "wb") as fh:
        fh.write(pgm_bytes(image))


@dataclass(frozen=True)
class ProfileLine:
    row: int
    values: tuple

    def records(self):
        return [(col, v) for col, v in enumerate(self.values)]

    def transitions(self):
        """Number of positions where the gray level changes."""
        v = self.values
        return sum(1 for a, b in zip(v, v[1:]) if a != b)

    def plateaus(self):
        """Run lengths of constant gray level, left to right."""
        runs = []
        for a, b in zip((None,) + self.values, self.values):
            if a == b:
                runs[-1] += 1
            else:
                runs.append(1)
        return runs


def extract_profile(image, row):
    if not 0 <= row < image.height:
        raise IndexError(f"row {row} outside [0, {image.height - 1}]")
    return ProfileLine(row, tuple(int(v) for v in image.pixels[row]))


def _fmt(value):
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    return value


def emit_csv(records, path, header):
    """Write ``header`` then ``records`` as LF-terminated CSV.

    Reals are printed with 12 significant digits. ``path`` may also be an
    open text stream, or ``"-"`` for standard output.
    """
    rows = [list(r) for r in records]
    arity = len(header)
    for i, row in enumerate(rows):
        if len(row) != arity:
            raise ValueError(f"record {i} has {len(row)} fields, expected {arity}")
    if path == "-":
        _write_rows(sys.stdout, header, rows)
    elif isinstance(path, io.TextIOBase):
        _write_rows(path, header, rows)
    else:
        with open(path, "w", newline="") as fh:
            _write_rows(fh, header, rows)


def _write_rows(fh, header, rows):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])


TRACE_HEADER = ("iteration", "criterion_value", "entropy")
HISTOGRAM_HEADER = ("level", "count")
PROFILE_HEADER = ("col", "value")


def write_trace(trace, path):
    emit_csv(trace.records, path, TRACE_HEADER)


def read_trace(path):
    """Parse a trace CSV back into ``(iteration, value, entropy)`` tuples."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != TRACE_HEADER:
        raise ValueError(f"{path}: not a trace file")
    return [(int(k), float(v), float(e)) for k, v, e in rows[1:]]
