"""Raster page images and their lossless on-disk form.

Pages are stored as binary PPM (P6, 8-bit RGB): trivially parseable,
bit-exact across platforms, and diffable with standard tools.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class RasterImage:
    """Dense H x W x 3 image with float pixel values in [0, 1]."""

    pixels: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.pixels, dtype=np.float32)
        if p.ndim != 3 or p.shape[2] != 3:
            raise ValueError(f"expected (H, W, 3) pixels, got shape {p.shape}")
        if p.shape[0] < 1 or p.shape[1] < 1:
            raise ValueError("image dimensions must be positive")
        if p.min() < 0.0 or p.max() > 1.0:
            raise ValueError("pixel values must lie in [0, 1]")
        self.pixels = p

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @classmethod
    def from_uint8(cls, arr: np.ndarray) -> "RasterImage":
        arr = np.asarray(arr, dtype=np.uint8)
        if arr.ndim == 2:
            arr = np.repeat(arr[:, :, None], 3, axis=2)
        return cls(arr.astype(np.float32) / 255.0)

    def to_uint8(self) -> np.ndarray:
        return np.round(self.pixels * 255.0).astype(np.uint8)


def write_ppm(path, image: RasterImage) -> None:
    arr = image.to_uint8()
    header = f"P6\n{arr.shape[1]} {arr.shape[0]}\n255\n".encode("ascii")
    with open(path, "wb") as f:
        f.write(header)
        f.write(arr.tobytes())


def read_ppm(path) -> RasterImage:
    with open(path, "rb") as f:
        raw = f.read()
    if not raw.startswith(b"P6"):
        raise ValueError(f"{path}: not a binary PPM file")
    # header: magic, width, height, maxval, then a single whitespace byte
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(raw) and raw[pos : pos + 1].isspace():
            pos += 1
        if raw[pos : pos + 1] == b"#":  # comment line
            pos = raw.index(b"\n", pos) + 1
            continue
        start = pos
        while pos < len(raw) and not raw[pos : pos + 1].isspace():
            pos += 1
        fields.append(int(raw[start:pos]))
    pos += 1  # single whitespace after maxval
    width, height, maxval = fields
    if maxval != 255:
        raise ValueError(f"{path}: unsupported maxval {maxval}")
    data = np.frombuffer(raw, dtype=np.uint8, count=height * width * 3, offset=pos)
    return RasterImage.from_uint8(data.reshape(height, width, 3))
