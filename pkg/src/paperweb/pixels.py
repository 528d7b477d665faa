"""Screenshot container and pixel-level comparison.

Screenshots are lossless PNG so that diff values are bit-stable across
runs; the visible-change diff is the mean absolute per-channel difference
normalized to [0, 1].
"""

from __future__ import annotations

import io
import time
from dataclasses import dataclass, field

import numpy as np
from PIL import Image

from .errors import DimensionMismatch


@dataclass
class Screenshot:
    """One lossless capture of a page state."""

    png_bytes: bytes
    width: int
    height: int
    label: str = ""
    captured_at: float = field(default_factory=time.time)

    def __post_init__(self):
        if not self.png_bytes:
            raise ValueError("screenshot has no image bytes")

    def to_array(self) -> np.ndarray:
        """Decode to an (H, W, 3) uint8 RGB array."""
        with Image.open(io.BytesIO(self.png_bytes)) as im:
            return np.asarray(im.convert("RGB"), dtype=np.uint8)

    def save(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(self.png_bytes)


def screenshot_from_image(image: Image.Image, label: str = "") -> Screenshot:
    """Encode a PIL image as a PNG screenshot."""
    buf = io.BytesIO()
    image.convert("RGB").save(buf, format="PNG")
    return Screenshot(
        png_bytes=buf.getvalue(),
        width=image.width,
        height=image.height,
        label=label,
    )


def screenshot_from_array(pixels: np.ndarray, label: str = "") -> Screenshot:
    """Encode an (H, W, 3) uint8 array as a PNG screenshot."""
    return screenshot_from_image(Image.fromarray(pixels, mode="RGB"), label=label)


def load_screenshot(path, label: str = "") -> Screenshot:
    with open(path, "rb") as fh:
        data = fh.read()
    with Image.open(io.BytesIO(data)) as im:
        width, height = im.size
    return Screenshot(png_bytes=data, width=width, height=height, label=label)


def image_diff(a: Screenshot, b: Screenshot) -> float:
    """Mean absolute per-channel pixel difference, normalized to [0, 1].

    0.0 means bit-identical RGB content; 1.0 means every channel of every
    pixel differs by the full 255 range.

    Raises:
        DimensionMismatch: if the two screenshots have different sizes.
    """
    if (a.width, a.height) != (b.width, b.height):
        raise DimensionMismatch(
            f"cannot diff {a.width}x{a.height} against {b.width}x{b.height}"
        )
    pa = a.to_array().astype(np.int16)
    pb = b.to_array().astype(np.int16)
    return float(np.abs(pa - pb).mean() / 255.0)
