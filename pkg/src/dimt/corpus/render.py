"""Deterministic markdown-to-page rendering.

Pages are monochrome anti-aliased text on a white background, drawn with
Pillow's bundled scalable font so output bytes depend only on the inputs
(and the Pillow build, which is fixed per platform).  Headings render
larger than body text, list items are indented, and content that does not
fit the page raises :class:`PageOverflowError` instead of being silently
cut off.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from PIL import Image, ImageDraw, ImageFont

from .images import RasterImage


class PageOverflowError(ValueError):
    """Markdown does not fit the configured page."""


@dataclass(frozen=True)
class RenderConfig:
    page_height: int = 224
    page_width: int = 168
    font_size: int = 9
    margin: int = 5
    line_spacing: int = 2
    list_indent: int = 8
    # heading font sizes are the body size scaled by level
    heading_scale: tuple = (1.7, 1.4, 1.2)
    # "noisy" preset: per-line font-size jitter of +/- amplitude, seeded
    noise_amplitude: int = 0
    noise_seed: int = 0

    def __post_init__(self):
        if self.page_height <= 0 or self.page_width <= 0:
            raise ValueError("page dimensions must be positive")
        if self.font_size < 4:
            raise ValueError("font size too small to render")

    def to_dict(self) -> dict:
        return {
            "page_height": self.page_height,
            "page_width": self.page_width,
            "font_size": self.font_size,
            "margin": self.margin,
            "line_spacing": self.line_spacing,
            "list_indent": self.list_indent,
            "heading_scale": list(self.heading_scale),
            "noise_amplitude": self.noise_amplitude,
            "noise_seed": self.noise_seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RenderConfig":
        d = dict(d)
        if "heading_scale" in d:
            d["heading_scale"] = tuple(d["heading_scale"])
        return cls(**d)


_FONT_CACHE: dict = {}


def _font(size: int) -> ImageFont.FreeTypeFont:
    if size not in _FONT_CACHE:
        _FONT_CACHE[size] = ImageFont.load_default(size=size)
    return _FONT_CACHE[size]


def _wrap(words, font, width, measure) -> list:
    """Greedy word wrap; returns a list of line strings."""
    lines = []
    current = ""
    for w in words:
        trial = w if not current else current + " " + w
        if current and measure(trial, font) > width:
            lines.append(current)
            current = w
        else:
            current = trial
    if current or not lines:
        lines.append(current)
    return lines


def render_document(markdown: str, config: RenderConfig | None = None) -> RasterImage:
    """Rasterize markdown onto a single page.

    Raises :class:`PageOverflowError` when the text does not fit.
    """
    config = config or RenderConfig()
    page = Image.new("L", (config.page_width, config.page_height), 255)
    draw = ImageDraw.Draw(page)
    rng = np.random.default_rng([config.noise_seed, 0xD0C]) if config.noise_amplitude else None

    y = config.margin
    usable = config.page_width - 2 * config.margin
    line_no = 0
    for raw_line in markdown.split("\n"):
        line = raw_line.rstrip()
        if not line:
            y += config.font_size // 2 + config.line_spacing
            continue
        size = config.font_size
        indent = 0
        if line.startswith("### "):
            size = round(config.font_size * config.heading_scale[2])
        elif line.startswith("## "):
            size = round(config.font_size * config.heading_scale[1])
        elif line.startswith("# "):
            size = round(config.font_size * config.heading_scale[0])
        elif line.startswith("- "):
            indent = config.list_indent
        if rng is not None:
            size = max(4, size + int(rng.integers(-config.noise_amplitude, config.noise_amplitude + 1)))
        font = _font(size)
        for wrapped in _wrap(line.split(), font, usable - indent, lambda t, f: draw.textlength(t, font=f)):
            ascent, descent = font.getmetrics()
            line_h = ascent + descent + config.line_spacing
            if y + line_h > config.page_height - config.margin:
                raise PageOverflowError(
                    f"line {line_no}: page {config.page_width}x{config.page_height} overflows at font size {size}"
                )
            draw.text((config.margin + indent, y), wrapped, font=font, fill=0)
            y += line_h
            line_no += 1
    return RasterImage.from_uint8(np.asarray(page))


def noisy_preset(config: RenderConfig, amplitude: int = 2, seed: int = 0) -> RenderConfig:
    """Font-size jitter variant used to emulate a domain gap."""
    return replace(config, noise_amplitude=amplitude, noise_seed=seed)
