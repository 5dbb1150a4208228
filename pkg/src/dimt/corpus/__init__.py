"""Synthetic document corpus: generation, rendering, and the target language."""

from .generate import (
    Corpus,
    CorpusManifest,
    DocumentSample,
    GenerationConfig,
    generate_corpus,
    generate_markdown,
    measure_context_length,
    measure_layout_complexity,
)
from .images import RasterImage, read_ppm, write_ppm
from .lexicon import Lexicon, build_lexicon, invert_translation, translate_source
from .render import PageOverflowError, RenderConfig, noisy_preset, render_document
from .vocab import MARKERS, Vocabulary

__all__ = [
    "Corpus",
    "CorpusManifest",
    "DocumentSample",
    "GenerationConfig",
    "generate_corpus",
    "generate_markdown",
    "measure_context_length",
    "measure_layout_complexity",
    "RasterImage",
    "read_ppm",
    "write_ppm",
    "Lexicon",
    "build_lexicon",
    "invert_translation",
    "translate_source",
    "PageOverflowError",
    "RenderConfig",
    "noisy_preset",
    "render_document",
    "MARKERS",
    "Vocabulary",
]
