"""Synthetic bilingual document corpora.

Every sample is derived from its own RNG stream seeded by (corpus seed,
sample index), so generation is order-independent and reproducible byte
for byte.  A corpus directory holds:

    manifest.jsonl      header record (config snapshot) + one record per sample
    images/<id>.ppm     rendered page (binary PPM)
    text/<id>.src.md    source markdown
    text/<id>.ref.md    reference translation
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from ..metrics.structure import tree_size
from .images import RasterImage, read_ppm, write_ppm
from .lexicon import Lexicon, build_lexicon, translate_source
from .render import PageOverflowError, RenderConfig, render_document
from .vocab import Vocabulary

DEFAULT_ELEMENT_WEIGHTS = {
    "heading": 0.22,
    "paragraph": 0.38,
    "list": 0.16,
    "formula": 0.12,
    "table": 0.12,
}


@dataclass(frozen=True)
class GenerationConfig:
    seed: int = 0
    n_samples: int = 100
    split_ratios: tuple = (0.8, 0.1, 0.1)
    vocab_size: int = 200
    min_words: int = 12
    max_words: int = 40
    element_weights: dict = field(default_factory=lambda: dict(DEFAULT_ELEMENT_WEIGHTS))
    render: RenderConfig = field(default_factory=RenderConfig)
    noisy: bool = False

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("sample count must be at least 1")
        if len(self.split_ratios) != 3 or any(r < 0 for r in self.split_ratios):
            raise ValueError("split_ratios must be three non-negative numbers")
        if abs(sum(self.split_ratios) - 1.0) > 1e-9:
            raise ValueError(f"split ratios must sum to 1, got {sum(self.split_ratios)}")
        if not 1 <= self.min_words <= self.max_words:
            raise ValueError("need 1 <= min_words <= max_words")
        if self.vocab_size < 20:
            raise ValueError(f"vocabulary of {self.vocab_size} words too small for document generation")

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_samples": self.n_samples,
            "split_ratios": list(self.split_ratios),
            "vocab_size": self.vocab_size,
            "min_words": self.min_words,
            "max_words": self.max_words,
            "element_weights": dict(self.element_weights),
            "render": self.render.to_dict(),
            "noisy": self.noisy,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GenerationConfig":
        d = dict(d)
        if "split_ratios" in d:
            d["split_ratios"] = tuple(d["split_ratios"])
        if "render" in d:
            d["render"] = RenderConfig.from_dict(d["render"])
        return cls(**d)


@dataclass
class DocumentSample:
    id: str
    split: str
    context_length: int
    layout_nodes: int

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "split": self.split,
            "context_length": self.context_length,
            "layout_nodes": self.layout_nodes,
        }


@dataclass
class CorpusManifest:
    config: GenerationConfig
    samples: list

    @property
    def seed(self) -> int:
        return self.config.seed

    def ids(self, split: str | None = None) -> list:
        return [s.id for s in self.samples if split is None or s.split == split]

    def sample(self, sample_id: str) -> DocumentSample:
        for s in self.samples:
            if s.id == sample_id:
                return s
        raise KeyError(sample_id)


def measure_context_length(text: str) -> int:
    """Whitespace-delimited token count of the source document text."""
    return len(text.split())


def measure_layout_complexity(markdown: str) -> int:
    """Structure-tree node count; delegates to the metrics grammar."""
    return tree_size(markdown)


def _pick(rng: np.random.Generator, words: list) -> str:
    return words[int(rng.integers(len(words)))]


def _sample_block(rng: np.random.Generator, kinds, probs, words, first: bool) -> str:
    kind = "heading" if first else kinds[int(rng.choice(len(kinds), p=probs))]
    if kind == "heading":
        level = 1 if first else int(rng.integers(1, 4))
        n = int(rng.integers(2, 5))
        return "#" * level + " " + " ".join(_pick(rng, words) for _ in range(n))
    if kind == "paragraph":
        n = int(rng.integers(6, 16))
        toks = [_pick(rng, words) for _ in range(n)]
        if rng.random() < 0.3 and n >= 4:
            # inline formula span inside the paragraph
            i = int(rng.integers(1, n - 2))
            toks[i : i + 2] = ["$", toks[i], "+", toks[i + 1], "$"]
        return " ".join(toks)
    if kind == "list":
        n_items = int(rng.integers(2, 5))
        return "\n".join("- " + " ".join(_pick(rng, words) for _ in range(int(rng.integers(2, 5)))) for _ in range(n_items))
    if kind == "formula":
        return f"$$ {_pick(rng, words)} + {_pick(rng, words)} = {_pick(rng, words)} $$"
    if kind == "table":
        rows = int(rng.integers(2, 4))
        cols = int(rng.integers(2, 4))
        return "\n".join("| " + " | ".join(_pick(rng, words) for _ in range(cols)) + " |" for _ in range(rows))
    raise ValueError(f"unknown element kind {kind!r}")


def generate_markdown(config: GenerationConfig, lexicon: Lexicon, index: int) -> str:
    """Source markdown for sample ``index``; deterministic in (config.seed, index)."""
    rng = np.random.default_rng([config.seed, 1000 + index])
    budget = int(rng.integers(config.min_words, config.max_words + 1))
    kinds = sorted(config.element_weights)
    probs = np.array([config.element_weights[k] for k in kinds], dtype=float)
    probs /= probs.sum()
    blocks = []
    used = 0
    while used < budget:
        block = _sample_block(rng, kinds, probs, lexicon.source_words, first=not blocks)
        blocks.append(block)
        used += measure_context_length(block)
    markdown = "\n\n".join(blocks)
    # deterministic trim: drop trailing blocks until the page fits
    while True:
        try:
            render_document(markdown, config.render)
            return markdown
        except PageOverflowError:
            if len(blocks) == 1:
                raise
            blocks.pop()
            markdown = "\n\n".join(blocks)


def _split_of(index: int, n: int, ratios) -> str:
    bounds = np.floor(np.cumsum(ratios) * n + 0.5).astype(int)
    if index < bounds[0]:
        return "train"
    if index < bounds[1]:
        return "valid"
    return "test"


def generate_corpus(config: GenerationConfig, out_dir) -> CorpusManifest:
    """Generate and write a corpus; returns its manifest."""
    out = Path(out_dir)
    (out / "images").mkdir(parents=True, exist_ok=True)
    (out / "text").mkdir(parents=True, exist_ok=True)
    lexicon = build_lexicon(config.vocab_size, config.seed)
    render_cfg = config.render
    samples = []
    for i in range(config.n_samples):
        sid = f"doc{i:05d}"
        src = generate_markdown(config, lexicon, i)
        ref = translate_source(src, lexicon)
        cfg_i = replace(render_cfg, noise_amplitude=2, noise_seed=config.seed * 100003 + i) if config.noisy else render_cfg
        image = render_document(src, cfg_i)
        write_ppm(out / "images" / f"{sid}.ppm", image)
        (out / "text" / f"{sid}.src.md").write_text(src, encoding="utf-8")
        (out / "text" / f"{sid}.ref.md").write_text(ref, encoding="utf-8")
        samples.append(
            DocumentSample(
                id=sid,
                split=_split_of(i, config.n_samples, config.split_ratios),
                context_length=measure_context_length(src),
                layout_nodes=measure_layout_complexity(src),
            )
        )
    with open(out / "manifest.jsonl", "w", encoding="utf-8") as f:
        f.write(json.dumps({"kind": "header", "config": config.to_dict()}, sort_keys=True) + "\n")
        for s in samples:
            f.write(json.dumps(s.to_record(), sort_keys=True) + "\n")
    return CorpusManifest(config=config, samples=samples)


class Corpus:
    """Read access to a generated corpus directory."""

    def __init__(self, root):
        self.root = Path(root)
        manifest_path = self.root / "manifest.jsonl"
        if not manifest_path.exists():
            raise FileNotFoundError(f"no manifest.jsonl under {self.root}")
        with open(manifest_path, encoding="utf-8") as f:
            header = json.loads(f.readline())
            if header.get("kind") != "header":
                raise ValueError(f"{manifest_path}: first record must be the config header")
            config = GenerationConfig.from_dict(header["config"])
            samples = [DocumentSample(**json.loads(line)) for line in f if line.strip()]
        self.manifest = CorpusManifest(config=config, samples=samples)
        self.lexicon = build_lexicon(config.vocab_size, config.seed)
        self._vocab_src = None
        self._vocab_tgt = None

    @property
    def config(self) -> GenerationConfig:
        return self.manifest.config

    @property
    def source_vocab(self) -> Vocabulary:
        if self._vocab_src is None:
            self._vocab_src = Vocabulary(self.lexicon.source_words)
        return self._vocab_src

    @property
    def target_vocab(self) -> Vocabulary:
        if self._vocab_tgt is None:
            self._vocab_tgt = Vocabulary(self.lexicon.target_words)
        return self._vocab_tgt

    def ids(self, split: str | None = None) -> list:
        return self.manifest.ids(split)

    def image(self, sample_id: str) -> RasterImage:
        return read_ppm(self.root / "images" / f"{sample_id}.ppm")

    def source_markdown(self, sample_id: str) -> str:
        return (self.root / "text" / f"{sample_id}.src.md").read_text(encoding="utf-8")

    def reference_markdown(self, sample_id: str) -> str:
        return (self.root / "text" / f"{sample_id}.ref.md").read_text(encoding="utf-8")

    def metadata(self, split: str | None = None) -> list:
        return [s.to_record() for s in self.manifest.samples if split is None or s.split == split]
