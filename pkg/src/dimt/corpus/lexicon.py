"""Deterministic synthetic target language.

Translation is a per-word bijection: every source word maps to exactly one
target word and back.  Source words are built from one syllable inventory,
target words from a disjoint one, and the letter ``q`` is excluded from
both so it can serve as the fallback marker: a word outside the lexicon
translates to ``"q" + word`` and inverts by stripping the prefix.  This
keeps translation total, deterministic, and exactly invertible, which is
what lets generated references double as evaluation oracles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

_SRC_ONSETS = ["b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t"]
_SRC_VOWELS = ["a", "e", "i", "o", "u"]
_TGT_ONSETS = ["v", "z", "w", "j", "h", "c", "x", "y"]
_TGT_VOWELS = ["aa", "ee", "oo", "ai", "ou"]

_WORD_RE = re.compile(r"[A-Za-z]+")
FALLBACK_PREFIX = "q"


def _make_words(onsets, vowels, count: int, rng: np.random.Generator) -> list:
    words = []
    seen = set()
    while len(words) < count:
        n_syll = int(rng.integers(2, 4))
        w = "".join(onsets[rng.integers(len(onsets))] + vowels[rng.integers(len(vowels))] for _ in range(n_syll))
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


@dataclass
class Lexicon:
    """Bijective source->target word mapping with a fallback rule."""

    source_words: list
    target_words: list
    forward: dict = field(init=False, repr=False)
    backward: dict = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.source_words) != len(self.target_words):
            raise ValueError("source and target word lists must have equal length")
        self.forward = dict(zip(self.source_words, self.target_words))
        self.backward = dict(zip(self.target_words, self.source_words))
        if len(self.forward) != len(self.source_words) or len(self.backward) != len(self.target_words):
            raise ValueError("lexicon words must be unique on both sides")

    def translate_word(self, word: str) -> str:
        return self.forward.get(word, FALLBACK_PREFIX + word)

    def invert_word(self, word: str) -> str:
        if word in self.backward:
            return self.backward[word]
        if word.startswith(FALLBACK_PREFIX):
            return word[len(FALLBACK_PREFIX):]
        return word


def build_lexicon(vocab_size: int, seed: int) -> Lexicon:
    """Deterministic lexicon of ``vocab_size`` word pairs."""
    if vocab_size < 20:
        raise ValueError(f"vocabulary size {vocab_size} too small; need at least 20 words")
    rng = np.random.default_rng([int(seed), 0xC0F])
    src = _make_words(_SRC_ONSETS, _SRC_VOWELS, vocab_size, rng)
    tgt = _make_words(_TGT_ONSETS, _TGT_VOWELS, vocab_size, rng)
    return Lexicon(src, tgt)


def translate_source(markdown: str, lexicon: Lexicon) -> str:
    """Word-for-word translation; structural markers pass through verbatim."""
    return _WORD_RE.sub(lambda m: lexicon.translate_word(m.group(0)), markdown)


def invert_translation(markdown: str, lexicon: Lexicon) -> str:
    """Exact inverse of :func:`translate_source`."""
    return _WORD_RE.sub(lambda m: lexicon.invert_word(m.group(0)), markdown)
