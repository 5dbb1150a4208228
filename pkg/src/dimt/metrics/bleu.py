"""Corpus BLEU and its plain-text variant.

BLEU here is the classic corpus-level 4-gram score: modified n-gram
precisions aggregated over the whole corpus, geometric mean, multiplied
by the brevity penalty and scaled to [0, 100].  Zero n-gram counts are
smoothed additively (epsilon in the numerator) so early-training output
does not collapse the score; pass ``smooth_eps=0`` for the unsmoothed
definition.

BLEU-PT is the same score computed after stripping formula spans and
table blocks from both sides.
"""

from __future__ import annotations

import logging
import math
import re
from collections import Counter

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"[A-Za-z0-9]+|[^A-Za-z0-9\s]")

MAX_ORDER = 4
DEFAULT_SMOOTH_EPS = 0.1


def bleu_tokenize(text: str) -> list:
    """Whitespace plus punctuation split; every non-alphanumeric mark is its own token."""
    return _TOKEN_RE.findall(text)


def _ngrams(tokens, n):
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(hypotheses, references, smooth_eps: float = DEFAULT_SMOOTH_EPS) -> float:
    """Corpus-level BLEU in [0, 100] for aligned hypothesis/reference lists."""
    if len(hypotheses) != len(references):
        raise ValueError(f"{len(hypotheses)} hypotheses vs {len(references)} references")
    if not hypotheses:
        raise ValueError("cannot score an empty corpus")

    matches = [0] * MAX_ORDER
    totals = [0] * MAX_ORDER
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        h = bleu_tokenize(hyp)
        r = bleu_tokenize(ref)
        hyp_len += len(h)
        ref_len += len(r)
        for n in range(1, MAX_ORDER + 1):
            hgrams = _ngrams(h, n)
            rgrams = _ngrams(r, n)
            totals[n - 1] += max(len(h) - n + 1, 0)
            matches[n - 1] += sum(min(c, rgrams[g]) for g, c in hgrams.items())

    # orders with no n-grams anywhere in the corpus (all documents shorter
    # than n tokens) are excluded rather than zeroing the score
    orders = [n for n in range(MAX_ORDER) if totals[n] > 0]
    if not orders:
        return 0.0
    log_precision = 0.0
    for n in orders:
        m = matches[n] if matches[n] > 0 else smooth_eps
        if m == 0:
            return 0.0
        log_precision += math.log(m / totals[n])
    log_precision /= len(orders)

    if hyp_len == 0:
        return 0.0
    brevity = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return 100.0 * brevity * math.exp(log_precision)


_INLINE_FORMULA_RE = re.compile(r"\$[^$\n]*\$")


def strip_plain_text(markdown: str) -> str:
    """Drop formulas and tables, remove structural markers, normalize whitespace."""
    out_words = []
    lines = markdown.split("\n")
    i = 0
    n = len(lines)
    while i < n:
        line = lines[i].rstrip()
        stripped = line.strip()
        if not stripped:
            i += 1
            continue
        if stripped.startswith("|"):
            i += 1
            continue
        if stripped.startswith("```"):
            i += 1
            while i < n and not lines[i].strip().startswith("```"):
                i += 1
            i += 1
            continue
        if stripped.startswith("$$"):
            if not (len(stripped) > 2 and stripped.endswith("$$")):
                i += 1
                while i < n and not lines[i].strip().endswith("$$"):
                    i += 1
            i += 1
            continue
        # heading and list markers
        line = re.sub(r"^\s*#{1,6}\s*", "", line)
        line = re.sub(r"^\s*-\s+", "", line)
        # inline formula spans; an unbalanced "$" strips to end of line
        line = _INLINE_FORMULA_RE.sub(" ", line)
        if "$" in line:
            logger.warning("unbalanced formula delimiter; stripping to end of line: %r", line)
            line = line[: line.index("$")]
        out_words.extend(line.split())
        i += 1
    return " ".join(out_words)


def bleu_pt(hypotheses, references, smooth_eps: float = DEFAULT_SMOOTH_EPS) -> float:
    """BLEU over plain text only (formulas and tables removed from both sides)."""
    return corpus_bleu(
        [strip_plain_text(h) for h in hypotheses],
        [strip_plain_text(r) for r in references],
        smooth_eps=smooth_eps,
    )
