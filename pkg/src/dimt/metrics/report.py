"""Corpus- and slice-level evaluation reports.

A report bundles the three corpus scores (BLEU, BLEU-PT, STEDS), the same
scores per named slice, and per-sample rows, together with a provenance
block describing how the numbers were produced.  Slices with no members
report ``None`` scores rather than zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bleu import bleu_pt, corpus_bleu
from .structure import parse_structure_tree
from .ted import steds

CONTEXT_BUCKETS = [
    ("context_(0,250]", 0, 250),
    ("context_(250,500]", 250, 500),
    ("context_(500,750]", 500, 750),
    ("context_(750,inf)", 750, None),
]


@dataclass
class SampleScore:
    sample_id: str
    bleu: float
    bleu_pt: float
    steds: float
    context_length: int
    layout_nodes: int


@dataclass
class EvalReport:
    corpus: dict
    slices: dict
    samples: list
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "slices": self.slices,
            "samples": [vars(s) for s in self.samples],
            "provenance": self.provenance,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "EvalReport":
        return cls(
            corpus=d["corpus"],
            slices=d["slices"],
            samples=[SampleScore(**s) for s in d["samples"]],
            provenance=d.get("provenance", {}),
        )

    def table(self) -> str:
        """Human-readable score table; the JSON form is the machine twin."""
        rows = [("corpus", self.corpus, len(self.samples))]
        rows += [(name, entry["scores"], entry["n"]) for name, entry in sorted(self.slices.items())]
        lines = [f"{'slice':<22} {'n':>5} {'BLEU':>8} {'BLEU-PT':>8} {'STEDS':>7}"]
        for name, scores, n in rows:
            def fmt(key, width, digits):
                v = scores.get(key)
                return f"{v:>{width}.{digits}f}" if v is not None else " " * (width - 1) + "-"
            lines.append(f"{name:<22} {n:>5} {fmt('bleu', 8, 2)} {fmt('bleu_pt', 8, 2)} {fmt('steds', 7, 4)}")
        return "\n".join(lines)


def context_bucket(context_length: int):
    """Name of the context-length bucket containing ``context_length``, if any."""
    for name, lo, hi in CONTEXT_BUCKETS:
        if context_length > lo and (hi is None or context_length <= hi):
            return name
    return None


def _score_subset(hyps, refs):
    if not hyps:
        return {"bleu": None, "bleu_pt": None, "steds": None}
    trees_h = [parse_structure_tree(h) for h in hyps]
    trees_r = [parse_structure_tree(r) for r in refs]
    return {
        "bleu": corpus_bleu(hyps, refs),
        "bleu_pt": bleu_pt(hyps, refs),
        "steds": sum(steds(a, b) for a, b in zip(trees_h, trees_r)) / len(hyps),
    }


def slice_report(
    samples,
    hypotheses,
    references,
    extra_slices: dict | None = None,
    layout_k: int = 100,
    provenance: dict | None = None,
) -> EvalReport:
    """Score a corpus plus built-in and caller-provided slices.

    ``samples`` is a list of metadata mappings with at least ``id``,
    ``context_length``, and ``layout_nodes``.  ``extra_slices`` maps slice
    names to predicates over those mappings.  Built-in slices are the four
    context-length buckets and the bottom-k/top-k layout-complexity sets.
    """
    if not (len(samples) == len(hypotheses) == len(references)):
        raise ValueError("samples, hypotheses, and references must be aligned")

    per_sample = []
    for meta, hyp, ref in zip(samples, hypotheses, references):
        th, tr = parse_structure_tree(hyp), parse_structure_tree(ref)
        per_sample.append(
            SampleScore(
                sample_id=meta["id"],
                bleu=corpus_bleu([hyp], [ref]),
                bleu_pt=bleu_pt([hyp], [ref]),
                steds=steds(th, tr),
                context_length=meta["context_length"],
                layout_nodes=meta["layout_nodes"],
            )
        )

    members: dict = {name: [] for name, _, _ in CONTEXT_BUCKETS}
    for i, meta in enumerate(samples):
        bucket = context_bucket(meta["context_length"])
        if bucket is not None:
            members[bucket].append(i)

    k = min(layout_k, len(samples) // 2) if len(samples) >= 2 else len(samples)
    by_nodes = sorted(range(len(samples)), key=lambda i: (samples[i]["layout_nodes"], samples[i]["id"]))
    members[f"layout_simple_{k}"] = sorted(by_nodes[:k])
    members[f"layout_complex_{k}"] = sorted(by_nodes[len(samples) - k :])

    for name, pred in (extra_slices or {}).items():
        members[name] = [i for i, meta in enumerate(samples) if pred(meta)]

    slices = {}
    for name, idx in members.items():
        slices[name] = {
            "n": len(idx),
            "scores": _score_subset([hypotheses[i] for i in idx], [references[i] for i in idx]),
        }

    return EvalReport(
        corpus=_score_subset(hypotheses, references),
        slices=slices,
        samples=per_sample,
        provenance=provenance or {},
    )
