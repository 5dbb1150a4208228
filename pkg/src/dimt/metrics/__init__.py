"""Evaluation metrics: BLEU, plain-text BLEU, and structure similarity."""

from .bleu import bleu_pt, bleu_tokenize, corpus_bleu, strip_plain_text
from .report import CONTEXT_BUCKETS, EvalReport, SampleScore, context_bucket, slice_report
from .structure import LABELS, TreeNode, parse_structure_tree, tree_size
from .ted import steds, tree_edit_distance

__all__ = [
    "bleu_pt",
    "bleu_tokenize",
    "corpus_bleu",
    "strip_plain_text",
    "CONTEXT_BUCKETS",
    "EvalReport",
    "SampleScore",
    "context_bucket",
    "slice_report",
    "LABELS",
    "TreeNode",
    "parse_structure_tree",
    "tree_size",
    "steds",
    "tree_edit_distance",
]
