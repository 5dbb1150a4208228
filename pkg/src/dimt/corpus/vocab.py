"""Word-level vocabularies and markdown tokenization.

Documents are tokenized line by line: tokens within a line are separated
by single spaces, and every newline becomes the ``<nl>`` token.  With the
canonical spacing the corpus generator emits, encode/decode round-trips
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PAD, BOS, EOS, UNK, NL = "<pad>", "<bos>", "<eos>", "<unk>", "<nl>"

# structural markers shared by source and target languages
MARKERS = ["#", "##", "###", "-", "|", "$", "$$", "+", "="]


@dataclass
class Vocabulary:
    words: list
    _id_of: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.tokens = [PAD, BOS, EOS, UNK, NL] + MARKERS + list(self.words)
        self._id_of = {t: i for i, t in enumerate(self.tokens)}
        if len(self._id_of) != len(self.tokens):
            raise ValueError("vocabulary contains duplicate tokens")

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def pad_id(self) -> int:
        return self._id_of[PAD]

    @property
    def bos_id(self) -> int:
        return self._id_of[BOS]

    @property
    def eos_id(self) -> int:
        return self._id_of[EOS]

    @property
    def unk_id(self) -> int:
        return self._id_of[UNK]

    @property
    def nl_id(self) -> int:
        return self._id_of[NL]

    def id_of(self, token: str) -> int:
        return self._id_of.get(token, self._id_of[UNK])

    def encode(self, text: str, add_bos: bool = False, add_eos: bool = False) -> list:
        ids = [self.bos_id] if add_bos else []
        for i, line in enumerate(text.split("\n")):
            if i > 0:
                ids.append(self.nl_id)
            ids.extend(self.id_of(tok) for tok in line.split())
        if add_eos:
            ids.append(self.eos_id)
        return ids

    def decode(self, ids) -> str:
        lines = [[]]
        stop = {self.pad_id, self.bos_id, self.eos_id}
        for i in ids:
            i = int(i)
            if i in stop:
                continue
            if i == self.nl_id:
                lines.append([])
            else:
                lines[-1].append(self.tokens[i])
        return "\n".join(" ".join(line) for line in lines)
