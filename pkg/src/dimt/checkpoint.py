"""Self-describing binary checkpoint files.

Layout (all integers little-endian):

    bytes 0..8    magic ``b"DIMTCKP1"``
    bytes 8..12   uint32 ``n`` = length of the JSON header in bytes
    bytes 12..12+n  UTF-8 JSON header
    remainder     raw array data, concatenated in header order

The header is a JSON object with keys:

    version   format version, currently 1
    kind      checkpoint kind ("teacher", "student", "text_translator", ...)
    config    arbitrary JSON-serializable configuration snapshot
    meta      optional JSON-serializable extras (step counters etc.)
    arrays    list of {"name", "dtype", "shape", "offset", "nbytes"} entries;
              offsets are relative to the start of the data section

Arrays are stored C-contiguous in little-endian byte order, sorted by name,
so identical parameter values always produce identical file bytes.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

MAGIC = b"DIMTCKP1"
FORMAT_VERSION = 1


class CheckpointError(RuntimeError):
    pass


def save_checkpoint(path, kind: str, config: dict, arrays: dict, meta: dict | None = None) -> None:
    """Write ``arrays`` (name -> numpy array) with a self-describing header."""
    index = []
    blobs = []
    offset = 0
    for name in sorted(arrays):
        arr = np.ascontiguousarray(arrays[name])
        if arr.dtype.byteorder == ">":
            arr = arr.astype(arr.dtype.newbyteorder("<"))
        blob = arr.tobytes()
        index.append(
            {
                "name": name,
                "dtype": arr.dtype.str.lstrip("<=|"),
                "shape": list(arr.shape),
                "offset": offset,
                "nbytes": len(blob),
            }
        )
        blobs.append(blob)
        offset += len(blob)
    header = {
        "version": FORMAT_VERSION,
        "kind": kind,
        "config": config,
        "meta": meta or {},
        "arrays": index,
    }
    header_bytes = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(len(header_bytes).to_bytes(4, "little"))
        f.write(header_bytes)
        for blob in blobs:
            f.write(blob)


def load_checkpoint(path):
    """Read a checkpoint; returns (kind, config, arrays, meta)."""
    raw = Path(path).read_bytes()
    if raw[:8] != MAGIC:
        raise CheckpointError(f"{path}: not a checkpoint file (bad magic)")
    n = int.from_bytes(raw[8:12], "little")
    header = json.loads(raw[12 : 12 + n].decode("utf-8"))
    if header.get("version") != FORMAT_VERSION:
        raise CheckpointError(f"{path}: unsupported checkpoint version {header.get('version')}")
    data = raw[12 + n :]
    arrays = {}
    for entry in header["arrays"]:
        buf = data[entry["offset"] : entry["offset"] + entry["nbytes"]]
        arr = np.frombuffer(buf, dtype=np.dtype(entry["dtype"]).newbyteorder("<"))
        arrays[entry["name"]] = arr.reshape(entry["shape"]).copy()
    return header["kind"], header["config"], arrays, header.get("meta", {})


def file_sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def arrays_sha256(arrays: dict) -> str:
    """Order-independent content hash of a name -> array mapping."""
    h = hashlib.sha256()
    for name in sorted(arrays):
        arr = np.ascontiguousarray(arrays[name])
        h.update(name.encode("utf-8"))
        h.update(str(arr.dtype).encode())
        h.update(str(arr.shape).encode())
        h.update(arr.tobytes())
    return h.hexdigest()
