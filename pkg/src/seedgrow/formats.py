"""Masks, seed lists, label maps and trace frames on disk.

2D masks are PGM (P2 or P5); 3D masks are a JSON header ``{"dims": [nx, ny,
nz]}`` plus a raw byte body with x varying fastest. A 3D point ``(x, y, z)``
maps to array index ``[x, y, z]``; a 2D pixel at row r, column c is ``(r, c)``.

Label files use fixed codes: 0 unlabeled, 1 boundary, 2.. the seeds in
SeedList order. 2D label maps are written as P5 PGM with the legend in
comment lines; other dimensions use a one-line JSON header followed by a
little-endian uint16 body, x fastest.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

import numpy as np

from .grid import GridDomain
from .growers import GrowResult, Seed, validate_seeds

__all__ = [
    "FormatError",
    "read_mask_2d",
    "write_mask_2d",
    "read_mask_3d",
    "write_mask_3d",
    "read_seeds",
    "write_seeds",
    "LabelFile",
    "label_codes",
    "write_labels",
    "read_labels",
    "encode_labels",
    "TraceRecorder",
    "write_trace_frames",
    "CODE_UNLABELED",
    "CODE_BOUNDARY",
]

CODE_UNLABELED = 0
CODE_BOUNDARY = 1
NAME_UNLABELED = "UNLABELED"
NAME_BOUNDARY = "BOUNDARY"
_LABEL_MAGIC = "# seedgrow-labels 1"


class FormatError(ValueError):
    """Malformed input; ``offset`` is the byte position where parsing stopped."""

    def __init__(self, msg: str, offset: int | None = None):
        self.offset = offset
        super().__init__(msg if offset is None else f"{msg} (at byte {offset})")


# PGM


def _pgm_header(data: bytes, ntokens: int):
    """Read ``ntokens`` whitespace-separated header tokens, skipping comments.

    Returns (tokens, comments, offset just past the last token).
    """
    tokens, comments = [], []
    pos, n = 0, len(data)
    while len(tokens) < ntokens:
        while pos < n and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= n:
            raise FormatError("truncated PGM header", pos)
        if data[pos : pos + 1] == b"#":
            end = data.find(b"\n", pos)
            end = n if end < 0 else end
            comments.append(data[pos:end].decode("utf-8", "replace"))
            pos = end
            continue
        start = pos
        while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        tokens.append((data[start:pos], start))
    return tokens, comments, pos


def _read_pgm(data: bytes):
    if data[:2] not in (b"P2", b"P5"):
        raise FormatError(f"not a P2/P5 PGM (magic {data[:2]!r})", 0)
    toks, comments, pos = _pgm_header(data, 4)
    magic = toks[0][0]
    vals = []
    for tok, off in toks[1:]:
        if not tok.isdigit():
            raise FormatError(f"bad header field {tok!r}", off)
        vals.append(int(tok))
    width, height, maxval = vals
    if width <= 0 or height <= 0:
        raise FormatError("image dimensions must be positive", toks[1][1])
    if not 0 < maxval <= 65535:
        raise FormatError(f"maxval {maxval} outside 1..65535", toks[3][1])
    count = width * height
    if magic == b"P5":
        if pos >= len(data) or not data[pos : pos + 1].isspace():
            raise FormatError("missing whitespace before P5 body", pos)
        pos += 1
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        need = count * dtype.itemsize
        if len(data) - pos < need:
            raise FormatError(f"truncated P5 body: need {need} bytes, have {len(data) - pos}", len(data))
        pix = np.frombuffer(data, dtype=dtype, count=count, offset=pos).astype(np.int64)
    else:
        body = data[pos:]
        fields = body.split()
        if len(fields) < count:
            raise FormatError(f"truncated P2 body: need {count} values, have {len(fields)}", len(data))
        try:
            pix = np.array([int(f) for f in fields[:count]], dtype=np.int64)
        except ValueError:
            m = re.search(rb"[^\s0-9]", body)
            raise FormatError("non-numeric P2 value", pos + (m.start() if m else 0)) from None
    if pix.max(initial=0) > maxval:
        raise FormatError(f"pixel value exceeds maxval {maxval}")
    return pix.reshape(height, width), comments


def read_mask_2d(data: bytes) -> GridDomain:
    """Decode a P2/P5 PGM; nonzero pixels form Omega."""
    pix, _ = _read_pgm(data)
    return GridDomain(pix != 0)


def _write_pgm(values: np.ndarray, comments=(), maxval: int | None = None) -> bytes:
    h, w = values.shape
    if maxval is None:
        maxval = max(255, int(values.max(initial=0)))
    head = "P5\n" + "".join(c + "\n" for c in comments) + f"{w} {h}\n{maxval}\n"
    dtype = ">u2" if maxval > 255 else "u1"
    return head.encode() + np.ascontiguousarray(values, dtype=dtype).tobytes()


def write_mask_2d(domain: GridDomain) -> bytes:
    if domain.ndim != 2:
        raise ValueError("write_mask_2d needs a 2D domain")
    return _write_pgm(domain.mask.astype(np.uint8) * 255)


# 3D raw


def read_mask_3d(header: bytes, body: bytes) -> GridDomain:
    """Decode a ``{"dims": [nx, ny, nz]}`` header and its x-fastest byte body."""
    try:
        meta = json.loads(header)
        dims = [int(n) for n in meta["dims"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad 3D header: {exc}") from None
    if len(dims) != 3 or min(dims) <= 0:
        raise FormatError(f"3D header needs three positive dims, got {dims}")
    nx, ny, nz = dims
    if len(body) != nx * ny * nz:
        raise FormatError(f"body has {len(body)} bytes, dims {dims} need {nx * ny * nz}", min(len(body), nx * ny * nz))
    arr = np.frombuffer(body, dtype=np.uint8).reshape(nz, ny, nx).transpose(2, 1, 0)
    return GridDomain(arr != 0)


def write_mask_3d(domain: GridDomain, body_name: str | None = None) -> tuple:
    """Return (header bytes, body bytes)."""
    if domain.ndim != 3:
        raise ValueError("write_mask_3d needs a 3D domain")
    meta = {"dims": list(domain.dims)}
    if body_name is not None:
        meta["body"] = body_name
    body = np.ascontiguousarray(domain.mask.transpose(2, 1, 0), dtype=np.uint8).tobytes()
    return (json.dumps(meta) + "\n").encode(), body


# seeds


def read_seeds(data: bytes, domain: GridDomain) -> list:
    """Parse ``{"seeds": [{"id": str, "points": [[...], ...]}, ...]}``.

    The list order is the initialisation order. Seeds are validated against
    ``domain`` (membership, arity, overlap), errors name the seed id.
    """
    try:
        doc = json.loads(data)
        entries = doc["seeds"]
        seeds = []
        for e in entries:
            sid = e["id"]
            if not isinstance(sid, str):
                raise FormatError(f"seed id {sid!r} is not a string")
            pts = e["points"]
            for p in pts:
                if len(p) != domain.ndim:
                    raise FormatError(f"seed {sid!r}: point {p} has arity {len(p)}, image is {domain.ndim}D")
            seeds.append(Seed(sid, tuple(tuple(int(c) for c in p) for p in pts)))
    except FormatError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad seed file: {exc}") from None
    try:
        return validate_seeds(domain, seeds)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_seeds(seeds) -> bytes:
    doc = {"seeds": [{"id": sid, "points": [list(p) for p in pts]} for sid, pts in seeds]}
    return (json.dumps(doc, indent=1) + "\n").encode()


# label maps


@dataclass
class LabelFile:
    """Decoded label file: ``codes`` array plus ``legend`` code -> name."""

    codes: np.ndarray
    legend: dict

    @property
    def dims(self) -> tuple:
        return self.codes.shape

    def names(self) -> np.ndarray:
        # codes absent from the legend (e.g. 1 in a simple run) never occur
        lut = np.array([self.legend.get(c) for c in range(max(self.legend) + 1)], dtype=object)
        return lut[self.codes]

    def seed_codes(self) -> list:
        return [c for c in sorted(self.legend) if c >= 2]

    def points(self, code: int) -> frozenset:
        return frozenset(map(tuple, np.argwhere(self.codes == code).tolist()))


def _code_table(result: GrowResult) -> tuple:
    """(run label -> file code, legend) for a run."""
    legend = {CODE_UNLABELED: NAME_UNLABELED}
    code_of = {}
    if result.boundary_label is not None:
        legend[CODE_BOUNDARY] = NAME_BOUNDARY
        code_of[result.boundary_label] = CODE_BOUNDARY
    order = result.seed_list or result.seed_order
    index = {sid: n + 2 for n, sid in enumerate(order)}
    for sid, c in index.items():
        legend[c] = sid
    for label, sid in result.seed_ids.items():
        code_of[label] = index[sid]
    return code_of, legend


def label_codes(result: GrowResult) -> tuple:
    """(codes array, legend) for a run, using the fixed file codes."""
    code_of, legend = _code_table(result)
    lut = np.zeros(len(result.labelmap.policies) + 1, dtype=np.int64)
    for label, c in code_of.items():
        lut[label] = c
    # UNLABELED (-1) indexes the spare last slot, code 0
    return lut[result.labelmap.values], legend


def encode_labels(codes: np.ndarray, legend: dict) -> bytes:
    codes = np.asarray(codes)
    bad = set(np.unique(codes).tolist()) - set(legend)
    if bad:
        raise ValueError(f"codes {sorted(bad)} missing from the legend")
    if max(legend) > 65535:
        raise ValueError("more than 65535 label codes")
    entries = [f"# legend {c} {json.dumps(legend[c])}" for c in sorted(legend)]
    if codes.ndim == 2:
        return _write_pgm(codes, [_LABEL_MAGIC] + entries, maxval=max(255, max(legend)))
    meta = {
        "format": "seedgrow-labels",
        "version": 1,
        "dims": list(codes.shape),
        "legend": [[c, legend[c]] for c in sorted(legend)],
        "dtype": "uint16le",
        "order": "x-fastest",
    }
    body = np.ascontiguousarray(codes.T, dtype="<u2").tobytes()
    return (json.dumps(meta) + "\n").encode() + body


def write_labels(result: GrowResult) -> bytes:
    """Serialize a run's label map; byte-identical for identical runs."""
    codes, legend = label_codes(result)
    return encode_labels(codes, legend)


def read_labels(data: bytes) -> LabelFile:
    if data[:2] == b"P5" or data[:2] == b"P2":
        pix, comments = _read_pgm(data)
        legend = {}
        for c in comments:
            m = re.match(r"# legend (\d+) (.*)$", c)
            if m:
                legend[int(m.group(1))] = json.loads(m.group(2))
        if _LABEL_MAGIC not in comments or not legend:
            raise FormatError("PGM carries no label legend")
        codes = pix
    else:
        nl = data.find(b"\n")
        if nl < 0:
            raise FormatError("label file has no header line", len(data))
        try:
            meta = json.loads(data[:nl])
            dims = tuple(int(n) for n in meta["dims"])
            legend = {int(c): name for c, name in meta["legend"]}
        except (ValueError, KeyError, TypeError) as exc:
            raise FormatError(f"bad label header: {exc}", 0) from None
        need = 2 * int(np.prod(dims))
        if len(data) - nl - 1 != need:
            raise FormatError(f"label body has {len(data) - nl - 1} bytes, expected {need}", nl + 1)
        codes = np.frombuffer(data, dtype="<u2", offset=nl + 1).reshape(dims[::-1]).T.astype(np.int64)
    bad = set(np.unique(codes).tolist()) - set(legend)
    if bad:
        raise FormatError(f"label values {sorted(bad)} missing from the legend")
    return LabelFile(np.ascontiguousarray(codes), legend)


# trace frames


class TraceRecorder:
    """Trace sink for the growers; keeps every event in order."""

    def __init__(self):
        self.events = []

    def __call__(self, step, point, label, cause):
        self.events.append((step, tuple(point), label, cause))

    def growths(self) -> list:
        return [e for e in self.events if e[3] != "skip"]


def write_trace_frames(trace: TraceRecorder, result: GrowResult, every: int) -> list:
    """Label files after growth steps every, 2*every, ..., plus the final state.

    ``result`` is the run that produced ``trace``; it supplies the dims and
    the legend.
    """
    if every < 1:
        raise ValueError("every must be >= 1")
    code_of, legend = _code_table(result)
    codes = np.full(result.labelmap.dims, CODE_UNLABELED, dtype=np.int64)
    frames = []
    last = 0
    for step, point, label, _ in trace.growths():
        codes[point] = code_of[label]
        last = step
        if step % every == 0:
            frames.append(encode_labels(codes, legend))
    if last % every != 0 or not frames:
        frames.append(encode_labels(codes, legend))
    return frames

