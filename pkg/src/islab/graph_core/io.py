"""graph6 (read/write) and sparse6 (read-only) codecs, enumeration, sampling."""

from __future__ import annotations

import random
from typing import Iterator

from ..errors import GraphFormatError, GuardError
from .graph import LabeledGraph

HEADER6 = b">>graph6<<"
HEADERS6 = b">>sparse6<<"
ENUM_GUARD_N = 7


def _as_bytes(data: str | bytes) -> bytes:
    if isinstance(data, str):
        data = data.encode("ascii")
    return data.rstrip(b"\r\n")


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise GraphFormatError(pos, "missing vertex count")
    for i in range(pos, min(pos + 4, len(data))):
        if not 63 <= data[i] <= 126:
            raise GraphFormatError(i, f"byte {data[i]!r} outside the printable range 63..126")
    if data[pos] != 126:
        return data[pos] - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        raise GraphFormatError(pos + 1, "vertex counts above 258047 are not supported")
    if pos + 4 > len(data):
        raise GraphFormatError(len(data), "truncated vertex count")
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | (data[i] - 63)
    return n, pos + 4


def emit_graph6(g: LabeledGraph, header: bool = False) -> str:
    n = g.n
    nbits = n * (n - 1) // 2
    mask = g.edge_mask
    out = bytearray(HEADER6 if header else b"")
    out += _encode_n(n)
    for start in range(0, nbits, 6):
        chunk = 0
        for b in range(6):
            chunk <<= 1
            idx = start + b
            if idx < nbits and mask >> idx & 1:
                chunk |= 1
        out.append(chunk + 63)
    return out.decode("ascii")


def parse_graph6(data: str | bytes) -> LabeledGraph:
    raw = _as_bytes(data)
    pos = len(HEADER6) if raw.startswith(HEADER6) else 0
    n, pos = _decode_n(raw, pos)
    if n > 64:
        raise GraphFormatError(0, f"n={n} exceeds the 64-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = raw[pos:]
    if len(body) != need:
        off = pos + min(len(body), need)
        raise GraphFormatError(off, f"expected {need} data bytes, found {len(body)}")
    mask = 0
    idx = 0
    for i, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise GraphFormatError(pos + i, f"byte {byte!r} outside the printable range 63..126")
        val = byte - 63
        for b in range(5, -1, -1):
            if idx < nbits:
                if val >> b & 1:
                    mask |= 1 << idx
            elif val >> b & 1:
                raise GraphFormatError(pos + i, "non-zero padding bits")
            idx += 1
    return LabeledGraph.from_edge_mask(n, mask)


def parse_sparse6(data: str | bytes) -> LabeledGraph:
    raw = _as_bytes(data)
    pos = len(HEADERS6) if raw.startswith(HEADERS6) else 0
    if pos >= len(raw) or raw[pos] != ord(":"):
        raise GraphFormatError(pos, "sparse6 must start with ':'")
    if pos + 1 < len(raw) and raw[pos + 1] == ord(":"):
        raise GraphFormatError(pos + 1, "incremental sparse6 is not supported")
    n, pos = _decode_n(raw, pos + 1)
    if n > 64:
        raise GraphFormatError(1, f"n={n} exceeds the 64-vertex cap")
    k = 1
    while (1 << k) < n:
        k += 1
    stream = []
    for i in range(pos, len(raw)):
        if not 63 <= raw[i] <= 126:
            raise GraphFormatError(i, f"byte {raw[i]!r} outside the printable range 63..126")
        val = raw[i] - 63
        stream.extend((val >> b) & 1 for b in range(5, -1, -1))
    edges = set()
    v = 0
    i = 0
    while i + 1 + k <= len(stream):
        b = stream[i]
        x = 0
        for bit in stream[i + 1:i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x == v:
            raise GraphFormatError(pos + (i - 1) // 6, f"loop at vertex {v}")
        else:
            edges.add((x, v))
    return LabeledGraph.from_edges(n, edges)


def parse_graph(data: str | bytes) -> LabeledGraph:
    raw = _as_bytes(data)
    if raw.startswith(b":") or raw.startswith(HEADERS6):
        return parse_sparse6(raw)
    return parse_graph6(raw)


def enumerate_graphs(n: int, override_guards: bool = False) -> Iterator[LabeledGraph]:
    """Every labelled graph on [n], in edge-mask order."""
    if n > ENUM_GUARD_N and not override_guards:
        raise GuardError("enumerate_graphs.n", f"n={n} exceeds {ENUM_GUARD_N}")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield LabeledGraph.from_edge_mask(n, mask)


def random_graph(n: int, p: float, seed: int | random.Random) -> LabeledGraph:
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    mask = 0
    for idx in range(n * (n - 1) // 2):
        if rng.random() < p:
            mask |= 1 << idx
    return LabeledGraph.from_edge_mask(n, mask)
