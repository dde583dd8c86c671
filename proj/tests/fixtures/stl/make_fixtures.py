#!/usr/bin/env python3
"""Regenerates the binary STL fixtures in this directory."""

import math
import pathlib
import struct

HERE = pathlib.Path(__file__).resolve().parent


def facet(n, a, b, c):
    return struct.pack("<12fH", *n, *a, *b, *c, 0)


def header(text):
    return text.encode().ljust(80, b"\0")


TETRA = [
    ((0, 0, -1), (0, 0, 0), (0, 1, 0), (1, 0, 0)),
    ((0, -1, 0), (0, 0, 0), (1, 0, 0), (0, 0, 1)),
    ((-1, 0, 0), (0, 0, 0), (0, 0, 1), (0, 1, 0)),
    ((0.57735, 0.57735, 0.57735), (1, 0, 0), (0, 1, 0), (0, 0, 1)),
]


def binary(head, tris, count=None):
    body = b"".join(facet(*t) for t in tris)
    return header(head) + struct.pack("<I", len(tris) if count is None else count) + body


def write(name, data):
    (HERE / name).write_bytes(data)


write("tetra_binary.stl", binary("fixture tetra", TETRA))
write("solid_header_binary.stl", binary("solid but actually binary", TETRA))

bad = HERE / "malformed"
good = binary("fixture", TETRA)
write("malformed/truncated.stl", good[:84 + 50 * 2 + 17])
write("malformed/count_mismatch.stl", binary("fixture", TETRA, count=7))
write("malformed/solid_count_mismatch.stl", binary("solid liar", TETRA, count=9))
nan_tris = list(TETRA)
nan_tris[2] = ((-1, 0, 0), (0, 0, 0), (0, 0, math.nan), (0, 1, 0))
write("malformed/nan_vertex.stl", binary("fixture", nan_tris))
inf_tris = list(TETRA)
inf_tris[1] = ((0, -1, 0), (0, 0, 0), (math.inf, 0, 0), (0, 0, 1))
write("malformed/inf_vertex.stl", binary("fixture", inf_tris))
write("malformed/short_header.stl", b"\x01\x02binary junk" + b"\0" * 30)
write("malformed/empty.stl", b"")
write("malformed/trailing_bytes.stl", good + b"\0extra!")
write("malformed/garbage.stl", bytes((i * 37 + 11) % 256 for i in range(333)))
