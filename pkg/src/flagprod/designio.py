"""Design file format.

    flagprod-design 1
    omega <omega> c <c> m <m>
    v <v> k <k> b <b>
    block <i1> ... <ik>        (b lines, ascending indices, lexicographic)

Single spaces, a trailing newline, and parse(render(d)) == d bit for bit.
"""

from __future__ import annotations

import numpy as np

from .construct import Design
from .errors import DesignFileError

MAGIC = "flagprod-design 1"


def render_design(design: Design) -> str:
    lines = [
        MAGIC,
        f"omega {design.omega} c {design.c} m {design.m}",
        f"v {design.v} k {design.k} b {design.b}",
    ]
    for row in design.blocks:
        lines.append("block " + " ".join(str(int(i)) for i in row))
    return "\n".join(lines) + "\n"


def _fields(line: str, lineno: int, *names: str) -> list[int]:
    parts = line.split(" ")
    if len(parts) != 2 * len(names):
        raise DesignFileError(f"line {lineno}: expected '{' <int> '.join(names)} <int>'")
    vals = []
    for i, name in enumerate(names):
        if parts[2 * i] != name:
            raise DesignFileError(f"line {lineno}: expected field '{name}', got '{parts[2*i]}'")
        try:
            vals.append(int(parts[2 * i + 1]))
        except ValueError:
            raise DesignFileError(f"line {lineno}: bad integer '{parts[2*i+1]}'") from None
    return vals


def parse_design(text: str) -> Design:
    if not text.endswith("\n"):
        raise DesignFileError("missing trailing newline")
    lines = text.split("\n")[:-1]
    if len(lines) < 3:
        raise DesignFileError("truncated file: need magic, parameter, and size lines")
    if lines[0] != MAGIC:
        raise DesignFileError(f"bad magic line: {lines[0]!r}")
    omega, c, m = _fields(lines[1], 2, "omega", "c", "m")
    v, k, b = _fields(lines[2], 3, "v", "k", "b")
    if omega < 1 or c < 1 or m < 1:
        raise DesignFileError("omega, c, m must be positive")
    if v != omega * omega:
        raise DesignFileError(f"v = {v} but omega^2 = {omega * omega}")
    if k != c * (c + 1) * m:
        raise DesignFileError(f"k = {k} but c(c+1)m = {c * (c + 1) * m}")
    if len(lines) - 3 != b:
        raise DesignFileError(f"header says b = {b} but file has {len(lines) - 3} block lines")

    blocks = np.empty((b, k), dtype=np.int32)
    prev = None
    for n, line in enumerate(lines[3:], start=4):
        parts = line.split(" ")
        if parts[0] != "block" or len(parts) != k + 1:
            raise DesignFileError(f"line {n}: expected 'block' with {k} indices")
        try:
            row = [int(x) for x in parts[1:]]
        except ValueError:
            raise DesignFileError(f"line {n}: bad integer") from None
        for a, bb in zip(row, row[1:]):
            if a >= bb:
                raise DesignFileError(f"line {n}: indices not strictly increasing")
        if row[0] < 0 or row[-1] >= v:
            raise DesignFileError(f"line {n}: index out of range 0..{v - 1}")
        if prev is not None and not prev < row:
            raise DesignFileError(f"line {n}: blocks not in lexicographic order")
        blocks[n - 4] = row
        prev = row
    return Design(omega=omega, c=c, m=m, blocks=blocks)


def write_design(design: Design, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(render_design(design))


def read_design(path: str) -> Design:
    with open(path) as fh:
        return parse_design(fh.read())
