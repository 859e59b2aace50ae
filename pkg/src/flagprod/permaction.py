"""Product action of the doubled symmetric wreath group on a square grid.

Points are pairs (alpha, beta) over {0..omega-1}, flattened to the index
alpha*omega + beta.  A group element is (g, h, eps): it acts coordinatewise
by g on the first slot and h on the second, then swaps the slots when
eps = 1.  Composition is left to right,

    apply(compose(x, y), p) == apply(y, apply(x, p)).

Orbit enumeration packs blocks into int32 rows and runs a batched
breadth-first closure in the kernel layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import OrbitCapExceeded

DEFAULT_CAP = 5_000_000


class Point(NamedTuple):
    alpha: int
    beta: int


def point_index(p: Point, omega: int) -> int:
    return p.alpha * omega + p.beta


def point_at(index: int, omega: int) -> Point:
    alpha, beta = divmod(index, omega)
    return Point(alpha, beta)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0..n-1} stored as its image table."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images)-1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    def after(self, other: "Permutation") -> "Permutation":
        """self.after(other)(i) == self(other(i))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class GroupElement:
    g: Permutation
    h: Permutation
    eps: int

    def __post_init__(self):
        if self.g.degree != self.h.degree:
            raise ValueError("coordinate permutations must have equal degree")
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")

    @property
    def omega(self) -> int:
        return self.g.degree


def identity_element(omega: int) -> GroupElement:
    e = Permutation.identity(omega)
    return GroupElement(e, e, 0)


def apply(x: GroupElement, p: Point) -> Point:
    """Act coordinatewise, then swap the coordinates when eps = 1."""
    a, b = x.g(p.alpha), x.h(p.beta)
    return Point(b, a) if x.eps else Point(a, b)


def compose(x: GroupElement, y: GroupElement) -> GroupElement:
    """Left-to-right product: x first, then y."""
    if x.omega != y.omega:
        raise ValueError("degree mismatch")
    if x.eps == 0:
        return GroupElement(y.g.after(x.g), y.h.after(x.h), y.eps)
    # x routed the first slot through h's lane and vice versa
    return GroupElement(y.h.after(x.g), y.g.after(x.h), 1 ^ y.eps)


def inverse(x: GroupElement) -> GroupElement:
    if x.eps == 0:
        return GroupElement(x.g.inverse(), x.h.inverse(), 0)
    return GroupElement(x.h.inverse(), x.g.inverse(), 1)


def element_point_map(x: GroupElement) -> np.ndarray:
    """Length omega^2 int32 table sending each point index through x."""
    omega = x.omega
    idx = np.arange(omega * omega, dtype=np.int32)
    alpha, beta = idx // omega, idx % omega
    ga = np.asarray(x.g.images, dtype=np.int32)[alpha]
    hb = np.asarray(x.h.images, dtype=np.int32)[beta]
    if x.eps:
        return hb * omega + ga
    return ga * omega + hb


def full_wreath_generators(omega: int) -> list[GroupElement]:
    """Generators of the doubled wreath group: a transposition and a full
    cycle in each coordinate, plus the pure coordinate swap."""
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    ident = Permutation.identity(omega)
    swap = GroupElement(ident, ident, 1)
    if omega == 1:
        return [swap]
    trans = Permutation.from_cycles(omega, [(0, 1)])
    cyc = Permutation.from_cycles(omega, [tuple(range(omega))])
    return [
        GroupElement(trans, ident, 0),
        GroupElement(cyc, ident, 0),
        GroupElement(ident, trans, 0),
        GroupElement(ident, cyc, 0),
        swap,
    ]


def wreath_group_order(omega: int) -> int:
    """2 * (omega!)^2, the order of the doubled wreath group."""
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    return 2 * factorial(omega) ** 2


def as_block(indices: Iterable[int], omega: int) -> tuple[int, ...]:
    """Canonical block: strictly increasing point indices below omega^2."""
    block = tuple(sorted(indices))
    if len(set(block)) != len(block):
        raise ValueError(f"repeated point in block: {block}")
    if block and (block[0] < 0 or block[-1] >= omega * omega):
        raise ValueError(f"point index out of range for omega={omega}: {block}")
    return block


def _maps_matrix(generators: Sequence[GroupElement]) -> np.ndarray:
    if not generators:
        raise ValueError("need at least one generator")
    omega = generators[0].omega
    if any(g.omega != omega for g in generators):
        raise ValueError("generators act on different grids")
    return np.stack([element_point_map(g) for g in generators])


def orbit_of_block(
    generators: Sequence[GroupElement],
    seed: Iterable[int],
    cap: int = DEFAULT_CAP,
) -> np.ndarray:
    """All distinct images of the seed block, as a lexicographically sorted
    (n, k) int32 array of strictly increasing rows.

    Raises OrbitCapExceeded once the closure would pass `cap` blocks.
    """
    maps = _maps_matrix(generators)
    omega = generators[0].omega
    block = as_block(seed, omega)
    start = np.array([block], dtype=np.int32)
    rows, overflow = kernels.closure(start, maps, 0, cap)
    if overflow:
        raise OrbitCapExceeded(f"block orbit exceeded cap={cap}")
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def flag_orbit_size(
    generators: Sequence[GroupElement],
    point: Point | int,
    block: Iterable[int],
    cap: int = DEFAULT_CAP,
) -> int:
    """Number of distinct (point, block) images; the point must lie in the block."""
    maps = _maps_matrix(generators)
    omega = generators[0].omega
    blk = as_block(block, omega)
    pidx = point_index(point, omega) if isinstance(point, Point) else int(point)
    if pidx not in blk:
        raise ValueError(f"flag point {pidx} not incident with block {blk}")
    start = np.array([(pidx,) + blk], dtype=np.int32)
    rows, overflow = kernels.closure(start, maps, 1, cap)
    if overflow:
        raise OrbitCapExceeded(f"flag orbit exceeded cap={cap}")
    return len(rows)
