"""Base block construction and the design orbit.

The base block is a disjoint union of m rectangular grids.  Grid s (1-based)
uses c+1 consecutive first coordinates and c consecutive second coordinates:

    alpha(i, s) = (s-1)(c+1) + (i-1)      i = 1..c+1
    beta(j, s)  = (s-1)c + (j-1)          j = 1..c
    block       = { (alpha(i, s), beta(j, s)) : all i, j, s }

so the labels pack consecutively from 0 and the block has k = c(c+1)m points.
The design is the orbit of this block under the full doubled wreath group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .diophantine import check_solution
from .errors import LabelsExceedOmega, NotASolution
from .permaction import (
    DEFAULT_CAP,
    GroupElement,
    Permutation,
    full_wreath_generators,
    orbit_of_block,
)


@dataclass(frozen=True)
class Labeling:
    """Canonical grid labels for a (c, m, omega) base block."""

    c: int
    m: int
    omega: int

    def __post_init__(self):
        if self.c < 1 or self.m < 1:
            raise ValueError("c and m must be positive")
        if (self.c + 1) * self.m > self.omega:
            raise LabelsExceedOmega(
                f"(c+1)m = {(self.c + 1) * self.m} labels > omega = {self.omega}"
            )

    def alpha(self, i: int, s: int) -> int:
        if not (1 <= i <= self.c + 1 and 1 <= s <= self.m):
            raise ValueError(f"alpha label out of range: i={i} s={s}")
        return (s - 1) * (self.c + 1) + (i - 1)

    def beta(self, j: int, s: int) -> int:
        if not (1 <= j <= self.c and 1 <= s <= self.m):
            raise ValueError(f"beta label out of range: j={j} s={s}")
        return (s - 1) * self.c + (j - 1)


def base_block(c: int, m: int, omega: int, force: bool = False) -> tuple[int, ...]:
    """The canonical grid block as strictly increasing point indices.

    Without force, (c, m, omega) must satisfy the parameter equation; with
    force the block is built anyway (negative controls), but the labels must
    still fit, else LabelsExceedOmega.
    """
    if not force and not check_solution(c, m, omega):
        raise NotASolution(f"(c={c}, m={m}, omega={omega}) fails the parameter equation")
    lab = Labeling(c, m, omega)
    pts = []
    for s in range(1, m + 1):
        for i in range(1, c + 2):
            for j in range(1, c + 1):
                pts.append(lab.alpha(i, s) * omega + lab.beta(j, s))
    block = tuple(sorted(pts))
    assert len(set(block)) == len(block)
    return block


def distinguished_generators(
    c: int, m: int, omega: int, force: bool = False
) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Three block-stabilizing elements (sigma, tau, phi).

    sigma cycles the first grid's alpha labels, tau its beta labels, and phi
    cycles each label across the m grids.  All three fix the base block as a
    set and together they move every point of it, which is what makes the
    orbit flag-transitive.
    """
    if not force and not check_solution(c, m, omega):
        raise NotASolution(f"(c={c}, m={m}, omega={omega}) fails the parameter equation")
    lab = Labeling(c, m, omega)
    ident = Permutation.identity(omega)

    sigma_g = Permutation.from_cycles(omega, [tuple(lab.alpha(i, 1) for i in range(1, c + 2))])
    sigma = GroupElement(sigma_g, ident, 0)

    tau_h = Permutation.from_cycles(omega, [tuple(lab.beta(j, 1) for j in range(1, c + 1))])
    tau = GroupElement(ident, tau_h, 0)

    phi_g = Permutation.from_cycles(
        omega, [tuple(lab.alpha(i, s) for s in range(1, m + 1)) for i in range(1, c + 2)]
    )
    phi_h = Permutation.from_cycles(
        omega, [tuple(lab.beta(j, s) for s in range(1, m + 1)) for j in range(1, c + 1)]
    )
    phi = GroupElement(phi_g, phi_h, 0)
    return sigma, tau, phi


@dataclass
class Design:
    """A block family on the omega x omega grid, rows lexicographically sorted."""

    omega: int
    c: int
    m: int
    blocks: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.blocks = np.ascontiguousarray(self.blocks, dtype=np.int32)
        if self.blocks.ndim != 2:
            raise ValueError("blocks must be a 2d array")
        if self.blocks.size:
            if self.blocks.min() < 0 or self.blocks.max() >= self.v:
                raise ValueError("block entry out of range")
            if not (np.diff(self.blocks, axis=1) > 0).all():
                raise ValueError("block rows must be strictly increasing")

    @property
    def v(self) -> int:
        return self.omega * self.omega

    @property
    def k(self) -> int:
        return self.blocks.shape[1]

    @property
    def b(self) -> int:
        return self.blocks.shape[0]

    def block_tuples(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.blocks]


def build_design(
    c: int, m: int, omega: int, cap: int = DEFAULT_CAP, force: bool = False
) -> Design:
    """Orbit of the canonical base block under the full doubled wreath group."""
    seed = base_block(c, m, omega, force=force)
    gens = full_wreath_generators(omega)
    blocks = orbit_of_block(gens, seed, cap=cap)
    return Design(omega=omega, c=c, m=m, blocks=blocks)


def design_grid_profile_ok(design: Design) -> bool:
    """True when every block is a disjoint union of c x (c+1) grids, in
    either orientation (the swap half of the group transposes blocks)."""
    ok = kernels.grid_profile_ok(design.blocks, design.omega, design.c, design.c + 1)
    return bool(np.asarray(ok, dtype=bool).all())
