"""Exact solver for the block parameter equation.

A candidate parameter triple (c, m, omega) must satisfy

    c(c+1)m - (2c-1)(omega+1)/2 = 1

with c, m >= 1 and omega odd, omega >= 5.  Solutions exist iff c != 2 (mod 3),
and for each admissible c they form a single arithmetic family

    m = m0 + s*dm,   omega = omega0 + s*domega,   s = 0, 1, 2, ...

whose start and strides are closed forms in t, where c = 3t or c = 3t+1.
Everything here is plain integer arithmetic, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidC, UnsolvableC


def is_solvable(c: int) -> bool:
    """True iff the parameter equation has solutions for this c."""
    if c < 1:
        raise InvalidC(f"c must be a positive integer, got {c}")
    return c % 3 != 2


def check_solution(c: int, m: int, omega: int) -> bool:
    """Exact membership test, False (never raising) on any invalid triple."""
    if c < 1 or m < 1 or omega < 5 or omega % 2 == 0:
        return False
    return 2 * c * (c + 1) * m - (2 * c - 1) * (omega + 1) == 2


@dataclass(frozen=True)
class Solution:
    """A triple (c, m, omega) satisfying the parameter equation exactly."""

    c: int
    m: int
    omega: int

    def __post_init__(self):
        if not check_solution(self.c, self.m, self.omega):
            raise ValueError(
                f"not a solution: c={self.c} m={self.m} omega={self.omega}"
            )
        # every true solution obeys these bounds; guard against bad edits
        if not 2 * self.m * self.m > self.omega:
            raise ValueError("bound 2m^2 > omega violated")
        if not (self.c + 1) * self.m < self.omega:
            raise ValueError("bound (c+1)m < omega violated")


@dataclass(frozen=True)
class SolutionFamily:
    """All solutions for a fixed c: member(s) = (m0 + s*dm, omega0 + s*domega)."""

    c: int
    t: int
    m0: int
    dm: int
    omega0: int
    domega: int

    def member(self, s: int) -> Solution:
        if s < 0:
            raise ValueError(f"family index must be >= 0, got {s}")
        return Solution(self.c, self.m0 + s * self.dm, self.omega0 + s * self.domega)


def solution_family(c: int) -> SolutionFamily:
    """Closed-form family of all solutions for c, minimal member first.

    Raises UnsolvableC when c = 2 (mod 3) and InvalidC when c < 1.
    """
    if c < 1:
        raise InvalidC(f"c must be a positive integer, got {c}")
    if c % 3 == 2:
        raise UnsolvableC(f"no solutions for c={c} (c = 2 mod 3)")
    if c % 3 == 0:
        t = c // 3
        fam = SolutionFamily(
            c=c,
            t=t,
            m0=2 * t + 1,
            dm=6 * t - 1,
            omega0=6 * t * t + 6 * t + 1,
            domega=18 * t * t + 6 * t,
        )
    else:
        t = (c - 1) // 3
        fam = SolutionFamily(
            c=c,
            t=t,
            m0=4 * t + 2,
            dm=6 * t + 1,
            omega0=12 * t * t + 16 * t + 5,
            domega=18 * t * t + 18 * t + 4,
        )
    # substitute the first two members back into the equation
    fam.member(0)
    fam.member(1)
    return fam


def enumerate_solutions(c: int, count: int) -> list[Solution]:
    """First `count` solutions for c in increasing order."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    fam = solution_family(c)
    return [fam.member(s) for s in range(count)]


@dataclass(frozen=True)
class ExpBoundChecks:
    """Which of the audit's exponential dominance inequalities hold at (e, p).

    The audit bounds the grid count m by a multiple of the field exponent e,
    then beats that against omega, which grows like a power of p**e.  These
    four comparisons are the only inequalities it ever needs.
    """

    pow2_beats_18e2: bool  # 18 e^2 < 2^(2e)
    pow3_beats_18e2: bool  # 18 e^2 < 3^(2e)
    powp_beats_18e2: bool  # 18 e^2 < p^(2e)
    pow2_beats_2e2: bool  # 2 e^2 < 2^e


def exp_bound_checks(e: int, p: int) -> ExpBoundChecks:
    """Evaluate the four dominance inequalities exactly (p assumed prime)."""
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    s18 = 18 * e * e
    return ExpBoundChecks(
        pow2_beats_18e2=s18 < 2 ** (2 * e),
        pow3_beats_18e2=s18 < 3 ** (2 * e),
        powp_beats_18e2=s18 < p ** (2 * e),
        pow2_beats_2e2=2 * e * e < 2**e,
    )
