"""Design parameters derived from a parameter-equation solution.

The reduced parameters (v, rstar, lambdastar) depend only on (c, omega);
the full replication r and pair multiplicity lambda additionally need the
block count b of an actual orbit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .diophantine import Solution
from .errors import NonIntegralLambda


class Hypothesis(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"


@dataclass(frozen=True)
class ReducedParams:
    v: int
    k: int
    rstar: int
    lambdastar: int
    c: int
    d: int


def reduced_params(sol: Solution) -> ReducedParams:
    """Reduced design parameters of a solution.

    k has two equivalent closed forms; both are computed and compared so a
    bad edit to either formula cannot slip through.
    """
    c, m, omega = sol.c, sol.m, sol.omega
    lambdastar = 2 * c - 1
    k = c * (c + 1) * m
    k2, rem = divmod(lambdastar * (omega + 1), 2)
    assert rem == 0 and k == k2 + 1, "k closed forms disagree"
    rp = ReducedParams(
        v=omega * omega,
        k=k,
        rstar=2 * (omega - 1),
        lambdastar=lambdastar,
        c=c,
        d=c + 1,
    )
    assert rp.rstar * (rp.k - 1) == rp.lambdastar * (rp.v - 1)
    return rp


@dataclass(frozen=True)
class FullParams:
    v: int
    b: int
    r: int
    k: int
    lam: int

    @property
    def gcd_r_lambda(self) -> int:
        return gcd(self.r, self.lam)


def lambda_from_orbit(b: int, k: int, c: int, v: int, omega: int) -> int:
    """Pair multiplicity forced by orbit counting: b*k*(2c-1) / (2v(omega-1)).

    Raises NonIntegralLambda when the division is not exact, which is the
    arithmetic signature of a family that cannot be a 2-design.
    """
    num = b * k * (2 * c - 1)
    den = 2 * v * (omega - 1)
    lam, rem = divmod(num, den)
    if rem != 0:
        raise NonIntegralLambda(f"{num}/{den} is not an integer")
    return lam


def check_bibd_relations(v: int, b: int, r: int, k: int, lam: int) -> tuple[bool, list[str]]:
    """Standard admissibility identities for a 2-(v, k, lam) design.

    Returns (ok, violations).  The replication bound b < 4v is deliberately
    not here: it only holds under the lambda >= gcd(r, lambda)^2 hypothesis
    and must never be asserted unconditionally.
    """
    violations = []
    if r * (k - 1) != lam * (v - 1):
        violations.append(f"r(k-1) != lambda(v-1): {r*(k-1)} != {lam*(v-1)}")
    if v * r != b * k:
        violations.append(f"vr != bk: {v*r} != {b*k}")
    if b < v:
        violations.append(f"b < v: {b} < {v}")
    if k > r:
        violations.append(f"k > r: {k} > {r}")
    return (not violations, violations)


def hypothesis_test(lam: int, gcd_r_lambda: int) -> Hypothesis:
    """Whether lambda >= gcd(r, lambda)^2."""
    return Hypothesis.HOLDS if lam >= gcd_r_lambda * gcd_r_lambda else Hypothesis.FAILS
