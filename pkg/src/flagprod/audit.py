"""Case elimination over the candidate socle families.

A rank-3 product action on an omega x omega grid (omega odd, >= 5) with a
2-transitive almost simple factor leaves finitely many socle families:
alternating groups, PSL(d, q), PSU(3, q), Sz(q), the degree-11 PSL(2, 11),
A7 on 15 points, and the Mathieu groups of odd degree.  For each the grid
count m is bounded by the outer index |A/T|, while any solution of the
parameter equation needs 2m^2 > omega.  Fixing (m, omega) turns the
parameter equation into a quadratic in c,

    2m c^2 + 2(m - omega - 1) c + (omega - 1) = 0,

whose reduced coefficients must have an integer root; surviving roots with
c = 2 (mod 3) are impossible, and c = 1 forces lambdastar = 1, which the
flag-transitive lambda = 1 classification rules out (cited as an axiom, not
re-proved here).  Every case ends in one of four contradiction verdicts, so
the global verdict is NO_PRODUCT_ACTION.

All arithmetic is exact; square tests use math.isqrt.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import AuditError, UnknownFamily

DEFAULT_E_MAX = 12

ZIESCHANG_AXIOM = (
    "axiom: a flag-transitive family with lambda = 1 admits no product action"
    " (Zieschang), so the c = 1 root is excluded"
)


class Verdict(enum.Enum):
    EMPTY_M_RANGE = "EMPTY_M_RANGE"
    NO_INTEGER_ROOT = "NO_INTEGER_ROOT"
    LAMBDA_STAR_ONE_EXCLUDED = "LAMBDA_STAR_ONE_EXCLUDED"
    BOUND_CONTRADICTION = "BOUND_CONTRADICTION"


@dataclass(frozen=True)
class CaseInstance:
    family: str  # alternating | psl | psu3 | sz | sporadic
    label: str
    omega: int | None = None
    out_bound: int | None = None
    d: int | None = None  # PSL dimension, when applicable
    general: bool = False
    general_reason: str = ""
    comments: tuple[str, ...] = ()


@dataclass(frozen=True)
class QuadraticAudit:
    m: int
    A: int
    B: int
    C: int
    discriminant: int
    roots: tuple[int, ...]
    notes: tuple[str, ...] = ()

    def poly_str(self) -> str:
        def term(coef, power):
            if power == 2:
                mag = "" if abs(coef) == 1 else str(abs(coef))
                return ("-" if coef < 0 else "") + mag + "c^2"
            if power == 1:
                mag = "" if abs(coef) == 1 else str(abs(coef))
                return ("-" if coef < 0 else "+") + mag + "c"
            return ("-" if coef < 0 else "+") + str(abs(coef))

        return term(self.A, 2) + term(self.B, 1) + term(self.C, 0)


@dataclass
class CaseReport:
    instance: CaseInstance
    m_candidates: tuple[int, ...]
    quadratics: tuple[QuadraticAudit, ...]
    verdict: Verdict
    citations: tuple[str, ...] = ()

    def lines(self) -> list[str]:
        ins = self.instance
        out = []
        fam, lab = ins.family, ins.label
        if ins.general:
            out.append(
                f"{fam}\t{lab}\tout=-\tomega=-\tm=-\t{ins.general_reason}"
                f"\troots=-\t{self.verdict.value}"
            )
        elif not self.m_candidates:
            out.append(
                f"{fam}\t{lab}\tout={ins.out_bound}\tomega={ins.omega}"
                f"\tm=-\t-\troots=-\t{self.verdict.value}"
            )
        else:
            for qa in self.quadratics:
                roots = ",".join(str(r) for r in qa.roots) if qa.roots else "-"
                per_m = (
                    Verdict.LAMBDA_STAR_ONE_EXCLUDED.value
                    if 1 in qa.roots
                    else Verdict.NO_INTEGER_ROOT.value
                )
                out.append(
                    f"{fam}\t{lab}\tout={ins.out_bound}\tomega={ins.omega}"
                    f"\tm={qa.m}\t{qa.poly_str()}\troots={roots}\t{per_m}"
                )
        for comment in ins.comments:
            out.append(f"# {comment}")
        if self.verdict is Verdict.LAMBDA_STAR_ONE_EXCLUDED:
            out.append(f"# {ZIESCHANG_AXIOM}")
        return out


def m_candidates(omega: int, out_bound: int) -> tuple[int, ...]:
    """Admissible grid counts: least m with 2m^2 > omega up to |A/T|.

    The lower endpoint comes from an integer square root, no floats.
    """
    if omega < 5 or out_bound < 0:
        raise ValueError(f"bad m-range query: omega={omega} out_bound={out_bound}")
    lo = isqrt(omega // 2)
    while 2 * lo * lo <= omega:
        lo += 1
    while lo > 1 and 2 * (lo - 1) * (lo - 1) > omega:
        lo -= 1
    return tuple(range(lo, out_bound + 1))


def quadratic_in_c(m: int, omega: int) -> QuadraticAudit:
    """Reduce 2m c^2 + 2(m - omega - 1) c + (omega - 1) = 0 and find its
    positive integer roots by an exact perfect-square discriminant test."""
    if m < 1 or omega < 5:
        raise ValueError(f"bad quadratic query: m={m} omega={omega}")
    A, B, C = 2 * m, 2 * (m - omega - 1), omega - 1
    g = gcd(gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    disc = B * B - 4 * A * C
    roots: list[int] = []
    notes: list[str] = []
    if disc >= 0:
        s = isqrt(disc)
        if s * s == disc:
            for num in (-B + s, -B - s):
                r, rem = divmod(num, 2 * A)
                if rem == 0 and r > 0 and r not in roots:
                    roots.append(r)
        else:
            notes.append("discriminant not a perfect square")
    else:
        notes.append("negative discriminant")
    return QuadraticAudit(
        m=m, A=A, B=B, C=C, discriminant=disc, roots=tuple(sorted(roots)), notes=tuple(notes)
    )


def audit_case(instance: CaseInstance) -> CaseReport:
    """Run one instance to its contradiction verdict.

    Raises AuditError if a root survives every exclusion, which would mean
    the case list or the bounds are wrong.
    """
    if instance.general:
        return CaseReport(
            instance=instance,
            m_candidates=(),
            quadratics=(),
            verdict=Verdict.BOUND_CONTRADICTION,
            citations=(instance.general_reason,),
        )
    assert instance.omega is not None and instance.out_bound is not None
    ms = m_candidates(instance.omega, instance.out_bound)
    if not ms:
        return CaseReport(
            instance=instance,
            m_candidates=(),
            quadratics=(),
            verdict=Verdict.EMPTY_M_RANGE,
            citations=(
                "2m^2 > omega needs m past the outer bound |A/T| "
                f"({instance.out_bound})",
            ),
        )
    quads = []
    any_lsoe = False
    for m in ms:
        qa = quadratic_in_c(m, instance.omega)
        extra = []
        for r in qa.roots:
            if r % 3 == 2:
                extra.append(f"root c={r} discarded: c = 2 (mod 3) has no solutions")
            elif r == 1:
                any_lsoe = True
            else:
                raise AuditError(
                    f"{instance.label}, m={m}: root c={r} survives every exclusion"
                )
        if extra:
            qa = QuadraticAudit(
                m=qa.m, A=qa.A, B=qa.B, C=qa.C, discriminant=qa.discriminant,
                roots=qa.roots, notes=qa.notes + tuple(extra),
            )
        quads.append(qa)
    verdict = Verdict.LAMBDA_STAR_ONE_EXCLUDED if any_lsoe else Verdict.NO_INTEGER_ROOT
    citations = (ZIESCHANG_AXIOM,) if any_lsoe else ("no quadratic has an integer root",)
    return CaseReport(
        instance=instance,
        m_candidates=ms,
        quadratics=tuple(quads),
        verdict=verdict,
        citations=citations,
    )


# ---------------------------------------------------------------- case lists

def _alternating_cases() -> list[CaseInstance]:
    # natural action, |Out| = 2 for every odd degree >= 5
    return [
        CaseInstance("alternating", "Alt(5)", omega=5, out_bound=2),
        CaseInstance("alternating", "Alt(7)", omega=7, out_bound=2),
        CaseInstance(
            "alternating",
            "Alt(omega>=9)",
            general=True,
            general_reason="m<=|A/T|=2 gives 2m^2<=8<omega",
        ),
    ]


_PSL3_EXCEPTIONS = ((2, 1), (2, 2), (2, 3), (2, 4), (3, 1))  # (p, e) with 18e^2 >= p^(2e)


def _psl3_concrete() -> list[CaseInstance]:
    out = []
    for p, e in _PSL3_EXCEPTIONS:
        q = p**e
        comments = ()
        if (p, e) == (2, 2):
            comments = (
                "note: (c,m)=(1,6) also lies on the c=1 solution family"
                " (omega=4m-3=21); the lambdastar route above is the one used",
            )
        out.append(
            CaseInstance(
                "psl",
                f"PSL(3,{q})",
                omega=q * q + q + 1,
                out_bound=gcd(3, q - 1) * e,
                d=3,
                comments=comments,
            )
        )
    return out


def _psl2_concrete(e_lo: int, e_hi: int) -> list[CaseInstance]:
    # omega = q + 1 odd forces q = 2^e; |A/T| <= (2, q-1) e = e
    return [
        CaseInstance("psl", f"PSL(2,{2**e})", omega=2**e + 1, out_bound=e, d=2)
        for e in range(e_lo, e_hi + 1)
    ]


def _psl_cases(e_max: int) -> list[CaseInstance]:
    cases = [
        CaseInstance(
            "psl",
            "PSL(d>=5,q)",
            d=5,
            general=True,
            general_reason="m<=(d,q-1)e<=(q-1)e and 2e^2<2^(2e)<=q^2 give 2m^2<q^4<omega",
        ),
        CaseInstance(
            "psl",
            "PSL(4,2^e)",
            d=4,
            general=True,
            general_reason="omega odd forces q=2^e; m<=e and 2e^2<2^(2e)=q^2<omega",
        ),
        CaseInstance(
            "psl",
            "PSL(3,p^e) outside exceptions",
            d=3,
            general=True,
            general_reason="m<=(3,q-1)e<=3e and 18e^2<p^(2e)=q^2<omega"
            " except (p,e) in {(2,1),(2,2),(2,3),(2,4),(3,1)}",
        ),
    ]
    cases.extend(_psl3_concrete())
    cases.extend(_psl2_concrete(2, 6))
    cases.extend(_psl2_concrete(7, e_max))
    cases.append(
        CaseInstance(
            "psl",
            "PSL(2,2^e) e>=7",
            d=2,
            general=True,
            general_reason="m<=e and 2e^2<2^e=q<omega",
        )
    )
    return cases


def _psu3_cases(e_max: int) -> list[CaseInstance]:
    # omega = q^3 + 1 odd forces q = 2^e; |A/T| <= 2(3, q+1)e
    cases = [
        CaseInstance(
            "psu3",
            f"PSU(3,{2**e})",
            omega=2 ** (3 * e) + 1,
            out_bound=2 * gcd(3, 2**e + 1) * e,
        )
        for e in range(2, e_max + 1)
    ]
    cases.append(
        CaseInstance(
            "psu3",
            "PSU(3,2^e) e>=4",
            general=True,
            general_reason="m<=2(3,q+1)e<=6e and 72e^2<2^(3e)<omega for e>=4",
        )
    )
    return cases


def _sz_cases(e_max: int) -> list[CaseInstance]:
    # Sz(2^e), e odd >= 3; omega = q^2 + 1; |A/T| = e
    cases = [
        CaseInstance("sz", f"Sz({2**e})", omega=2 ** (2 * e) + 1, out_bound=e)
        for e in range(3, e_max + 1, 2)
    ]
    cases.append(
        CaseInstance(
            "sz",
            "Sz(2^e) any odd e>=3",
            general=True,
            general_reason="m<=e and 2e^2<2^(2e)<omega for every e",
        )
    )
    return cases


def _sporadic_cases() -> list[CaseInstance]:
    return [
        CaseInstance("sporadic", "PSL(2,11)@11", omega=11, out_bound=2),
        CaseInstance("sporadic", "A7@15", omega=15, out_bound=2),
        CaseInstance("sporadic", "M11", omega=11, out_bound=1),
        CaseInstance("sporadic", "M23", omega=23, out_bound=1),
    ]


FAMILIES = ("alternating", "psl", "psu3", "sz", "sporadic")

# logged, not audited: excluded before any m-range is formed
FILTERED = ("PSL(2,8) degree 28 skipped: omega must be odd",)


def family_cases(name: str, e_max: int = DEFAULT_E_MAX, d: int | None = None) -> list[CaseInstance]:
    if e_max < 6:
        raise ValueError(f"e_max must be >= 6, got {e_max}")
    if name == "alternating":
        cases = _alternating_cases()
    elif name == "psl":
        cases = _psl_cases(e_max)
    elif name == "psu3":
        cases = _psu3_cases(e_max)
    elif name == "sz":
        cases = _sz_cases(e_max)
    elif name == "sporadic":
        cases = _sporadic_cases()
    else:
        raise UnknownFamily(f"unknown case family: {name!r}")
    if d is not None:
        cases = [c for c in cases if c.d == d and not c.general]
    return cases


@dataclass
class AuditResult:
    e_max: int
    reports: list[CaseReport] = field(default_factory=list)
    filtered: tuple[str, ...] = ()

    @property
    def global_verdict(self) -> str:
        # every Verdict member is a contradiction; audit_case raises on a
        # surviving root, so a full report list means global elimination
        if self.reports and all(r.verdict in Verdict.__members__.values() for r in self.reports):
            return "NO_PRODUCT_ACTION"
        return "UNRESOLVED"

    def render(self, header: bool = True) -> str:
        lines = []
        if header:
            lines.append("# product-action case elimination")
            lines.append(f"# e_max={self.e_max}")
        fam_prev = None
        for rep in self.reports:
            if rep.instance.family != fam_prev:
                fam_prev = rep.instance.family
                lines.append(f"# case {fam_prev}")
            lines.extend(rep.lines())
        for note in self.filtered:
            lines.append(f"# filtered: {note}")
        lines.append(f"GLOBAL\t{self.global_verdict}")
        return "\n".join(lines) + "\n"


def audit_all(e_max: int = DEFAULT_E_MAX) -> AuditResult:
    """Audit every case family; the verdict list is the whole argument."""
    reports = []
    for name in FAMILIES:
        for ins in family_cases(name, e_max=e_max):
            reports.append(audit_case(ins))
    return AuditResult(e_max=e_max, reports=reports, filtered=FILTERED)


def table1_lines(e_max: int = DEFAULT_E_MAX) -> list[str]:
    """The five concrete PSL(3, q) audit rows."""
    return [
        line
        for ins in family_cases("psl", e_max=e_max, d=3)
        for line in audit_case(ins).lines()
        if not line.startswith("#")
    ]


def table2_lines() -> list[str]:
    """The five concrete PSL(2, 2^e) audit rows, e = 2..6."""
    return [
        line
        for ins in _psl2_concrete(2, 6)
        for line in audit_case(ins).lines()
        if not line.startswith("#")
    ]


# ------------------------------------------------- numeric redundancy checks

def psl_highd_chain_holds(p: int, e: int) -> bool:
    """The d >= 5 elimination chain at (p, e): with q = p^e and m <= (q-1)e,
    2m^2 < q^4 holds because 2e^2 < 2^(2e) <= q^2."""
    q = p**e
    if not 2 * e * e < 2 ** (2 * e) <= q * q:
        return False
    m_hi = (q - 1) * e
    return 2 * m_hi * m_hi < q**4


def psl_d4_chain_holds(e: int) -> bool:
    """The d = 4 chain at q = 2^e: m <= e and 2e^2 < q^2 < omega."""
    q = 2**e
    omega = (q**4 - 1) // (q - 1)  # q^3 + q^2 + q + 1
    return 2 * e * e < q * q < omega
