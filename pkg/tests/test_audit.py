from itertools import count
from pathlib import Path

import pytest

from flagprod.audit import (
    AuditError,
    AuditResult,
    CaseInstance,
    QuadraticAudit,
    Verdict,
    audit_all,
    audit_case,
    family_cases,
    m_candidates,
    psl_d4_chain_holds,
    psl_highd_chain_holds,
    quadratic_in_c,
    table1_lines,
    table2_lines,
)
from flagprod.diophantine import check_solution
from flagprod.errors import UnknownFamily

GOLDEN = Path(__file__).parent / "golden"


def test_m_candidates_examples():
    assert m_candidates(21, 6) == (4, 5, 6)
    assert m_candidates(65, 4) == ()
    assert m_candidates(513, 18) == (17, 18)
    assert m_candidates(5, 2) == (2,)


def test_m_candidates_lower_bound_matches_bruteforce():
    for omega in range(5, 1000, 2):
        lo = next(m for m in count(1) if 2 * m * m > omega)
        ms = m_candidates(omega, lo + 3)
        assert ms == tuple(range(lo, lo + 4))
        assert m_candidates(omega, lo - 1) == ()


def test_m_candidates_rejects_bad_query():
    with pytest.raises(ValueError):
        m_candidates(4, 2)
    with pytest.raises(ValueError):
        m_candidates(21, -1)


def test_quadratic_examples():
    qa = quadratic_in_c(6, 21)
    assert (qa.A, qa.B, qa.C) == (3, -8, 5)
    assert qa.discriminant == 4
    assert qa.roots == (1,)
    assert qa.poly_str() == "3c^2-8c+5"

    qa = quadratic_in_c(17, 513)
    assert (qa.A, qa.B, qa.C) == (17, -497, 256)
    assert qa.discriminant == 229601
    assert qa.roots == ()
    assert "discriminant not a perfect square" in qa.notes

    assert quadratic_in_c(4, 21).poly_str() == "2c^2-9c+5"
    assert quadratic_in_c(4, 21).discriminant == 41
    assert quadratic_in_c(5, 21).discriminant == 89


def test_poly_str_signs():
    qa = QuadraticAudit(m=1, A=1, B=2, C=-3, discriminant=16, roots=(1,))
    assert qa.poly_str() == "c^2+2c-3"


def test_quadratic_roots_satisfy_parameter_equation():
    # any positive integer root is by construction a solution triple
    for m in range(1, 40):
        for omega in range(5, 400, 2):
            for c in quadratic_in_c(m, omega).roots:
                assert check_solution(c, m, omega)


def test_quadratic_rejects_bad_query():
    with pytest.raises(ValueError):
        quadratic_in_c(0, 21)


def case(family, label, **kw):
    return audit_case(CaseInstance(family, label, **kw))


def test_alt5_verdict():
    rep = case("alternating", "Alt(5)", omega=5, out_bound=2)
    assert rep.verdict is Verdict.LAMBDA_STAR_ONE_EXCLUDED
    assert rep.m_candidates == (2,)
    assert rep.quadratics[0].poly_str() == "c^2-2c+1"
    assert rep.lines()[0] == (
        "alternating\tAlt(5)\tout=2\tomega=5\tm=2\tc^2-2c+1"
        "\troots=1\tLAMBDA_STAR_ONE_EXCLUDED"
    )
    assert rep.lines()[-1].startswith("# axiom:")


def test_alt7_verdict():
    rep = case("alternating", "Alt(7)", omega=7, out_bound=2)
    assert rep.verdict is Verdict.NO_INTEGER_ROOT
    assert rep.quadratics[0].discriminant == 12


def test_empty_range_verdicts():
    for label, omega, out in [
        ("M11", 11, 1),
        ("M23", 23, 1),
        ("PSL(2,11)@11", 11, 2),
        ("A7@15", 15, 2),
    ]:
        rep = case("sporadic", label, omega=omega, out_bound=out)
        assert rep.verdict is Verdict.EMPTY_M_RANGE
        assert rep.lines()[0].endswith("m=-\t-\troots=-\tEMPTY_M_RANGE")


def test_general_case_verdict():
    rep = case("alternating", "Alt(omega>=9)", general=True, general_reason="bound chain")
    assert rep.verdict is Verdict.BOUND_CONTRADICTION
    assert "bound chain" in rep.lines()[0]


def test_psu3_small_cases():
    rep = case("psu3", "PSU(3,4)", omega=65, out_bound=4)
    assert rep.verdict is Verdict.EMPTY_M_RANGE
    rep = case("psu3", "PSU(3,8)", omega=513, out_bound=18)
    assert rep.verdict is Verdict.NO_INTEGER_ROOT
    assert rep.m_candidates == (17, 18)
    assert all(qa.roots == () for qa in rep.quadratics)


def test_surviving_root_raises():
    # (c,m,omega)=(3,3,13) is a genuine solution, so a case admitting it
    # must blow up rather than fake a contradiction
    with pytest.raises(AuditError):
        case("psl", "made-up", omega=13, out_bound=3)


def test_mixed_per_m_verdicts():
    rep = case("psl", "PSL(3,4)", omega=21, out_bound=6, d=3)
    assert rep.verdict is Verdict.LAMBDA_STAR_ONE_EXCLUDED
    per_m = [ln.split("\t")[-1] for ln in rep.lines() if not ln.startswith("#")]
    assert per_m == ["NO_INTEGER_ROOT", "NO_INTEGER_ROOT", "LAMBDA_STAR_ONE_EXCLUDED"]


def test_table1_golden():
    want = (GOLDEN / "table1.tsv").read_text().splitlines()
    assert table1_lines() == want


def test_table2_golden():
    want = (GOLDEN / "table2.tsv").read_text().splitlines()
    assert table2_lines() == want


def _primes(n):
    sieve = [True] * (n + 1)
    sieve[:2] = [False, False]
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = [False] * len(sieve[p * p :: p])
    return [p for p, is_p in enumerate(sieve) if is_p]


def test_bound_chains_over_all_small_prime_powers():
    for p in _primes(256):
        e = 1
        while p**e <= 1 << 16:
            assert psl_highd_chain_holds(p, e)
            e += 1
    for e in range(1, 17):
        assert psl_d4_chain_holds(e)


def test_family_cases_filters():
    assert [c.label for c in family_cases("psl", d=3)] == [
        "PSL(3,2)",
        "PSL(3,4)",
        "PSL(3,8)",
        "PSL(3,16)",
        "PSL(3,3)",
    ]
    assert len(family_cases("psl", d=2)) == 11  # e = 2..12 concrete rows
    with pytest.raises(UnknownFamily):
        family_cases("ree")
    with pytest.raises(ValueError):
        family_cases("psl", e_max=5)


def test_audit_all_eliminates_everything():
    result = audit_all()
    assert result.reports
    assert all(isinstance(r.verdict, Verdict) for r in result.reports)
    assert result.global_verdict == "NO_PRODUCT_ACTION"
    text = result.render()
    assert text.endswith("GLOBAL\tNO_PRODUCT_ACTION\n")
    assert "# filtered: PSL(2,8) degree 28 skipped" in text
    assert "# case psl" in text
    assert "(c,m)=(1,6)" in text  # the alternative route is recorded


def test_empty_result_is_unresolved():
    assert AuditResult(e_max=12).global_verdict == "UNRESOLVED"
