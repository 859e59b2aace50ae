import subprocess
import sys

import pytest

from flagprod.cli import main
from flagprod.designio import read_design


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_solve_count(capsys):
    rc, out, _ = run(capsys, "solve", "--c", "1", "--count", "3")
    assert rc == 0
    assert out.splitlines() == ["1 2 5", "1 3 9", "1 4 13"]


def test_solve_max_omega(capsys):
    rc, out, _ = run(capsys, "solve", "--c", "3", "--max-omega", "127")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "3 3 13"
    assert [int(ln.split()[2]) for ln in lines] == [13, 37, 61, 85, 109]


@pytest.mark.parametrize("c", ["2", "5", "8"])
def test_solve_unsolvable(capsys, c):
    rc, out, _ = run(capsys, "solve", "--c", c, "--count", "1")
    assert rc == 2
    assert out == "UNSOLVABLE\n"


def test_solve_usage_errors(capsys):
    for argv in [
        ["solve", "--c", "1"],  # no enumeration bound
        ["solve", "--c", "1", "--count", "2", "--max-omega", "9"],
        ["solve", "--c", "0", "--count", "1"],
        ["frobnicate"],
        [],
    ]:
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 64
        capsys.readouterr()


def test_construct_and_verify_ok(capsys, tmp_path):
    out_file = tmp_path / "d125.txt"
    rc, out, _ = run(capsys, "construct", "--c", "1", "--m", "2", "--omega", "5",
                     "--out", str(out_file))
    assert rc == 0
    assert out == "25 4 600\n"
    assert read_design(str(out_file)).b == 600

    rc, out, _ = run(capsys, "verify", str(out_file))
    assert rc == 0
    assert out.splitlines()[0] == (
        "2-(25,4,12) b=600 r=96 rstar=8 lambdastar=1"
        " flag_transitive=true hypothesis=FAILS"
    )


def test_construct_rejects_non_solution(capsys, tmp_path):
    rc, _, err = run(capsys, "construct", "--c", "1", "--m", "2", "--omega", "7",
                     "--out", str(tmp_path / "x.txt"))
    assert rc == 3
    assert "error:" in err


def test_construct_force_then_verify_fails(capsys, tmp_path):
    out_file = tmp_path / "d127.txt"
    rc, out, _ = run(capsys, "construct", "--c", "1", "--m", "2", "--omega", "7",
                     "--out", str(out_file), "--force")
    assert rc == 0
    assert out == "49 4 8820\n"

    rc, out, _ = run(capsys, "verify", str(out_file))
    assert rc == 5
    assert out.splitlines()[0] == (
        "NOT-2-DESIGN (49,4) b=8820 lambda1=60 lambda2=40 flag_transitive=true"
    )


def test_construct_cap(capsys, tmp_path):
    rc, _, err = run(capsys, "construct", "--c", "1", "--m", "2", "--omega", "5",
                     "--out", str(tmp_path / "x.txt"), "--cap", "10")
    assert rc == 4
    assert "error:" in err


def test_construct_io_error(capsys, tmp_path):
    rc, _, err = run(capsys, "construct", "--c", "1", "--m", "2", "--omega", "5",
                     "--out", str(tmp_path / "missing" / "x.txt"))
    assert rc == 74
    assert "error:" in err


def test_verify_parse_error(capsys, tmp_path):
    path = tmp_path / "junk.txt"
    path.write_text("flagprod-design 1\nomega 5 c 1 m 2\nv 25 k 4 b 1\nblock 0 5 11\n")
    rc, _, err = run(capsys, "verify", str(path))
    assert rc == 65
    assert "error:" in err


def test_verify_io_error(capsys, tmp_path):
    rc, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
    assert rc == 74
    assert "error:" in err


def test_audit_all(capsys):
    rc, out, _ = run(capsys, "audit")
    assert rc == 0
    assert out.endswith("GLOBAL\tNO_PRODUCT_ACTION\n")
    assert "# filtered: PSL(2,8) degree 28 skipped" in out


def test_audit_psl_d3(capsys):
    rc, out, _ = run(capsys, "audit", "--case", "psl", "--d", "3")
    assert rc == 0
    rows = [ln for ln in out.splitlines() if ln.startswith("psl\tPSL(3,")]
    assert len(rows) == 7  # 5 cases, PSL(3,4) contributes one row per m


def test_audit_family_without_d_keeps_filter_note(capsys):
    rc, out, _ = run(capsys, "audit", "--case", "psl")
    assert rc == 0
    assert "# filtered:" in out
    rc, out, _ = run(capsys, "audit", "--case", "sz")
    assert rc == 0
    assert "# filtered:" not in out


def test_audit_bad_e_max(capsys):
    rc, _, err = run(capsys, "audit", "--e-max", "5")
    assert rc == 64
    assert "error:" in err


def test_audit_bad_case(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["audit", "--case", "ree"])
    assert exc.value.code == 64
    capsys.readouterr()


def test_module_entry_point(tmp_path):
    # the installed surface end to end, through a real process
    proc = subprocess.run(
        [sys.executable, "-m", "flagprod", "solve", "--c", "1", "--count", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 2 5\n1 3 9\n"

    proc = subprocess.run([sys.executable, "-m", "flagprod"], capture_output=True, text=True)
    assert proc.returncode == 64
