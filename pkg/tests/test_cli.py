"""Command-line interface: exact output bytes, exit codes, JSON shapes.

run() is called in-process so stdout/stderr land in capsys; one test
goes through a real subprocess to cover the module entry point.
"""

import json
import subprocess
import sys

from g2pair.cli import run
from g2pair.grothring import IdentityCertificate, MotivicClass
from g2pair.replay import check_certificate

atom = MotivicClass.atom

P5_TEXT = "1 + L + L^2 + L^3 + L^4 + L^5"
FLAG_TEXT = "1 + 2*L + 2*L^2 + 2*L^3 + 2*L^4 + 2*L^5 + L^6"
COSETS_SIDE1 = "e\ns2\ns1*s2\ns2*s1*s2\ns1*s2*s1*s2\ns2*s1*s2*s1*s2\n"
COSETS_SIDE2 = "e\ns1\ns2*s1\ns1*s2*s1\ns2*s1*s2*s1\ns1*s2*s1*s2*s1\n"
FINAL_LINE = "L*([X] - [Y]) = 0"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_weyl_order(capsys):
    code, out, err = invoke(capsys, "weyl-order", "G2")
    assert (code, out, err) == (0, "12\n", "")


def test_weyl_order_matrix_literal(capsys):
    code, out, _ = invoke(capsys, "weyl-order", "[[2,-1],[-3,2]]")
    assert (code, out) == (0, "12\n")


def test_roots_text(capsys):
    code, out, _ = invoke(capsys, "roots", "G2")
    assert code == 0
    assert out == "0 1\n1 0\n1 1\n1 2\n1 3\n2 3\n"


def test_roots_json(capsys):
    code, out, _ = invoke(capsys, "roots", "G2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "type": "G2",
        "rank": 2,
        "count": 6,
        "positive_roots": [[0, 1], [1, 0], [1, 1], [1, 2], [1, 3], [2, 3]],
    }


def test_cosets_text_both_sides(capsys):
    code, out, _ = invoke(capsys, "cosets", "G2", "--parabolic", "1")
    assert (code, out) == (0, COSETS_SIDE1)
    code, out, _ = invoke(capsys, "cosets", "G2", "--parabolic", "2")
    assert (code, out) == (0, COSETS_SIDE2)


def test_cosets_json(capsys):
    code, out, _ = invoke(capsys, "cosets", "G2", "--parabolic", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["parabolic"] == [2]
    assert doc["count"] == 6
    assert [r["name"] for r in doc["representatives"]] == COSETS_SIDE2.split()
    assert doc["representatives"][3] == {
        "name": "s1*s2*s1",
        "word": [1, 2, 1],
        "length": 3,
    }


def test_poincare_text(capsys):
    code, out, _ = invoke(capsys, "poincare", "G2", "--parabolic", "1")
    assert (code, out) == (0, P5_TEXT + "\n")
    code, out, _ = invoke(capsys, "poincare", "G2", "--parabolic", "2")
    assert (code, out) == (0, P5_TEXT + "\n")
    code, out, _ = invoke(capsys, "poincare", "G2")
    assert (code, out) == (0, FLAG_TEXT + "\n")


def test_poincare_at(capsys):
    code, out, _ = invoke(capsys, "poincare", "G2", "--parabolic", "1", "--at", "2")
    assert (code, out) == (0, "63\n")
    code, out, _ = invoke(capsys, "poincare", "G2", "--parabolic", "1", "--at", "1")
    assert (code, out) == (0, "6\n")
    code, out, _ = invoke(capsys, "poincare", "G2", "--at", "1")
    assert (code, out) == (0, "12\n")


def test_poincare_json(capsys):
    code, out, _ = invoke(
        capsys, "poincare", "G2", "--parabolic", "1", "--at", "5", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["pairs"] == [[k, 1] for k in range(6)]
    assert doc["text"] == P5_TEXT
    assert doc["at"] == 5
    assert doc["value"] == 5**5 + 5**4 + 5**3 + 5**2 + 5 + 1


def test_degree(capsys):
    code, out, _ = invoke(capsys, "degree", "G2", "--side", "1")
    assert (code, out) == (0, "42\n")
    code, out, _ = invoke(capsys, "degree", "G2", "--side", "2")
    assert (code, out) == (0, "14\n")


def test_degree_json(capsys):
    code, out, _ = invoke(capsys, "degree", "G2", "--side", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"type": "G2", "side": 2, "degree": 14}


def test_verify_identity_text(capsys):
    code, out, err = invoke(capsys, "verify-identity", "G2")
    assert code == 0
    assert err == ""
    lines = out.rstrip("\n").split("\n")
    assert lines[-1] == FINAL_LINE
    assert "replay check: all 4 steps re-verified independently" in lines
    assert "relations used:" in lines
    assert any(ln.startswith("conclusion:") for ln in lines)
    # the unmultiplied difference is never asserted
    assert "[X] - [Y] = 0" not in out


def test_verify_identity_json_replays(capsys):
    code, out, _ = invoke(capsys, "verify-identity", "G2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["replay"] == {"ok": True, "checked_steps": 4}
    cert = IdentityCertificate.from_json(doc["certificate"])
    diff = check_certificate(cert)
    assert diff == atom("X", 1) - atom("Y", 1)
    assert doc["certificate"]["final_line"] == FINAL_LINE


def test_verify_identity_other_rank2(capsys):
    code, out, _ = invoke(capsys, "verify-identity", "A2")
    assert code == 0
    assert out.rstrip("\n").split("\n")[-1] == FINAL_LINE
    code, out, _ = invoke(capsys, "verify-identity", "B2")
    assert code == 0


def test_certificate_text(capsys):
    code, out, _ = invoke(capsys, "certificate", "G2")
    assert code == 0
    assert "weyl group order: 12" in out
    for name in COSETS_SIDE1.split() + COSETS_SIDE2.split():
        assert f"  {name}" in out
    assert "length bijection: j-th member pairs with j-th member" in out
    assert f"cell-count polynomial, side 1: {P5_TEXT}" in out
    assert f"cell-count polynomial, side 2: {P5_TEXT}" in out
    assert f"cell-count polynomial, full flag: {FLAG_TEXT}" in out
    assert FINAL_LINE in out
    assert "  side 1: 42" in out
    assert "  side 2: 14" in out
    assert "the degrees differ (42 != 14)" in out


def test_certificate_json(capsys):
    code, out, _ = invoke(capsys, "certificate", "G2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["weyl_order"] == 12
    assert doc["cosets"]["side1"] == COSETS_SIDE1.split()
    assert doc["cosets"]["side2"] == COSETS_SIDE2.split()
    assert doc["cosets"]["length_bijection_ok"] is True
    assert doc["cosets"]["lengths"] == [0, 1, 2, 3, 4, 5]
    assert doc["poincare"]["side1"] == doc["poincare"]["side2"]
    assert doc["poincare"]["equal"] is True
    assert doc["degrees"] == {"side1": 42, "side2": 14}
    cert = IdentityCertificate.from_json(doc["certificate"])
    check_certificate(cert)


def test_certificate_agreeing_degrees_wording(capsys):
    # A2 has equal degrees on both sides, the closing line flips
    code, out, _ = invoke(capsys, "certificate", "A2")
    assert code == 0
    assert "the degrees agree" in out


def test_byte_determinism(capsys):
    for argv in (
        ["certificate", "G2"],
        ["certificate", "G2", "--format", "json"],
        ["verify-identity", "G2", "--format", "json"],
        ["roots", "G2", "--format", "json"],
    ):
        first = invoke(capsys, *argv)
        second = invoke(capsys, *argv)
        assert first == second


def test_usage_errors_exit_2(capsys):
    assert invoke(capsys, "frobnicate", "G2")[0] == 2
    assert invoke(capsys, "degree", "G2")[0] == 2  # --side missing
    assert invoke(capsys, "degree", "G2", "--side", "3")[0] == 2
    assert invoke(capsys, "cosets", "G2")[0] == 2  # --parabolic missing
    assert invoke(capsys, "roots", "G2", "--format", "yaml")[0] == 2
    assert invoke(capsys, "cosets", "G2", "--parabolic", "x")[0] == 2
    assert invoke(capsys)[0] == 2  # no verb


def test_domain_errors_exit_1(capsys):
    cases = [
        ["roots", "Z3"],
        ["weyl-order", "G2", "--cap", "5"],
        ["roots", "G2", "--cap", "5"],
        ["degree", "A3", "--side", "1"],
        ["verify-identity", "A3"],
        ["certificate", "A1"],
        ["cosets", "G2", "--parabolic", "7"],
        ["poincare", "G2", "--parabolic", "0"],
    ]
    for argv in cases:
        code, out, err = invoke(capsys, *argv)
        assert code == 1, argv
        assert out == ""
        assert err.startswith("error: ")


def test_help_exits_zero(capsys):
    assert invoke(capsys, "--help")[0] == 0
    assert invoke(capsys, "degree", "--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "g2pair", "weyl-order", "G2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "12\n"
