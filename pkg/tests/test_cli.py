import json

import pytest

from tricomm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_bfile_golden(capsys):
    code, out, _ = run(capsys, "expand", "-N", "2")
    assert code == 0
    assert out == "0 1\n1 1\n2 4\n"


def test_expand_order_zero(capsys):
    code, out, _ = run(capsys, "expand", "-N", "0")
    assert code == 0
    assert out == "0 1\n"


def test_expand_json_with_metadata(capsys):
    code, out, _ = run(capsys, "expand", "-N", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "method": "product",
        "order": 4,
        "coefficients": [1, 1, 4, 8, 21],
    }


def test_expand_json_no_meta(capsys):
    code, out, _ = run(capsys, "expand", "-N", "3", "--format", "json", "--no-meta")
    assert code == 0
    assert json.loads(out) == [1, 1, 4, 8]


def test_expand_csv(capsys):
    code, out, _ = run(capsys, "classes", "-N", "2", "--format", "csv")
    assert code == 0
    assert out == "n,value\n0,1\n1,1\n2,4\n"


def test_classes_and_brute_agree_with_expand(capsys):
    _, expanded, _ = run(capsys, "expand", "-N", "5")
    _, classed, _ = run(capsys, "classes", "-N", "5")
    _, bruted, _ = run(capsys, "brute", "-N", "5")
    assert expanded == classed == bruted


def test_byte_identical_reruns(tmp_path, capsys):
    first = tmp_path / "a.bfile"
    second = tmp_path / "b.bfile"
    assert main(["expand", "-N", "12", "--out", str(first)]) == 0
    assert main(["expand", "-N", "12", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_unwritable_output_path_is_io_error(capsys):
    code, _, err = run(capsys, "expand", "-N", "2", "--out", "/nonexistent/dir/f.txt")
    assert code == 2
    assert "cannot write" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "-N", "10", "-K", "3")
    assert code == 0
    assert "VERIFIED" in out


def test_verify_corrupted_sigma_names_index(capsys):
    code, out, _ = run(capsys, "verify", "-N", "8", "-K", "2", "--corrupt-sigma", "3")
    assert code == 1
    assert "FIRST DISAGREEMENT at index 3" in out
    assert "FAILED" in out


def test_verify_brute_max_above_cap_refused(capsys):
    code, _, err = run(capsys, "verify", "-N", "9", "-K", "9")
    assert code == 3
    assert "centralizer cap" in err


def test_brute_above_cap_refused(capsys):
    code, _, err = run(capsys, "brute", "-N", "9")
    assert code == 3
    assert "cap" in err


def test_wreath_brute_match(capsys):
    code, out, _ = run(capsys, "wreath", "2", "2", "--brute")
    assert code == 0
    assert "k(W(2,2)) = 5" in out
    assert "brute = 5" in out
    assert "match" in out


def test_wreath_without_brute(capsys):
    code, out, _ = run(capsys, "wreath", "1", "6")
    assert code == 0
    assert "= 11" in out
    code, out, _ = run(capsys, "wreath", "7", "0")
    assert code == 0
    assert "= 1" in out


def test_wreath_brute_above_cap_refused(capsys):
    code, _, err = run(capsys, "wreath", "3", "6", "--brute")
    assert code == 3
    assert "wreath-table cap" in err


def test_log_check(capsys):
    code, out, _ = run(capsys, "log-check", "-N", "20")
    assert code == 0
    assert "agree" in out


def test_bound_check_reports_equality_note(capsys):
    code, out, _ = run(capsys, "bound-check", "-N", "1")
    assert code == 0
    assert "d = 1" in out
    code, out, _ = run(capsys, "bound-check", "-N", "100")
    assert code == 0
    assert "2 <= d <= 100" in out


def test_growth_output_shape(capsys):
    code, out, _ = run(capsys, "growth", "-N", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 1 1.000000"
    assert lines[3].startswith("4 21 2.14")


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "-N", "-1"],
        ["verify", "-N", "3", "-K", "5"],
    ],
)
def test_domain_errors_are_reported(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    assert code == 2
    assert "error" in captured.err
