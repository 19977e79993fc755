import json

import pytest

from rsquad import cli
from rsquad.errors import FalsificationError
from rsquad.rsq import RsQuadratic


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--q", "3", "--n", "10", "--semantics", "anf")
    assert code == 0
    assert json.loads(out)["weight"] == 480


def test_analyze_range_default_anf(capsys):
    code, out, _ = run(capsys, "analyze", "--q", "3", "--n", "5..15")
    weights = [r["weight"] for r in json.loads(out)]
    assert weights == [16, 28, 64, 112, 256, 480, 1024, 1792, 4096, 8064, 16384]
    assert json.loads(out)[1]["quoted_weight"] == 6


def test_profile(capsys):
    code, out, _ = run(capsys, "profile", "--q", "3,4")
    data = json.loads(out)
    assert (data["shape"], data["k"]) == ("EXACT_VALUATION", 1)
    assert data["description"] == "balanced iff n ≡ 2 mod 4"
    code, out, _ = run(capsys, "profile", "--q", "3,4", "--q", "1,3", "--format", "text")
    assert "NEVER" in out.splitlines()[1]


def test_period(capsys):
    code, out, _ = run(capsys, "period", "--q", "1,4")
    assert json.loads(out)["period"] == 30


def test_recursion_fit_and_backward(capsys):
    code, out, _ = run(capsys, "recursion", "--q", "1,2,3", "--n", "7..27", "--back", "6", "--roots")
    data = json.loads(out)
    assert data["recurrence"]["coeffs"] == [2, 0, 0, 4, -8, 0, 0, -16, 32]
    assert data["backward"] == {"from_n": 1, "values": [1, 2, 4, 0, 16, 32]}
    assert len(data["roots"]) == 9


def test_recursion_closed_form(capsys):
    code, out, _ = run(capsys, "recursion", "--t", "3", "--matrix", "--format", "text")
    assert code == 0 and "x^7 - 2x^6 - 8x + 16" in out


def test_classify_and_minreps(capsys):
    code, out, _ = run(capsys, "classify", "--n", "12")
    assert json.loads(out)["num_classes"] == 5
    code, out, _ = run(capsys, "classify", "--n", "6", "--all", "--format", "csv")
    assert out.splitlines()[0] == "offsets,weight,nonlinearity,class_id"
    code, out, _ = run(capsys, "minreps", "--n", "3..5", "--format", "csv")
    assert out.splitlines()[1].startswith("3,anf,1,")


def test_tracecheck(capsys):
    code, out, _ = run(capsys, "tracecheck", "--q", "3,4", "--n", "2..8")
    rows = json.loads(out)
    assert [r["balanced"] for r in rows] == [n % 4 == 2 for n in range(2, 9)]
    assert all(r["abs_W_rs"] == r["abs_W_trace"] for r in rows)
    assert run(capsys, "tracecheck", "--q", "1", "--n", "17")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-j", "3", "--n-max", "8", "--trace-n-max", "6")
    assert code == 0 and json.loads(out)["status"] == "ok"


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--q", "4,3", "--n", "5"],
        ["analyze", "--q", "5", "--n", "5"],
        ["analyze", "--q", "1", "--n", "9..3"],
        ["bogus"],
        [],
        ["recursion", "--q", "3"],
        ["recursion", "--q", "3", "--n", "7..10"],
        ["profile", "--q", "1", "--semantics", "anf"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code = None
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_falsification_exits_2(capsys, monkeypatch):
    def boom(args):
        raise FalsificationError("forced", q=RsQuadratic((2, 5)), n=11)

    monkeypatch.setattr(cli, "cmd_period", boom)
    code, _, err = run(capsys, "period", "--q", "2,5")
    assert code == 2
    assert "q=2,5" in err and "n=11" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--q", "1,2", "--n", "3..9", "--semantics", "orbit"],
        ["profile", "--q", "1,2,3"],
        ["recursion", "--q", "3,4", "--n", "9..39", "--back", "8", "--roots"],
        ["classify", "--n", "9", "--all"],
        ["minreps", "--n", "6..8"],
    ],
)
def test_json_is_deterministic_and_round_trips(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n" == first


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "r.txt"
    code, out, _ = run(capsys, "period", "--q", "6", "--format", "text", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().startswith("q={6} period=12")
