from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2zeta import cli, period

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@given(finite, finite)
def test_parse_complex_round_trip(a, b):
    sign = "+" if b >= 0 else "-"
    assert cli.parse_complex(f"{a!r} {sign} {abs(b)!r}i") == complex(a, b)


@pytest.mark.parametrize("text,value", [("i", 1j), ("-i", -1j), ("2.5", 2.5), ("0.5+i", 0.5 + 1j),
                                        ("3e-2-4.5i", 0.03 - 4.5j), ("1+2j", 1 + 2j)])
def test_parse_complex_forms(text, value):
    assert cli.parse_complex(text) == value


def test_parse_complex_rejects_junk():
    with pytest.raises(cli.UsageError):
        cli.parse_complex("1+2k")


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_eval_json(capsys):
    code, out = run(capsys, "zeta", "eval", "--fn", "long", "--s", "0.3+2i")
    assert code == 0
    d = json.loads(out.out)
    assert set(d) == {"re", "im", "abs"}
    assert abs(complex(d["re"], d["im"]) - complex(period.reference_zeta("long").evaluate(0.3 + 2j))) < 1e-12


def test_eval_special_function(capsys):
    code, out = run(capsys, "eval", "--fn", "gamma", "--s", "5")
    assert code == 0 and json.loads(out.out)["re"] == pytest.approx(24.0, rel=1e-14)


def test_eval_at_pole_fails_cleanly(capsys):
    code, out = run(capsys, "zeta", "eval", "--fn", "short", "--s", "3")
    assert code == 1 and "pole" in out.err.lower()


@pytest.mark.parametrize("argv", [["zeta", "eval", "--fn", "nope", "--s", "1"], ["bogus"],
                                  ["zeta", "eval", "--fn", "Z1", "--s", "x"], ["zeros", "count", "--fn", "F1"]])
def test_usage_errors_exit_2(capsys, argv):
    assert cli.main(argv) == 2


def test_period_build_json_round_trips(capsys, tmp_path):
    out = tmp_path / "p.json"
    code, _ = run(capsys, "period", "build", "--kind", "short", "--stage", "zeta", "--out", str(out))
    assert code == 0
    back = period.from_json(out.read_text())
    assert back.same_terms(period.reference_zeta("short"))


def test_g2_table_text(capsys):
    code, out = run(capsys, "g2", "table")
    assert code == 0 and "sigma(pi)" in out.out


def test_check_fe(capsys):
    code, out = run(capsys, "zeta", "check-fe", "--fn", "Z1", "--samples", "30", "--seed", "3")
    d = json.loads(out.out)
    assert code == 0 and d["pass"] and d["seed"] == 3


def test_zeros_count(capsys):
    code, out = run(capsys, "zeros", "count", "--fn", "Z1", "--rect", "0.501,20,-25,25", "--emit", "text")
    assert code == 0 and out.out.strip() == "2"


def test_zeros_scan_csv(capsys, tmp_path):
    out = tmp_path / "scan.csv"
    code, _ = run(capsys, "zeros", "scan", "--fn", "Z2", "--t0", "0", "--t1", "1", "--emit", "csv", "--out", str(out))
    raw = out.read_bytes()
    assert code == 0 and b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == "t,re_part,im_part"
    assert len(lines) == 101
    assert all(float(line.split(",")[1]) == 0.0 for line in lines[1:])


def test_xi_table_reuses_cache(capsys, tmp_path):
    out = tmp_path / "xi.json"
    code, _ = run(capsys, "zeros", "xi-table", "--T", "30", "--out", str(out))
    assert code == 0 and len(json.loads(out.read_text())["ordinates"]) == 3
    stamp = out.stat().st_mtime_ns
    code, captured = run(capsys, "zeros", "xi-table", "--T", "26", "--out", str(out), "--emit", "text")
    assert code == 0 and out.stat().st_mtime_ns == stamp
    assert len(captured.out.split()) == 3


def test_config_file_is_applied(capsys, tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("seed = 5\n")
    code, out = run(capsys, "zeta", "check-fe", "--fn", "long", "--samples", "5", "--config", str(cfg))
    assert code == 0 and json.loads(out.out)["seed"] == 5


def test_bad_config_exits_2(capsys, tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("nonsense = 5\n")
    assert cli.main(["g2", "table", "--config", str(cfg)]) == 2
