import json

import pytest

from monohopf.cli import COMMANDS, ConfigError, fixture_names, load_fixture, main, parse_config, parse_scalar
from monohopf.cyclotomic import CyclotomicScalar


def sweedler_config(**over):
    cfg = {
        "schema_version": 1,
        "datum": {"group": {"cyclic_factors": [2]}, "g": [1], "chi": {"modulus": 2, "values": [1]}, "mu": "0"},
    }
    cfg.update(over)
    return cfg


def run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("text,value", [
    ("0", CyclotomicScalar.zero(1)),
    ("-1", CyclotomicScalar.from_rational(1, -1)),
    ("3/4", CyclotomicScalar.from_rational(1, 3) / 4),
    ("zeta_4^1", CyclotomicScalar.root_of_unity(4, 1)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["zeta", "1/0", "two", "zeta_0^1"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ConfigError):
        parse_scalar(bad)


def test_every_fixture_parses_with_expectations():
    names = fixture_names()
    assert "sweedler" in names and len(names) >= 10
    for name in names:
        cfg = load_fixture(name)
        assert cfg.expect and cfg.name


@pytest.mark.parametrize("command", [c for c in COMMANDS if c != "paper-examples"])
def test_commands_on_sweedler(capsys, command):
    code, out = run_json(capsys, command, "--config", "sweedler")
    assert code == 0 and out["ok"] and out["command"] == command
    assert out["schema_version"] == 1


def test_json_output_is_deterministic(capsys):
    main(["gal", "--config", "taft3", "--json"])
    first = capsys.readouterr().out
    main(["gal", "--config", "taft3", "--json"])
    assert capsys.readouterr().out == first


def test_config_file_and_overrides(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps(sweedler_config()))
    code, out = run_json(capsys, "cohomology", "--config", str(path), "--modulus", "4")
    assert code == 0
    groups = out["report"]["groups"]
    # H^2(C2, Z/4) = Z/2, and nothing is divided out of H^2_{1,g} on C2
    assert groups["H2"]["invariants"] == [2]
    assert groups["H2_{1,g}"]["invariants"] == [4]


@pytest.mark.parametrize("cfg,msg", [
    (sweedler_config(schema_version=2), "schema_version"),
    ({"schema_version": 1}, "datum"),
    (sweedler_config(modulus=1), "modulus"),
])
def test_config_errors(cfg, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_config(cfg)


def test_bad_config_exits_with_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"schema_version": 1, "datum": ')
    assert main(["classify", "--config", str(path)]) == 2
    assert "line 1" in capsys.readouterr().err
    path.write_text(json.dumps(sweedler_config(datum={"group": {"cyclic_factors": [2]}, "g": [1],
                                                      "chi": {"modulus": 2, "values": [0]}})))
    assert main(["classify", "--config", str(path)]) == 2


def test_failed_expectation_exits_with_1(tmp_path, capsys):
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps(sweedler_config(expect={"type": "III"})))
    assert main(["verify", "--config", str(path)]) == 1
    capsys.readouterr()


def test_missing_config_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 2


def test_human_output(capsys):
    assert main(["classify", "--config", "taft4"]) == 0
    text = capsys.readouterr().out
    assert "PASS" in text and "type" in text


def test_fixture_command_passes(capsys):
    code, out = run_json(capsys, "paper-examples")
    assert code == 0 and out["ok"]
    assert set(fixture_names()) <= {k.split(":")[0] for k in out["checks"]}
