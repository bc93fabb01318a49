"""Scenario-file parsing and command-line harness tests."""

from __future__ import annotations

import filecmp
import json

import pytest

import moneykinetics as mk
from moneykinetics.cli import main
from moneykinetics.errors import ScenarioError

BASIC = """\
# minimal fixed-amount run
agents = 50
initial_balance_cents = 10000
rule = fixed
delta_cents = 100
transactions = 100000
snapshot_every = 50000
seed = 7
"""


def test_parse_scenario_basic():
    cfg = mk.parse_scenario_text(BASIC)
    assert cfg.n_agents == 50
    assert cfg.initial_balance == 10000
    assert cfg.rule == mk.FixedAmount(100)
    assert cfg.boundary == mk.NoDebt()
    assert cfg.n_transactions == 100_000
    assert cfg.snapshot_every == 50_000
    assert cfg.seed == 7
    assert cfg.interest is None and cfg.bankruptcy is None


def test_parse_scenario_defaults():
    cfg = mk.parse_scenario_text(
        "agents = 10\ninitial_balance_cents = 1000\nrule = fixed\n"
        "delta_cents = 10\ntransactions = 1000\n")
    assert cfg.seed == 1
    assert cfg.snapshot_every == 100  # ten sweeps of ten agents
    assert cfg.bin_width is None


def test_parse_scenario_all_sections():
    cfg = mk.parse_scenario_text("""
agents = 100
initial_balance_cents = 100000
rule = saving
lambda = uniform
boundary = debt_limit
m_d_cents = 80000
transactions = 1000000
bin_width_cents = 5000
interest.deposit_rate = 0.01
interest.loan_rate = 0.02
interest.cadence_sweeps = 5
bankruptcy.threshold_cents = 60000
""")
    assert cfg.rule.per_agent
    assert cfg.boundary == mk.DebtLimit(80000)
    assert cfg.bin_width == 5000
    assert cfg.interest == mk.InterestSpec(0.01, 0.02, cadence_sweeps=5)
    assert cfg.bankruptcy == mk.BankruptcySpec(60000, cadence_sweeps=1)


@pytest.mark.parametrize("text,fragment", [
    ("agents = 50\n", "requires key"),
    (BASIC + "agents = 9\n", "duplicate key"),
    (BASIC + "colour = blue\n", "unknown key"),
    (BASIC + "no equals sign here\n", "key = value"),
    (BASIC.replace("rule = fixed", "rule = barter"), "unknown rule"),
    (BASIC.replace("delta_cents = 100", "delta_cents = ten"), "expected integer"),
    (BASIC.replace("agents = 50", "agents = 1"), ">= 2"),
    (BASIC + "boundary = reserve_ratio\nreserve_ratio = 1.3\n", "reserve ratio"),
    (BASIC + "boundary = debt_limit\n", "requires key"),
    (BASIC.replace("snapshot_every = 50000", "snapshot_every = 90000"),
     "at least 2 snapshots"),
])
def test_parse_scenario_diagnostics(text, fragment):
    with pytest.raises(ScenarioError, match=fragment):
        mk.parse_scenario_text(text)


@pytest.fixture()
def scenario_file(tmp_path):
    path = tmp_path / "basic.scn"
    path.write_text(BASIC)
    return path


def test_simulate_outputs(scenario_file, tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["simulate", str(scenario_file), "--out", str(out)]) == 0
    assert "wrote" in capsys.readouterr().out

    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["rng_algorithm"] == "splitmix64"
    assert manifest["seed"] == 7
    assert manifest["config"]["n_agents"] == 50
    assert manifest["bank"]["monetary_base_cents"] == 500_000
    assert len(manifest["frames"]) == 3  # snapshots at 0, 50000, 100000

    trace_lines = (out / "trace.csv").read_text().splitlines()
    assert trace_lines[0] == "snapshot,transactions,mean,variance,skewness,entropy,fit_T,ks"
    assert len(trace_lines) == 4

    frame_lines = (out / "frame_0.csv").read_text().splitlines()
    assert frame_lines[0] == "bin_lo,count"
    assert sum(int(line.split(",")[1]) for line in frame_lines[1:]) == 50


def test_simulate_reruns_byte_identical(scenario_file, tmp_path):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert main(["simulate", str(scenario_file), "--out", str(out_a)]) == 0
    assert main(["simulate", str(scenario_file), "--out", str(out_b)]) == 0
    for name in ["trace.csv", "frame_0.csv", "frame_1.csv", "frame_2.csv"]:
        assert filecmp.cmp(out_a / name, out_b / name, shallow=False), name
    # the manifest embeds wall-clock time; everything else must agree
    manifest_a = json.loads((out_a / "manifest.json").read_text())
    manifest_b = json.loads((out_b / "manifest.json").read_text())
    manifest_a.pop("wall_clock_seconds")
    manifest_b.pop("wall_clock_seconds")
    assert manifest_a == manifest_b


def test_simulate_overrides(scenario_file, tmp_path):
    out = tmp_path / "out"
    assert main(["simulate", str(scenario_file), "--out", str(out),
                 "--seed", "99", "--transactions", "200000"]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["seed"] == 99
    assert manifest["config"]["n_transactions"] == 200_000


def test_simulate_bad_scenario_exits_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.scn"
    bad.write_text("agents = 1\n")
    assert main(["simulate", str(bad), "--out", str(tmp_path / "o")]) == 1
    assert "error:" in capsys.readouterr().err


def test_simulate_missing_file_exits_nonzero(tmp_path, capsys):
    assert main(["simulate", str(tmp_path / "nope.scn"),
                 "--out", str(tmp_path / "o")]) == 1
    assert "i/o error" in capsys.readouterr().err


def test_temperatures_verb(tmp_path, capsys):
    path = tmp_path / "reserve.scn"
    path.write_text(
        "agents = 500\ninitial_balance_cents = 100000\nrule = fixed\n"
        "delta_cents = 1000\nboundary = reserve_ratio\nreserve_ratio = 0.8\n"
        "transactions = 1000000\n")
    assert main(["temperatures", str(path)]) == 0
    out = capsys.readouterr().out
    assert "T+ = 1250.00$" in out
    assert "T- = 250.00$" in out


def test_analyze_energy_verb(tmp_path, capsys):
    csv = tmp_path / "energy.csv"
    csv.write_text(
        "year,country,population,kw_per_capita\n"
        "2000,India,1000000000,0.45\n"
        "2000,USA,280000000,9.5\n"
        "2005,India,1100000000,0.6\n"
        "2005,USA,300000000,10\n")
    out = tmp_path / "out"
    assert main(["analyze-energy", str(csv), "--out", str(out)]) == 0
    assert (out / "lorenz_2000.csv").exists()
    assert (out / "lorenz_2005.csv").exists()
    summary = (out / "energy_summary.csv").read_text().splitlines()
    assert summary[0] == "year,world_mean_kw,gini,exponential_distance"
    assert [line.split(",")[0] for line in summary[1:]] == ["2000", "2005"]
    assert "Gini" in capsys.readouterr().out


def test_analyze_energy_single_country_gini_zero(tmp_path):
    csv = tmp_path / "one.csv"
    csv.write_text("year,country,population,kw_per_capita\n2005,X,100,2.5\n")
    out = tmp_path / "out"
    assert main(["analyze-energy", str(csv), "--out", str(out)]) == 0
    line = (out / "energy_summary.csv").read_text().splitlines()[1]
    year, mean, g, _ = line.split(",")
    assert year == "2005" and float(mean) == 2.5 and float(g) == 0.0


def test_analyze_energy_empty_csv_errors(tmp_path, capsys):
    csv = tmp_path / "empty.csv"
    csv.write_text("")
    assert main(["analyze-energy", str(csv), "--out", str(tmp_path / "o")]) == 1
    assert "error:" in capsys.readouterr().err
