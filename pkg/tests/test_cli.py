from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from slbranch.cli import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    rc = main([str(a) for a in argv])
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_symbols_kappa(capsys):
    rc, out, _ = run(capsys, "symbols", 2, 3, 2, "--kappa")
    assert rc == EXIT_OK
    rows = json.loads(out)
    assert sorted(r["constituents"] for r in rows if r["constituents"] > 1) == [2]
    assert all({"symbol", "pairs", "kappa_ell", "kappa_ell_prime"} <= set(r) for r in rows)


def test_symbols_orbits_subset(capsys):
    _, out_all, _ = run(capsys, "symbols", 2, 7, 3)
    _, out_orb, _ = run(capsys, "symbols", 2, 7, 3, "--orbits")
    full = {r["symbol"] for r in json.loads(out_all)}
    orbs = {r["symbol"] for r in json.loads(out_orb)}
    assert orbs < full and len(orbs) == 7


def test_symbols_main2_rows(capsys):
    rc, out, _ = run(capsys, "symbols", 3, 7, 3, "--main2", "--star", "--jm")
    assert rc == EXIT_OK
    rows = json.loads(out)
    assert rows and all({"main2", "star", "jm_irreducible"} <= set(r) for r in rows)


def test_symbols_csv(capsys):
    rc, out, _ = run(capsys, "symbols", 2, 5, 2, "--kappa", "--csv")
    assert rc == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and set(rows[0]) >= {"symbol", "pairs", "kappa_ell"}
    json.loads(rows[0]["pairs"])


def test_symbols_rejects_theta_with_cx(capsys):
    rc, _, err = run(capsys, "symbols", 2, 3, 2, "--cx", "--theta")
    assert rc == EXIT_USAGE and "theta" in err


@pytest.mark.parametrize(
    "args,expected",
    [
        (("2", "3", "2", "sl", "--both"), 3),
        (("2", "3", "2", "r", "--both"), 3),
        (("2", "5", "2", "r", "--both"), 4),
        (("3", "3", "2", "r", "--both"), 7),
        (("2", "4", "3", "gl", "--both"), None),
    ],
)
def test_count_both_agree(capsys, args, expected):
    rc, out, _ = run(capsys, "count", *args)
    d = json.loads(out)
    assert rc == EXIT_OK and d["agree"] is True
    if expected is not None:
        assert d["parametric_ibr"] == expected


def test_count_parametric_only(capsys):
    rc, out, _ = run(capsys, "count", 3, 2, 7, "gl", "--parametric")
    assert rc == EXIT_OK
    d = json.loads(out)
    assert d["parametric_ibr"] == 4 and "oracle_classes" not in d


def test_count_capacity_exit(capsys):
    rc, _, err = run(capsys, "count", 3, 5, 2, "gl", "--oracle")
    assert rc == EXIT_CAPACITY and "capacity" in err
    rc, _, _ = run(capsys, "count", 2, 5, 2, "gl", "--oracle", "--cap", 100)
    assert rc == EXIT_CAPACITY


@pytest.mark.parametrize(
    "argv",
    [
        ("count", 2, 6, 5, "gl"),
        ("count", 2, 9, 3, "gl"),
        ("symbols", 0, 3, 2),
        ("symbols", 2, 3, 4),
        ("classes", 2, 3, "--ell", 3),
        ("verify", "nosuch"),
        ("frobnicate",),
    ],
)
def test_usage_errors(capsys, argv):
    rc, _, _ = run(capsys, *argv)
    assert rc == EXIT_USAGE


def test_verify_bad_grid(capsys, tmp_path):
    rc, _, _ = run(capsys, "verify", "lnt", "--grid", tmp_path / "missing.json")
    assert rc == EXIT_USAGE


def test_verify_lines_and_json(capsys, tmp_path):
    grid = tmp_path / "g.json"
    grid.write_text(json.dumps([{"n": 2, "q": 3, "ell": 2}, {"n": 2, "q": 5, "ell": 3}]))
    rc, out, _ = run(capsys, "verify", "theta", "--grid", grid, "--lines")
    assert rc == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[-1].startswith("SUMMARY theta")
    assert all(l.split()[0] in ("PASS", "SKIP") for l in lines[:-1])
    rc, out, _ = run(capsys, "verify", "counting", "--grid", grid)
    d = json.loads(out)
    assert rc == EXIT_OK and d["ok"] and d["summary"]["FAIL"] == 0


def test_classes_table(capsys):
    rc, out, _ = run(capsys, "classes", 2, 3, "--ell", 2)
    rows = json.loads(out)
    assert rc == EXIT_OK and len(rows) == 8
    assert sum(r["class_size"] for r in rows) == 48
    assert sum(1 for r in rows if r["ell_regular"]) == 2
    rc, out, _ = run(capsys, "classes", 2, 4, "--csv")
    assert out.splitlines()[0] == "label,centralizer_order,class_size"
    assert len(out.splitlines()) == 1 + 4**2 - 1


def test_output_deterministic(capsys):
    outs = {run(capsys, "symbols", 3, 4, 3, "--kappa", "--star")[1] for _ in range(2)}
    assert len(outs) == 1


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "slbranch", "count", "2", "3", "2", "sl"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["parametric_ibr"] == 3
