import json
from math import comb

import pytest
from click.testing import CliRunner

from twobridge.conway import mirror_symmetry
from twobridge.harness import (
    DEFAULT, EnumerationSpec, enumerate, forms_of, load_config, oracle_check, run_enumeration,
    verify_paper,
)
from twobridge.harness.cli import main
from twobridge.harness.report import CSV_COLUMNS

from .conftest import C


def test_enumeration_counts():
    assert len(list(forms_of(5, 2))) == 4
    assert list(forms_of(2, 1)) == [C(2, -2)]
    assert set(forms_of(3, 1)) == {C(4, -2), C(2, -4)}
    for m in range(2, 13):
        for g in range(1, m // 2 + 1):
            assert len(list(forms_of(m, g))) == comb(m - 1, 2 * g - 1)


def test_enumeration_dedup():
    assert len([k for k in enumerate(EnumerationSpec(3, dedup="symmetry")) if k.complexity == 3]) == 1
    full = list(enumerate(EnumerationSpec(10)))
    dedup = list(enumerate(EnumerationSpec(10, dedup="symmetry")))
    assert len(full) == len(set(full)) == 2 ** 9 - 1
    assert {min(k.entries(), mirror_symmetry(k).entries()) for k in full} == {k.entries() for k in dedup}
    assert len(dedup) == len({k.entries() for k in dedup})


def test_enumeration_order_and_genus_range():
    forms = list(enumerate(EnumerationSpec(8, genus_range=(2, 3))))
    assert {k.g for k in forms} == {2, 3}
    assert forms == list(enumerate(EnumerationSpec(8, genus_range=(2, 3))))
    assert [k.complexity for k in forms] == sorted(k.complexity for k in forms)
    with pytest.raises(ValueError):
        EnumerationSpec(1)


def test_bulk_run_and_determinism():
    spec = EnumerationSpec(11, dedup="symmetry")
    a, b = run_enumeration(spec), run_enumeration(spec)
    assert a.counts["inconclusive"] == 0 and a.ok
    assert sum(a.counts.values()) == len(a.reports)
    assert a.to_json() == b.to_json()
    assert a.to_csv() == b.to_csv()


def test_parallel_equals_serial():
    spec = EnumerationSpec(10)
    serial = run_enumeration(spec)
    parallel = run_enumeration(spec, workers=2, chunk=50)
    assert serial.to_json() == parallel.to_json()


def test_csv_columns():
    rows = run_enumeration(EnumerationSpec(4)).to_csv().splitlines()
    assert rows[0].split(",") == list(CSV_COLUMNS)
    assert rows[1] == "g=1;b=1;c=-1,1,3,1,0,1,3,1,False,True,excluded_torus_2k"


def test_config_file(tmp_path):
    p = tmp_path / "grid.cfg"
    p.write_text("genus2_b_max = 5\nchain_g_max=6\n")
    cfg = load_config(p)
    assert cfg.genus2_b_max == 5 and cfg.chain_g_max == 6 and cfg.genus3_lemma_max == DEFAULT.genus3_lemma_max
    p.write_text("bogus = 1\n")
    with pytest.raises(ValueError):
        load_config(p)


def test_case_replay_small_grid(tmp_path):
    from dataclasses import replace

    small = replace(DEFAULT, genus2_a_max=5, genus2_b_max=5, genus2_strict_max=3, genus2_routine_max=4,
                    genus3_lemma_max=3, genus3_final_max=5, chain_g_max=8, chain_b_max=4,
                    delta_one_g_max=5, closed_form_max=3)
    r = verify_paper(small)
    assert r.ok
    known = {c.name for c in r.cases if not c.passed}
    assert known == {"genus2_routine_boundary", "chain_bullets_g5_boundary", "closed_forms_known_misprints"}
    assert all(c.known_deviation for c in r.cases if not c.passed)


def test_oracle_check_reports_first_failure():
    r = oracle_check(6, suites=("a2_triple", "v3_printed_formula", "v3_partial_sums"))
    by = {s.name: s for s in r.oracle}
    assert by["a2_triple"].passed and by["v3_partial_sums"].passed
    fail = by["v3_printed_formula"].failure
    assert fail["case"] == "C[2,-2,2,-2]"
    assert fail["values"] == {"gauss_printed": 3, "jones": 5}
    assert not r.ok


# -- command line -------------------------------------------------------------

def run(*args):
    return CliRunner().invoke(main, list(args))


def test_cli_invariants():
    res = run("invariants", "--conway", "C[4,-2,2,-4]", "--json")
    assert res.exit_code == 0
    d = json.loads(res.output)
    assert (d["det"], d["a2"], d["a4"], d["four_v3"], d["signature"]) == (33, 8, 4, 22, 4)


def test_cli_usage_errors():
    assert run("invariants", "--conway", "2,0,2,-2").exit_code == 2
    assert run("invariants").exit_code == 2
    assert run("enumerate", "--max-complexity", "1").exit_code == 2
    assert run("no-such-command").exit_code == 2


def test_cli_obstruct():
    res = run("obstruct", "--conway", "4,-2,2,-4", "--density", "11", "13")
    assert res.exit_code == 0
    assert json.loads(res.output)["verdict"] == "no_ccs_equality"


def test_cli_enumerate(tmp_path):
    out = tmp_path / "r.json"
    res = run("enumerate", "--max-complexity", "8", "--dedup", "symmetry", "--out", str(out))
    assert res.exit_code == 0
    d = json.loads(out.read_text())
    assert d["counts"]["inconclusive"] == 0 and d["spec"]["dedup"] == "symmetry"
    csv = tmp_path / "r.csv"
    assert run("enumerate", "--max-complexity", "6", "--out", str(csv)).exit_code == 0
    assert csv.read_text().startswith("key,g,det")
    assert run("enumerate", "--max-complexity", "6", "--out", str(tmp_path / "r.txt")).exit_code == 2


def test_cli_verify_paper_with_config(tmp_path):
    cfg = tmp_path / "g.cfg"
    cfg.write_text("genus2_a_max=3\ngenus2_b_max=3\ngenus2_strict_max=2\ngenus2_routine_max=3\n"
                   "genus3_lemma_max=2\ngenus3_final_max=4\nchain_g_max=6\nchain_b_max=3\n"
                   "delta_one_g_max=4\nclosed_form_max=2\n")
    res = run("verify-paper", "--config", str(cfg))
    assert res.exit_code == 0, res.output
    assert "[KNOWN] chain_bullets_g5_boundary" in res.output
    bad = tmp_path / "bad.cfg"
    bad.write_text("nope=1\n")
    assert run("verify-paper", "--config", str(bad)).exit_code == 2


def test_cli_oracle_check_exit_status():
    res = run("oracle-check", "--max-complexity", "4")
    # the printed sum-of-squares 4v3 formula disagrees with Jones from genus two on
    assert res.exit_code == 1
    assert "[FAIL] v3_printed_formula" in res.output
    assert "[ok  ] v3_partial_sums" in res.output
