"""Campaign pipeline: determinism, aggregation, certificates, replay."""
import io
import json

import pytest

from diskclass import (
    CampaignConfig,
    canonical_json,
    catalog_prepends,
    replay,
    run_campaign,
    write_rows_csv,
)
from diskclass.errors import ParamOutOfRange, ReplayMismatch
from diskclass.explorer import ALPHA_GRID, FB_GRID, LADDER


@pytest.fixture(scope="module")
def t1_report():
    return run_campaign(CampaignConfig("theorem1", samples=20, seed=11))


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        {"campaign": "theorem5"},
        {"campaign": "theorem1", "samples": 0},
        {"campaign": "theorem1", "order": 4},
        {"campaign": "theorem1", "a2_range": (0.5, 0.1)},
        {"campaign": "theorem1", "a2_range": (0.0, 1.0)},
        {"campaign": "theorem1", "a2_range": (0.5, 2.5)},
        {"campaign": "theorem3", "shrink": 0.0},
        {"campaign": "theorem3", "shrink": 1.0},
        {"campaign": "conjecture", "ladder": (1.5,)},
        {"campaign": "theorem2", "alpha_grid": ()},
    ])
    def test_rejects_bad_parameters(self, kwargs):
        with pytest.raises(ParamOutOfRange):
            CampaignConfig(**kwargs)

    def test_round_trips_through_json(self):
        cfg = CampaignConfig("theorem3", samples=7, seed=42,
                             a2_range=(0.1, 0.9), shrink=0.05)
        clone = CampaignConfig.from_dict(json.loads(json.dumps(cfg.to_dict())))
        assert clone == cfg

    def test_defaults_echo_module_constants(self):
        cfg = CampaignConfig("conjecture")
        assert cfg.ladder == LADDER
        assert cfg.alpha_grid == ALPHA_GRID


class TestPrepends:
    def test_extremal_rows_always_included(self):
        rows = catalog_prepends("theorem1")
        assert rows[:3] == [("koebe", None), ("f1", None), ("f2", None)]
        assert [p["b"] for _, p in rows[3:]] == list(FB_GRID)

    def test_comparison_rows_for_the_alpha_campaign(self):
        ids = [cid for cid, _ in catalog_prepends("theorem2")]
        for cid in ("identity", "half_plane", "log_map", "example_sec1"):
            assert cid in ids


class TestDeterminism:
    def test_thread_count_never_changes_bytes(self):
        cfg = CampaignConfig("theorem1", samples=12, seed=3)
        solo = canonical_json(run_campaign(cfg, threads=1))
        pooled = canonical_json(run_campaign(cfg, threads=4))
        assert solo == pooled

    def test_seed_changes_the_samples(self):
        a = run_campaign(CampaignConfig("theorem1", samples=12, seed=3))
        b = run_campaign(CampaignConfig("theorem1", samples=12, seed=4))
        assert canonical_json(a) != canonical_json(b)


class TestTheorem1Report:
    def test_sample_accounting(self, t1_report):
        rep = t1_report
        assert rep["samples_run"] == 20 + len(catalog_prepends("theorem1"))
        total = rep["accepted"] + rep["rejected"] + rep["inapplicable"]
        assert total == rep["samples_run"]
        # the sampler is tuned to keep the rejection rate moderate
        assert rep["rejected"] < rep["samples_run"] / 2

    def test_worst_cases_are_the_catalog_extremals(self, t1_report):
        worst = t1_report["worst_case"]
        h2 = worst["h2_modulus"]
        assert h2["value"] == pytest.approx(1.0, abs=1e-12)
        assert h2["source"] == "catalog:koebe"
        h3 = worst["h3_modulus"]
        assert h3["value"] == pytest.approx(0.25, abs=1e-12)
        assert h3["source"] == "catalog:f2"

    def test_no_violations_and_tight_slacks(self, t1_report):
        rep = t1_report
        assert rep["status"] == "ok"
        assert rep["violations"] == []
        assert rep["worst_case"]["ps_slack_min"]["value"] >= -1e-9
        assert rep["worst_case"]["h3_profile_slack"]["value"] >= -1e-9
        assert rep["worst_case"]["reduction_gap"]["value"] <= 1e-8

    def test_histogram_covers_accepted_samples(self, t1_report):
        hist = t1_report["histogram"]
        assert hist["quantity"] == "h3_modulus"
        assert sum(hist["counts"]) == t1_report["accepted"]
        assert len(hist["counts"]) == 30

    def test_certificate_shape(self, t1_report):
        cert = t1_report["worst_case"]["h2_modulus"]
        for key in ("config", "index", "seed", "source", "quantity",
                    "value", "margin", "witness", "function"):
            assert key in cert, key
        assert cert["config"]["campaign"] == "theorem1"
        assert cert["margin"] == pytest.approx(cert["value"] - 1.0)
        assert cert["config"] == t1_report["config"]
        assert cert["function"] == {"id": "koebe", "params": {}}


class TestReplay:
    def test_certificate_replays(self, t1_report):
        cert = t1_report["worst_case"]["h2_modulus"]
        out = replay(cert)
        assert out["replayed_value"] == pytest.approx(cert["value"], abs=1e-9)

    def test_tampered_value_is_rejected(self, t1_report):
        cert = dict(t1_report["worst_case"]["h3_modulus"])
        cert["value"] = cert["value"] + 1e-3
        with pytest.raises(ReplayMismatch):
            replay(cert)

    def test_unknown_quantity_is_rejected(self, t1_report):
        cert = dict(t1_report["worst_case"]["h2_modulus"])
        cert["quantity"] = "h9_modulus"
        with pytest.raises(ReplayMismatch):
            replay(cert)


@pytest.fixture(scope="module")
def t2_report():
    return run_campaign(CampaignConfig("theorem2", samples=6, seed=5))


@pytest.fixture(scope="module")
def t3_report():
    return run_campaign(CampaignConfig(
        "theorem3", samples=10, seed=3, a2_range=(0.05, 1.0)))


@pytest.fixture(scope="module")
def conj_report():
    return run_campaign(CampaignConfig(
        "conjecture", samples=20, seed=9, a2_range=(1.0, 2.0)))


class TestTheorem2Report:

    def test_catalog_rows_carry_joint_verdicts(self, t2_report):
        rows = {(r["source"], r["alpha"]): r for r in t2_report["rows"]}
        log1 = rows[("catalog:log_map", 1.0)]
        assert log1["m_verdict"] == "IN" and log1["u_verdict"] == "OUT"
        half = rows[("catalog:half_plane", -1.0)]
        assert half["m_verdict"] == "IN" and half["u_verdict"] == "IN"
        assert half["implication_respected"]

    def test_separating_examples_are_collected(self, t2_report):
        pairs = {(e["source"], e["alpha"]) for e in t2_report["exhibits"]}
        assert ("catalog:log_map", 1.0) in pairs
        assert all(e["m_verdict"] == "IN" and e["u_verdict"] == "OUT"
                   for e in t2_report["exhibits"])

    def test_implication_holds_for_negative_alpha(self, t2_report):
        assert t2_report["violations"] == []
        assert t2_report["status"] == "ok"

    def test_alpha_summary_counts_sampled_rows(self, t2_report):
        sampled_ok = t2_report["accepted"] - len(t2_report["rows"]) // len(ALPHA_GRID)
        for alpha in ALPHA_GRID:
            counts = t2_report["alpha_summary"][f"{alpha:g}"]
            assert sum(counts.values()) == sampled_ok


class TestTheorem3Report:
    def test_zero_second_coefficient_rows_are_inapplicable(self, t3_report):
        assert t3_report["inapplicable"] >= 2  # the two odd catalog extremals

    def test_all_parts_stay_below_one(self, t3_report):
        assert t3_report["status"] == "ok"
        assert t3_report["violations"] == []
        for part in ("a", "b", "c"):
            cert = t3_report["worst_case"][f"part_{part}_sup"]
            assert cert["value"] < 1.0, part
        # part a attains 2r/b = 1 - shrink on every quadratic catalog row
        assert t3_report["worst_case"]["part_a_sup"]["value"] == pytest.approx(
            0.99, abs=1e-9)

    def test_majorizing_profile_is_increasing(self, t3_report):
        assert t3_report["worst_case"]["phi_min_step"]["value"] > 0.0


class TestConjectureReport:
    def test_status_is_evidence_with_no_candidates(self, conj_report):
        assert conj_report["status"] == "evidence"
        assert conj_report["violations"] == []

    def test_ladder_rungs_tracked_separately(self, conj_report):
        for eps in LADDER:
            cert = conj_report["worst_case"][f"ug_sup@{eps:g}"]
            assert cert["value"] <= 1.0 + 1e-9
        tight = conj_report["worst_case"][f"ug_sup@{LADDER[-1]:g}"]
        assert tight["value"] > 0.99  # the bound is approached, not beaten

    def test_tightest_rung_certificate_replays(self, conj_report):
        cert = conj_report["worst_case"][f"ug_sup@{LADDER[-1]:g}"]
        out = replay(cert)
        assert out["replayed_value"] == pytest.approx(cert["value"], abs=1e-9)

    def test_histogram_uses_tightest_rung(self, conj_report):
        assert conj_report["histogram"]["quantity"] == "ug_sup_tightest"


class TestRowExport:
    def test_csv_flattens_per_sample_rows(self):
        rep = run_campaign(CampaignConfig("theorem1", samples=3, seed=1),
                           keep_rows=True)
        buf = io.StringIO()
        n = write_rows_csv(rep, buf)
        assert n == rep["samples_run"]
        lines = buf.getvalue().splitlines()
        assert lines[0] == "index,source,status,error,record"
        assert len(lines) == n + 1

    def test_csv_without_rows_is_header_only(self, t1_report):
        buf = io.StringIO()
        assert write_rows_csv(t1_report, buf) == 0
        assert buf.getvalue().splitlines() == [
            "index,source,status,error,record"]
