"""Seeded randomized campaigns over certified members of the deviation class.

Four campaign kinds share one pipeline: draw (a2, generator) pairs from a
per-index RNG stream, build certified members, evaluate the campaign's
quantities, and aggregate worst cases, violations, and a histogram into a
report whose canonical JSON is independent of the worker thread count.

Campaign kinds:

* ``theorem1``    second and third Hankel determinant bounds (1 and 1/4),
                  coefficient-constraint slacks, profile majorization;
* ``theorem2``    joint verdicts for the alpha-convex family versus the
                  deviation class across an alpha grid;
* ``theorem3``    normalized transform g on the circle |z| = (1-shrink)|a2|/2:
                  sup |g' - 1|, sup |z g'/g - 1|, sup of the deviation of g,
                  and monotonicity of the majorizing profile;
* ``conjecture``  the unproved range 1 < |a2| <= 2: sup of the deviation of g
                  on a ladder of circles approaching |z| = |a2|/2.

The conjecture campaign never claims more than "evidence"; any value past
1 + delta becomes a replayable counterexample certificate and flips the
status to "counterexample-candidate".
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from .catalog import (
    DEFAULT_ORDER,
    DiskFunction,
    SchwarzGenerator,
    _sample_generator,
    build_member,
    make_catalog,
    seed_key,
)
from .errors import (
    DiskClassError,
    ParamOutOfRange,
    PartCPrecondition,
    ReplayMismatch,
    SecondCoefficientVanishes,
)
from .hankel import h3_profile_bound, hankel_det, prokhorov_szynal_check, reduced_h2, reduced_h3
from .membership import ScanPolicy, extremal_on_circle, test_class, theorem3_check
from .operators import decompose, g_transform, phi_profile, u_operator
from .serialize import canonical_json, complex_pair

CAMPAIGNS = ("theorem1", "theorem2", "theorem3", "conjecture")
LADDER = (0.1, 0.01, 0.001)
ALPHA_GRID = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0)
FB_GRID = tuple(0.25 * k for k in range(1, 9))
REPLAY_TOL = 1e-9

__all__ = [
    "CampaignConfig",
    "CAMPAIGNS",
    "LADDER",
    "ALPHA_GRID",
    "FB_GRID",
    "catalog_prepends",
    "run_campaign",
    "replay",
    "write_rows_csv",
]


@dataclass(frozen=True)
class CampaignConfig:
    campaign: str
    samples: int = 100
    seed: int = 0
    order: int = DEFAULT_ORDER
    policy: ScanPolicy = field(default_factory=ScanPolicy)
    a2_range: tuple = (0.05, 2.0)
    shrink: float = 0.01
    ladder: tuple = LADDER
    alpha_grid: tuple = ALPHA_GRID

    def __post_init__(self):
        if self.campaign not in CAMPAIGNS:
            raise ParamOutOfRange(
                f"campaign must be one of {CAMPAIGNS}, not {self.campaign!r}")
        if int(self.samples) < 1:
            raise ParamOutOfRange("samples must be at least 1")
        if int(self.order) < 8:
            raise ParamOutOfRange("series order below 8 is useless here")
        lo, hi = self.a2_range
        if not (0.0 < lo <= hi <= 2.0):
            raise ParamOutOfRange(
                f"a2_range must satisfy 0 < lo <= hi <= 2, got ({lo}, {hi})")
        if not 0.0 < self.shrink < 1.0:
            raise ParamOutOfRange(f"shrink must lie in (0, 1), got {self.shrink}")
        if not self.ladder or any(not 0.0 < e < 1.0 for e in self.ladder):
            raise ParamOutOfRange("ladder entries must lie in (0, 1)")
        if not self.alpha_grid:
            raise ParamOutOfRange("alpha_grid must not be empty")
        object.__setattr__(self, "samples", int(self.samples))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "a2_range", (float(lo), float(hi)))
        object.__setattr__(self, "ladder", tuple(float(e) for e in self.ladder))
        object.__setattr__(self, "alpha_grid",
                           tuple(float(a) for a in self.alpha_grid))

    def to_dict(self):
        return {
            "campaign": self.campaign,
            "samples": self.samples,
            "seed": self.seed,
            "order": self.order,
            "policy": self.policy.to_dict(),
            "a2_range": list(self.a2_range),
            "shrink": self.shrink,
            "ladder": list(self.ladder),
            "alpha_grid": list(self.alpha_grid),
        }

    @classmethod
    def from_dict(cls, data) -> "CampaignConfig":
        data = dict(data)
        if "policy" in data:
            data["policy"] = ScanPolicy(**data["policy"])
        for key in ("a2_range", "ladder", "alpha_grid"):
            if key in data:
                data[key] = tuple(data[key])
        return cls(**data)


def catalog_prepends(campaign: str):
    """(id, params) rows force-included ahead of the random samples."""
    rows = [("koebe", None), ("f1", None), ("f2", None)]
    rows += [("fb", {"b": b}) for b in FB_GRID]
    if campaign == "theorem2":
        rows += [("identity", None), ("half_plane", None), ("log_map", None),
                 ("example_sec1", None)]
    return rows


def _materialize(cfg: CampaignConfig, prepends, index: int):
    """Function number `index` of the campaign: catalog row or fresh sample.

    Sampling draws |a2| uniformly from a2_range and its phase uniformly.
    For |a2| > 1 the generator is the constant whose quadratic quotient has
    both roots on or outside the unit circle (the only kind guaranteed
    certifiable there); for |a2| <= 1 it is an even split between that
    paired-root family and an independent generator of a random kind.
    """
    if index < len(prepends):
        cid, params = prepends[index]
        label = cid if not params else f"{cid}(b={params['b']:g})"
        return f"catalog:{label}", make_catalog(cid, params, order=cfg.order)
    rng = np.random.default_rng(seed_key(cfg.seed, index))
    lo, hi = cfg.a2_range
    t = float(rng.uniform(lo, hi))
    chi = float(rng.uniform(0.0, 2.0 * np.pi))
    a2 = t * np.exp(1j * chi)
    if t > 1.0 or rng.random() < 0.5:
        cap = float(np.sqrt(max(1.0 - 0.25 * t * t, 0.0)))
        mu = float(rng.uniform(0.0, cap))
        gen = SchwarzGenerator.constant(
            -np.exp(2j * chi) * (0.25 * t * t + mu * mu), order=cfg.order)
    else:
        kind = ("scaled_unimodular", "blaschke_product",
                "random_polynomial")[int(rng.integers(3))]
        degree = (int(rng.integers(1, 5)) if kind == "blaschke_product"
                  else int(rng.integers(0, 17)))
        gen = _sample_generator(rng, kind, degree)
    return "sampled", build_member(a2, gen, order=cfg.order)


# ---------------------------------------------------------------------------
# per-sample evaluation
# ---------------------------------------------------------------------------
def _eval_theorem1(f: DiskFunction, cfg: CampaignConfig) -> dict:
    dec = decompose(f)
    h2 = hankel_det(f, 2, 2)
    h3 = hankel_det(f, 3, 1)
    red2 = reduced_h2(dec.a2, dec.c)
    red3 = reduced_h3(dec.c)
    ps = prokhorov_szynal_check(*dec.c)
    return {
        "h2_modulus": h2.modulus,
        "h3_modulus": h3.modulus,
        "reduction_gap": max(abs(h2.value - red2), abs(h3.value - red3)),
        "ps_slack_min": min(ps.slack1, ps.slack2, ps.slack3),
        "h3_profile_slack": h3_profile_bound(abs(dec.c[0])) - abs(red3),
    }


def _eval_theorem2(f: DiskFunction, cfg: CampaignConfig) -> dict:
    u_rep = test_class(f, "U", cfg.policy)
    rows = []
    for alpha in cfg.alpha_grid:
        m_rep = test_class(f, "mocanu", cfg.policy, alpha=alpha)
        violated = (alpha <= -1.0 and m_rep.verdict == "IN"
                    and u_rep.verdict == "OUT")
        rows.append({
            "alpha": alpha,
            "m_verdict": m_rep.verdict,
            "m_extremal": m_rep.extremal_value,
            "u_verdict": u_rep.verdict,
            "u_estimate": u_rep.boundary_estimate,
            "implication_respected": not violated,
        })
    return {
        "rows": rows,
        "u_estimate": u_rep.boundary_estimate,
        "u_witness": complex_pair(u_rep.witness),
    }


def _eval_theorem3(f: DiskFunction, cfg: CampaignConfig) -> dict:
    out = {}
    for part in ("a", "b"):
        rep = theorem3_check(f, part, cfg.shrink, cfg.policy)
        out[f"part_{part}_sup"] = rep.extremal_value
        out[f"part_{part}_witness"] = complex_pair(rep.witness)
        out["radius"] = rep.scan_radius
    try:
        rep = theorem3_check(f, "c", cfg.shrink, cfg.policy)
    except PartCPrecondition:
        out["part_c_sup"] = None
        out["part_c_witness"] = None
        out["phi_min_step"] = None
        return out
    out["part_c_sup"] = rep.extremal_value
    out["part_c_witness"] = complex_pair(rep.witness)
    ts = np.linspace(0.0, out["radius"], 33)
    vals = np.array([phi_profile(t, out["radius"], abs(f.a2)) for t in ts])
    out["phi_min_step"] = float(np.diff(vals).min())
    return out


def _eval_conjecture(f: DiskFunction, cfg: CampaignConfig) -> dict:
    dev = u_operator(g_transform(f))[0]
    rungs = []
    for eps in cfg.ladder:
        radius = (1.0 - eps) * abs(f.a2) / 2.0
        value, witness = extremal_on_circle(
            dev, "sup_modulus", radius, cfg.policy.grid, cfg.policy.refine_iters)
        rungs.append({"eps": eps, "radius": radius, "sup": value,
                      "witness": complex_pair(witness)})
    return {"rungs": rungs}


_EVALUATORS = {
    "theorem1": _eval_theorem1,
    "theorem2": _eval_theorem2,
    "theorem3": _eval_theorem3,
    "conjecture": _eval_conjecture,
}


def _run_one(cfg: CampaignConfig, prepends, index: int) -> dict:
    try:
        source, f = _materialize(cfg, prepends, index)
    except DiskClassError as exc:
        return {"index": index, "source": "sampled", "status": "rejected",
                "error": type(exc).__name__}
    try:
        record = _EVALUATORS[cfg.campaign](f, cfg)
    except (SecondCoefficientVanishes, PartCPrecondition) as exc:
        return {"index": index, "source": source, "status": "inapplicable",
                "error": type(exc).__name__}
    except DiskClassError as exc:
        return {"index": index, "source": source, "status": "rejected",
                "error": type(exc).__name__}
    return {"index": index, "source": source, "status": "ok", "error": None,
            "record": record, "function": f.to_spec()}


# ---------------------------------------------------------------------------
# aggregation
# ---------------------------------------------------------------------------
def _certificate(cfg, row, quantity, value, threshold=None, witness=None,
                 radius=None, alpha=None):
    return {
        "index": row["index"],
        "source": row["source"],
        "seed": cfg.seed,
        "quantity": quantity,
        "value": float(value),
        "margin": None if threshold is None else float(value - threshold),
        "witness": witness,
        "radius": radius,
        "alpha": alpha,
        "function": row["function"],
        "config": cfg.to_dict(),
    }


class _Extremum:
    """Keeps the extremal certificate for one quantity; first index wins ties."""

    def __init__(self, largest: bool):
        self.largest = largest
        self.cert = None

    def offer(self, value, make_cert):
        if value is None:
            return
        value = float(value)
        if self.cert is None or (value > self.cert["value"] if self.largest
                                 else value < self.cert["value"]):
            self.cert = make_cert()


def _histogram(values, lo, hi, bins):
    edges = np.linspace(lo, hi, bins + 1)
    counts = np.histogram(np.clip(np.asarray(values, dtype=float), lo, hi),
                          bins=edges)[0] if values else np.zeros(bins, int)
    return {"edges": [float(e) for e in edges], "counts": [int(c) for c in counts]}


def _aggregate(cfg: CampaignConfig, prepends, results) -> dict:
    delta = cfg.policy.delta
    counts = {"ok": 0, "rejected": 0, "inapplicable": 0}
    violations = []
    worst = {}
    hist_values = []
    extra = {}

    def track(name, largest=True):
        if name not in worst:
            worst[name] = _Extremum(largest)
        return worst[name]

    if cfg.campaign == "theorem2":
        extra["rows"] = []
        extra["exhibits"] = []
        extra["alpha_summary"] = {
            f"{a:g}": {"IN": 0, "OUT": 0, "BOUNDARY": 0} for a in cfg.alpha_grid}

    for row in results:
        counts[row["status"]] += 1
        if row["status"] != "ok":
            continue
        rec = row["record"]

        if cfg.campaign == "theorem1":
            for name, largest, threshold in (
                    ("h2_modulus", True, 1.0),
                    ("h3_modulus", True, 0.25),
                    ("reduction_gap", True, None),
                    ("ps_slack_min", False, 0.0),
                    ("h3_profile_slack", False, 0.0)):
                value = rec[name]
                track(name, largest).offer(
                    value, partial(_certificate, cfg, row, name, value, threshold))
                exceeded = (value > threshold + delta if largest and threshold is not None
                            else value < -delta if not largest else False)
                if name == "reduction_gap":
                    exceeded = value > 1e-8
                if exceeded:
                    violations.append(_certificate(cfg, row, name, value, threshold))
            hist_values.append(rec["h3_modulus"])

        elif cfg.campaign == "theorem2":
            track("u_boundary_estimate").offer(
                rec["u_estimate"],
                partial(_certificate, cfg, row, "u_boundary_estimate",
                        rec["u_estimate"], None, rec["u_witness"]))
            hist_values.append(rec["u_estimate"])
            for r in rec["rows"]:
                full = {"index": row["index"], "source": row["source"], **r}
                if row["source"].startswith("catalog:"):
                    extra["rows"].append(full)
                else:
                    extra["alpha_summary"][f"{r['alpha']:g}"][r["m_verdict"]] += 1
                if r["m_verdict"] == "IN" and r["u_verdict"] == "OUT":
                    extra["exhibits"].append({**full, "function": row["function"]})
                if not r["implication_respected"]:
                    violations.append(_certificate(
                        cfg, row, "u_boundary_estimate", rec["u_estimate"],
                        1.0, rec["u_witness"], alpha=r["alpha"]))

        elif cfg.campaign == "theorem3":
            for part in ("a", "b", "c"):
                value = rec[f"part_{part}_sup"]
                if value is None:
                    continue
                name = f"part_{part}_sup"
                track(name).offer(value, partial(
                    _certificate, cfg, row, name, value, 1.0,
                    rec[f"part_{part}_witness"], rec["radius"]))
                if value > 1.0 + delta:
                    violations.append(_certificate(
                        cfg, row, name, value, 1.0,
                        rec[f"part_{part}_witness"], rec["radius"]))
            if rec["phi_min_step"] is not None:
                track("phi_min_step", largest=False).offer(
                    rec["phi_min_step"], partial(
                        _certificate, cfg, row, "phi_min_step",
                        rec["phi_min_step"], 0.0, None, rec["radius"]))
                if rec["phi_min_step"] < -1e-12:
                    violations.append(_certificate(
                        cfg, row, "phi_min_step", rec["phi_min_step"], 0.0,
                        None, rec["radius"]))
            hist_values.append(max(v for v in
                                   (rec["part_a_sup"], rec["part_b_sup"],
                                    rec["part_c_sup"]) if v is not None))

        else:  # conjecture
            for rung in rec["rungs"]:
                name = f"ug_sup@{rung['eps']:g}"
                track(name).offer(rung["sup"], partial(
                    _certificate, cfg, row, name, rung["sup"], 1.0,
                    rung["witness"], rung["radius"]))
                if rung["sup"] > 1.0 + delta:
                    violations.append(_certificate(
                        cfg, row, name, rung["sup"], 1.0,
                        rung["witness"], rung["radius"]))
            hist_values.append(rec["rungs"][-1]["sup"])

    hist_ranges = {
        "theorem1": ("h3_modulus", 0.0, 0.3, 30),
        "theorem2": ("u_boundary_estimate", 0.0, 4.0, 40),
        "theorem3": ("max_part_sup", 0.0, 1.2, 30),
        "conjecture": ("ug_sup_tightest", 0.0, 1.1, 22),
    }
    hq, lo, hi, bins = hist_ranges[cfg.campaign]

    if cfg.campaign == "conjecture":
        status = "counterexample-candidate" if violations else "evidence"
    else:
        status = "violation" if violations else "ok"

    report = {
        "campaign": cfg.campaign,
        "config": cfg.to_dict(),
        "catalog_prepends": [r["source"] for r in results
                             if r["source"].startswith("catalog:")],
        "samples_run": len(results),
        "accepted": counts["ok"],
        "rejected": counts["rejected"],
        "inapplicable": counts["inapplicable"],
        "worst_case": {name: ext.cert for name, ext in sorted(worst.items())
                       if ext.cert is not None},
        "violations": violations,
        "histogram": {"quantity": hq, **_histogram(hist_values, lo, hi, bins)},
        "status": status,
    }
    report.update(extra)
    return report


def run_campaign(cfg: CampaignConfig, threads: int = 1,
                 keep_rows: bool = False) -> dict:
    """Execute the campaign and return its report as a plain dict.

    The report is deterministic for a given config: per-sample randomness
    comes only from (seed, index) streams and aggregation runs in index
    order, so the thread count changes wall time, never bytes.  With
    keep_rows=True the raw per-sample results are attached under
    "per_sample" (useful for CSV export; not part of the canonical report).
    """
    prepends = catalog_prepends(cfg.campaign)
    indices = range(len(prepends) + cfg.samples)
    worker = partial(_run_one, cfg, prepends)
    if threads <= 1:
        results = [worker(i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=int(threads)) as pool:
            results = list(pool.map(worker, indices))
    report = _aggregate(cfg, prepends, results)
    if keep_rows:
        report["per_sample"] = results
    return report


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------
def _scan_functional(f, quantity):
    from .operators import g_deviation, g_starlike_deviation

    if quantity == "part_a_sup":
        return g_deviation(f)
    if quantity == "part_b_sup":
        return g_starlike_deviation(f)
    return u_operator(g_transform(f))[0]


def _evaluate_quantity(f: DiskFunction, cert: dict) -> float:
    quantity = cert["quantity"]
    policy = ScanPolicy(**cert["config"]["policy"])
    if quantity == "h2_modulus":
        return hankel_det(f, 2, 2).modulus
    if quantity == "h3_modulus":
        return hankel_det(f, 3, 1).modulus
    if quantity == "reduction_gap":
        dec = decompose(f)
        return max(abs(hankel_det(f, 2, 2).value - reduced_h2(dec.a2, dec.c)),
                   abs(hankel_det(f, 3, 1).value - reduced_h3(dec.c)))
    if quantity == "ps_slack_min":
        ps = prokhorov_szynal_check(*decompose(f).c)
        return min(ps.slack1, ps.slack2, ps.slack3)
    if quantity == "h3_profile_slack":
        dec = decompose(f)
        return h3_profile_bound(abs(dec.c[0])) - abs(reduced_h3(dec.c))
    if quantity == "u_boundary_estimate":
        return test_class(f, "U", policy).boundary_estimate
    if quantity == "phi_min_step":
        ts = np.linspace(0.0, cert["radius"], 33)
        vals = np.array([phi_profile(t, cert["radius"], abs(f.a2)) for t in ts])
        return float(np.diff(vals).min())
    if quantity.startswith(("part_", "ug_sup")):
        value, _ = extremal_on_circle(
            _scan_functional(f, quantity), "sup_modulus", cert["radius"],
            policy.grid, policy.refine_iters)
        return value
    raise ReplayMismatch(f"certificate carries unknown quantity {quantity!r}")


def replay(cert: dict) -> dict:
    """Rebuild the certified function and re-evaluate its quantity.

    The reconstruction goes through the stored generator parameters, not
    the RNG, so it survives RNG implementation changes.  A mismatch beyond
    1e-9 raises ReplayMismatch: that signals a determinism bug and must
    fail the suite.
    """
    f = DiskFunction.from_spec(cert["function"],
                               order=cert["config"]["order"])
    value = _evaluate_quantity(f, cert)
    if abs(value - cert["value"]) > REPLAY_TOL:
        raise ReplayMismatch(
            f"{cert['quantity']} replayed to {value!r}, certificate says "
            f"{cert['value']!r} (index {cert['index']}, seed {cert['seed']})")
    return {**cert, "replayed_value": float(value)}


def write_rows_csv(report: dict, fileobj) -> int:
    """Flatten per-sample rows (run_campaign(..., keep_rows=True)) to CSV."""
    import csv

    rows = report.get("per_sample") or []
    writer = csv.writer(fileobj)
    writer.writerow(["index", "source", "status", "error", "record"])
    for row in rows:
        writer.writerow([row["index"], row["source"], row["status"],
                         row["error"] or "",
                         canonical_json(row.get("record", {}))])
    return len(rows)
