"""Circle-grid extremal scans, class verdicts, and radius searches.

For the quantities tested here the extremum over a closed disk sits on the
bounding circle (maximum modulus for sup tests, minimum principle for the
harmonic real parts), so one dense circle scan plus a local golden-section
refinement decides a verdict.  Verdicts are three-way: IN and OUT require
clearing the threshold by a margin delta, everything else is BOUNDARY.
Extremal members of the deviation class, whose sup tends to 1 only as
|z| -> 1, legitimately return BOUNDARY: a scan cannot distinguish sup < 1
from sup = 1, and pretending otherwise would be false precision.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog import DiskFunction
from .errors import PartCPrecondition
from .operators import (
    convex_quotient,
    g_deviation,
    g_starlike_deviation,
    g_transform,
    mocanu_functional,
    starlike_quotient,
    turning_derivative,
    u_operator,
)

# Radius search ceiling: above it the property is reported as holding on the
# whole disk.  Tighter than the membership scan radius so that radii equal
# to 1 are reported within 1e-4.
RADIUS_CAP = 1.0 - 2.0 ** -14

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0

__all__ = [
    "ScanPolicy",
    "MembershipReport",
    "RadiusResult",
    "Theorem2Record",
    "extremal_on_circle",
    "class_functional",
    "test_class",
    "radius_of",
    "theorem3_check",
    "theorem2_check",
    "CLASS_TAGS",
    "RADIUS_CAP",
]


@dataclass(frozen=True)
class ScanPolicy:
    """Parameters of a verdict scan."""

    r_max: float = 1.0 - 2.0 ** -10
    grid: int = 4096
    delta: float = 1e-6
    refine_iters: int = 48

    def to_dict(self):
        return {"r_max": self.r_max, "grid": self.grid, "delta": self.delta,
                "refine_iters": self.refine_iters}


@dataclass(frozen=True)
class MembershipReport:
    class_tag: str
    verdict: str
    extremal_value: float
    witness: complex
    scan_radius: float
    grid_size: int
    margin: float
    boundary_estimate: float

    def to_dict(self):
        return {
            "class": self.class_tag,
            "verdict": self.verdict,
            "extremal_value": self.extremal_value,
            "witness": [self.witness.real, self.witness.imag],
            "scan_radius": self.scan_radius,
            "grid_size": self.grid_size,
            "margin": self.margin,
            "boundary_estimate": self.boundary_estimate,
        }


@dataclass(frozen=True)
class RadiusResult:
    property_tag: str
    radius: float
    bracket: tuple
    tolerance: float
    grid_size: int

    def to_dict(self):
        return {
            "property": self.property_tag,
            "radius": self.radius,
            "bracket": list(self.bracket),
            "tolerance": self.tolerance,
            "grid_size": self.grid_size,
        }


def _golden_refine(fn, lo, hi, iters):
    """Vectorized golden-section maximization over several brackets.

    fn maps an ndarray of angles to real values; lo/hi are bracket arrays.
    Returns (theta, value) arrays for the refined maxima.
    """
    lo = np.asarray(lo, dtype=float).copy()
    hi = np.asarray(hi, dtype=float).copy()
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1 = fn(x1)
    f2 = fn(x2)
    for _ in range(iters):
        right = f1 < f2  # drop the left part where the right probe is larger
        lo = np.where(right, x1, lo)
        hi = np.where(right, hi, x2)
        x1_new = np.where(right, x2, hi - _INV_PHI * (hi - lo))
        x2_new = np.where(right, lo + _INV_PHI * (hi - lo), x1)
        f1_new = np.where(right, f2, 0.0)
        f2_new = np.where(right, 0.0, f1)
        probe = np.where(right, x2_new, x1_new)
        fp = fn(probe)
        f1 = np.where(right, f1_new, fp)
        f2 = np.where(right, fp, f2_new)
        x1, x2 = x1_new, x2_new
    mid = 0.5 * (lo + hi)
    return mid, fn(mid)


def extremal_on_circle(functional, mode: str, radius: float, grid: int = 4096,
                       refine_iters: int = 48):
    """Extremum of |F| (mode 'sup_modulus') or Re F (mode 'inf_real') on a circle.

    Coarse grid scan, then golden-section refinement around the three best
    angles.  Ties within 1e-12 resolve to the smallest angle.  Returns
    (value, witness).
    """
    if mode not in ("sup_modulus", "inf_real"):
        raise ValueError(f"unknown mode {mode!r}")
    theta = 2.0 * np.pi * np.arange(grid) / grid

    def quantity(angles):
        vals = functional(radius * np.exp(1j * np.asarray(angles)))
        q = np.abs(vals) if mode == "sup_modulus" else np.real(vals)
        return q if mode == "sup_modulus" else -q  # maximize internally

    coarse = quantity(theta)
    best = np.argsort(-coarse, kind="stable")[:3]
    step = 2.0 * np.pi / grid
    ref_theta, ref_val = _golden_refine(
        quantity, theta[best] - step, theta[best] + step, refine_iters)

    cand_theta = np.concatenate((theta[best], ref_theta)) % (2.0 * np.pi)
    cand_val = np.concatenate((coarse[best], ref_val))
    order = np.lexsort((cand_theta, -cand_val))
    top = cand_val[order[0]]
    ties = cand_val >= top - 1e-12
    pick = np.argmin(np.where(ties, cand_theta, np.inf))
    witness = radius * np.exp(1j * cand_theta[pick])
    value = cand_val[pick]
    if mode == "inf_real":
        value = -value
    return float(value), complex(witness)


CLASS_TAGS = ("U", "starlike", "convex", "mocanu", "bounded_turning")


def class_functional(f: DiskFunction, class_tag: str, alpha=None):
    """(functional, mode, threshold, kind) for a class tag."""
    if class_tag == "U":
        return u_operator(f)[0], "sup_modulus", 1.0, "sup"
    if class_tag == "starlike":
        return starlike_quotient(f), "inf_real", 0.0, "inf"
    if class_tag == "convex":
        return convex_quotient(f), "inf_real", 0.0, "inf"
    if class_tag == "mocanu":
        if alpha is None:
            raise ValueError("mocanu test requires alpha")
        return mocanu_functional(f, alpha), "inf_real", 0.0, "inf"
    if class_tag == "bounded_turning":
        return turning_derivative(f), "inf_real", 0.0, "inf"
    raise ValueError(f"unknown class tag {class_tag!r}; expected one of {CLASS_TAGS}")


def _verdict_sup(value, estimate, threshold, delta):
    if estimate < threshold - delta:
        return "IN"
    if estimate > threshold + delta:
        return "OUT"
    return "BOUNDARY"


def _verdict_inf(value, delta):
    if value > delta:
        return "IN"
    if value < -delta:
        return "OUT"
    return "BOUNDARY"


def test_class(f: DiskFunction, class_tag: str, policy: ScanPolicy | None = None,
               alpha=None) -> MembershipReport:
    """Three-way verdict for membership of f in the tagged class.

    Sup-modulus tests compare a boundary estimate value/r^2 against the
    threshold: the deviation vanishes to second order at the origin, so by
    the Schwarz lemma the scanned maximum divided by r^2 is a lower bound
    for the boundary supremum.  Without the rescale an extremal member
    whose sup tends to 1 would be declared IN purely because the scan
    circle stops short of |z| = 1.
    """
    policy = policy or ScanPolicy()
    functional, mode, threshold, kind = class_functional(f, class_tag, alpha)
    value, witness = extremal_on_circle(
        functional, mode, policy.r_max, policy.grid, policy.refine_iters)
    if kind == "sup":
        estimate = value / policy.r_max ** 2
        verdict = _verdict_sup(value, estimate, threshold, policy.delta)
    else:
        estimate = value
        verdict = _verdict_inf(value, policy.delta)
    tag = class_tag if alpha is None else f"{class_tag}({alpha:g})"
    return MembershipReport(
        class_tag=tag, verdict=verdict, extremal_value=value, witness=witness,
        scan_radius=policy.r_max, grid_size=policy.grid, margin=policy.delta,
        boundary_estimate=estimate)


def radius_of(f: DiskFunction, class_tag: str, tol: float = 1e-4,
              policy: ScanPolicy | None = None, alpha=None) -> RadiusResult:
    """Largest radius on which the class property holds.

    Sup-modulus predicates are monotone in the radius by the maximum
    principle, so a plain bisection applies: if the property survives up
    to RADIUS_CAP the radius is reported as 1.0 (error at most 2^-14).
    Real-part quotients lose monotonicity once the circle passes an
    interior singularity (a zero of f or f' makes large circles look fine
    again), so the first failure is bracketed by an outward radial walk
    before bisecting; the walk step bounds how narrow a failure dip can be
    and still be detected.
    """
    policy = policy or ScanPolicy()
    functional, mode, threshold, kind = class_functional(f, class_tag, alpha)

    def clears(r):
        value, _ = extremal_on_circle(functional, mode, r, policy.grid,
                                      policy.refine_iters)
        return value < threshold if kind == "sup" else value > threshold

    tag = class_tag if alpha is None else f"{class_tag}({alpha:g})"
    lo = 0.01
    if not clears(lo):
        return RadiusResult(tag, 0.0, (0.0, lo), tol, policy.grid)
    hi = None
    if kind == "sup":
        if clears(RADIUS_CAP):
            return RadiusResult(tag, 1.0, (RADIUS_CAP, 1.0), tol, policy.grid)
        hi = RADIUS_CAP
    else:
        walk = np.linspace(lo, RADIUS_CAP, 96)
        for prev, r in zip(walk, walk[1:]):
            if not clears(r):
                lo, hi = float(prev), float(r)
                break
        if hi is None:
            return RadiusResult(tag, 1.0, (RADIUS_CAP, 1.0), tol, policy.grid)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if clears(mid):
            lo = mid
        else:
            hi = mid
    return RadiusResult(tag, 0.5 * (lo + hi), (lo, hi), tol, policy.grid)


def theorem3_check(f: DiskFunction, part: str, shrink: float = 0.01,
                   policy: ScanPolicy | None = None,
                   allow_large_a2: bool = False) -> MembershipReport:
    """Deviation-transform check on the circle |z| = (1 - shrink) |a2|/2.

    part 'a': sup |g' - 1|; part 'b': sup |z g'/g - 1|; part 'c': sup of the
    deviation |U_g|.  All three are compared against 1.  Part 'c' is proved
    only for |a2| <= 1; probing beyond that needs allow_large_a2=True.
    """
    policy = policy or ScanPolicy()
    if part not in ("a", "b", "c"):
        raise ValueError(f"part must be 'a', 'b' or 'c', not {part!r}")
    if part == "c" and abs(f.a2) > 1.0 + 1e-12 and not allow_large_a2:
        raise PartCPrecondition(
            f"|a2| = {abs(f.a2):.6g} > 1; pass allow_large_a2=True to probe")
    if part == "a":
        functional = g_deviation(f)
    elif part == "b":
        functional = g_starlike_deviation(f)
    else:
        functional = u_operator(g_transform(f))[0]
    radius = (1.0 - shrink) * abs(f.a2) / 2.0
    value, witness = extremal_on_circle(
        functional, "sup_modulus", radius, policy.grid, policy.refine_iters)
    verdict = _verdict_sup(value, value, 1.0, policy.delta)
    return MembershipReport(
        class_tag=f"theorem3.{part}", verdict=verdict, extremal_value=value,
        witness=witness, scan_radius=radius, grid_size=policy.grid,
        margin=policy.delta, boundary_estimate=value)


@dataclass(frozen=True)
class Theorem2Record:
    """Joint verdicts for the alpha-convex family versus the deviation class.

    implication_respected is False only in the impossible configuration:
    alpha <= -1, f accepted by the alpha-convex test, yet rejected by the
    deviation test.
    """

    alpha: float
    m_alpha: MembershipReport
    u: MembershipReport
    implication_respected: bool

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "in_m_alpha": self.m_alpha.to_dict(),
            "in_u": self.u.to_dict(),
            "implication_respected": self.implication_respected,
        }


def theorem2_check(f: DiskFunction, alpha: float,
                   policy: ScanPolicy | None = None) -> Theorem2Record:
    policy = policy or ScanPolicy()
    m_alpha = test_class(f, "mocanu", policy, alpha=alpha)
    u = test_class(f, "U", policy)
    violated = alpha <= -1.0 and m_alpha.verdict == "IN" and u.verdict == "OUT"
    return Theorem2Record(alpha=float(alpha), m_alpha=m_alpha, u=u,
                          implication_respected=not violated)
