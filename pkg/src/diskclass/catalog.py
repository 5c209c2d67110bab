"""Named disk functions, Schwarz-bounded generators, and certified builders.

Every function handled by the toolkit is normalized (f(0) = 0, f'(0) = 1)
and analytic on the open unit disk.  Internally each one is carried in two
forms at once:

* closed-form evaluators for the reciprocal quotient h = z/f and its first
  two derivatives (f, f', f'' are derived from these), which drive boundary
  scans, and
* a truncated Taylor series, which drives coefficient work.

The quotient always admits the normal form h(z) = 1 - a2 z - z omega1(z)
where a2 is the second Taylor coefficient of f and omega1 is analytic with
omega1(0) = 0.  When |omega1'| <= 1 on the disk (omega1' = psi for a
Schwarz-bounded generator psi) the function belongs to the bounded
reciprocal-deviation class tested by the membership module.
"""
from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import (
    BoundaryTooClose,
    DenominatorVanishes,
    EvalNearZeroDenominator,
    ParamOutOfRange,
    UnknownId,
)
from .series import DEFAULT_ORDER, ComplexSeries

# Certification circle for zero-freeness of h, and its sampling density.
CERT_RADIUS = 1.0 - 2.0 ** -10
CERT_SAMPLES = 8192
# Below this |h| on the certification circle the winding number is refused.
MIN_BOUNDARY_ABS = 1e-9
# Pointwise functional guard: denominators must exceed this in modulus.
EPS_DENOM = 1e-12

__all__ = [
    "DiskFunction",
    "SchwarzGenerator",
    "make_catalog",
    "catalog_ids",
    "sample_schwarz",
    "build_member",
    "count_zeros_on_disk",
    "CERT_RADIUS",
    "CERT_SAMPLES",
]


def _as_1d(z):
    zz = np.asarray(z, dtype=np.complex128)
    return np.atleast_1d(zz), zz.ndim == 0


def _unwrap(values, scalar):
    return complex(values[0]) if scalar else values


def _guard(values, points, what):
    small = np.abs(values) <= EPS_DENOM
    if np.any(small):
        bad = complex(np.asarray(points)[small][0])
        raise EvalNearZeroDenominator(
            f"{what} denominator below {EPS_DENOM} at z = {bad!r}", point=bad)


def _polyder(c):
    d = npp.polyder(np.asarray(c, dtype=np.complex128))
    return d if d.size else np.zeros(1, dtype=np.complex128)


# ---------------------------------------------------------------------------
# kernels: vectorized closed forms for h, h', h'' and the omega data
# ---------------------------------------------------------------------------
class _Kernel:
    """Closed-form accessors shared by every representation of h = z/f.

    Subclasses must provide vectorized ``h``, ``h1``, ``h2`` on 1-d complex
    arrays plus an ``a2`` attribute.  The omega accessors default to
    algebraic rearrangements of h; those divide by powers of z, so for
    |z| below ``mask_radius`` they fall back to series evaluation (the
    subclass supplies ``series_h`` for that purpose).
    """

    mask_radius = 1e-3
    direct_f = None  # optional (f, f1, f2) closed forms

    # -- series fallbacks built lazily from series_h ---------------------
    def _omega_series(self):
        try:
            return self._om_cache
        except AttributeError:
            pass
        h = self.series_h.coeffs
        om = np.zeros(max(h.size - 1, 1), dtype=np.complex128)
        om[1:] = -h[2:]
        s0 = ComplexSeries(om)
        s1 = s0.derivative()
        self._om_cache = (s0, s1, s1.derivative())
        return self._om_cache

    def _masked(self, z, closed, which):
        out = np.empty(z.shape, dtype=np.complex128)
        near = np.abs(z) < self.mask_radius
        if near.any():
            out[near] = self._omega_series()[which](z[near])
        far = ~near
        if far.any():
            out[far] = closed(z[far])
        return out

    def omega1(self, z):
        return self._masked(z, lambda w: (1.0 - self.a2 * w - self.h(w)) / w, 0)

    def psi(self, z):
        return self._masked(
            z, lambda w: (self.h(w) - 1.0 - w * self.h1(w)) / w ** 2, 1)

    def psi1(self, z):
        def closed(w):
            return (-w ** 2 * self.h2(w) - 2.0 * (self.h(w) - 1.0)
                    + 2.0 * w * self.h1(w)) / w ** 3
        return self._masked(z, closed, 2)


class _PolyKernel(_Kernel):
    """h is an explicit polynomial; every accessor is exact."""

    def __init__(self, h_coeffs):
        h = np.asarray(h_coeffs, dtype=np.complex128)
        self.h_poly = h
        self.h1_poly = _polyder(h)
        self.h2_poly = _polyder(self.h1_poly)
        self.a2 = -complex(h[1]) if h.size > 1 else 0j
        om = np.zeros(max(h.size - 1, 1), dtype=np.complex128)
        om[1:] = -h[2:]
        self.om_poly = om
        self.psi_poly = _polyder(om)
        self.psi1_poly = _polyder(self.psi_poly)

    def h(self, z):
        return npp.polyval(z, self.h_poly)

    def h1(self, z):
        return npp.polyval(z, self.h1_poly)

    def h2(self, z):
        return npp.polyval(z, self.h2_poly)

    def omega1(self, z):
        return npp.polyval(z, self.om_poly)

    def psi(self, z):
        return npp.polyval(z, self.psi_poly)

    def psi1(self, z):
        return npp.polyval(z, self.psi1_poly)


class _BlaschkeKernel(_Kernel):
    """h = 1 - a2 z - z omega1 with omega1 integrated in closed form.

    psi is a finite Blaschke product scaled by rho e^{i theta}.  Partial
    fractions turn its primitive into a polynomial plus logarithms
    log(1 - conj(alpha_k) z), which stay on the principal branch for
    |alpha_k| < 1 and |z| <= 1.
    """

    def __init__(self, a2, alphas, rho, theta):
        self.a2 = complex(a2)
        alphas = np.asarray(alphas, dtype=np.complex128)
        scale = rho * np.exp(1j * theta)
        self.p_poly = scale * npp.polyfromroots(alphas)
        q = np.ones(1, dtype=np.complex128)
        for a in alphas:
            q = npp.polymul(q, np.array([1.0, -np.conj(a)], dtype=np.complex128))
        self.q_poly = q
        self.q1_poly = _polyder(q)
        quo, rem = npp.polydiv(self.p_poly, q)
        self.quo_int = npp.polyint(quo)
        self.conj_alphas = np.conj(alphas)
        poles = 1.0 / self.conj_alphas
        self.residues = npp.polyval(poles, rem) / npp.polyval(poles, self.q1_poly)

    # psi and its derivative as a plain rational function
    def psi(self, z):
        return npp.polyval(z, self.p_poly) / npp.polyval(z, self.q_poly)

    def psi1(self, z):
        q = npp.polyval(z, self.q_poly)
        return (npp.polyval(z, _polyder(self.p_poly)) * q
                - npp.polyval(z, self.p_poly) * npp.polyval(z, self.q1_poly)) / q ** 2

    def omega1(self, z):
        acc = npp.polyval(z, self.quo_int)
        for bk, ca in zip(self.residues, self.conj_alphas):
            acc = acc + bk * np.log(1.0 - ca * z)
        return acc

    def h(self, z):
        return 1.0 - self.a2 * z - z * self.omega1(z)

    def h1(self, z):
        return -self.a2 - self.omega1(z) - z * self.psi(z)

    def h2(self, z):
        return -2.0 * self.psi(z) - z * self.psi1(z)


class _LogQuotientKernel(_Kernel):
    """Kernel for f(z) = -log(1 - z), the convex-but-not-bounded witness."""

    a2 = 0.5

    def __init__(self, order):
        f = np.zeros(order + 1, dtype=np.complex128)
        f[1:] = 1.0 / np.arange(1, order + 1)
        self.series_f = ComplexSeries(f)
        self.series_h = self.series_f.div_z().reciprocal()
        self._h1_series = self.series_h.derivative()
        self._h2_series = self._h1_series.derivative()
        self.direct_f = (
            lambda z: -np.log(1.0 - z),
            lambda z: 1.0 / (1.0 - z),
            lambda z: (1.0 - z) ** -2.0,
        )

    def _split(self, z, closed, small_series):
        out = np.empty(z.shape, dtype=np.complex128)
        near = np.abs(z) < self.mask_radius
        if near.any():
            out[near] = small_series(z[near])
        far = ~near
        if far.any():
            out[far] = closed(z[far])
        return out

    def h(self, z):
        return self._split(z, lambda w: w / self.direct_f[0](w), self.series_h)

    def h1(self, z):
        def closed(w):
            fv = self.direct_f[0](w)
            return (fv - w * self.direct_f[1](w)) / fv ** 2
        return self._split(z, closed, self._h1_series)

    def h2(self, z):
        def closed(w):
            fv, f1v, f2v = (g(w) for g in self.direct_f)
            return (-w * f2v * fv - 2.0 * f1v * (fv - w * f1v)) / fv ** 3
        return self._split(z, closed, self._h2_series)


class _GTransformKernel(_Kernel):
    """Quotient data for g = ((z/f) - 1)/(-a2), built on the parent kernel.

    With omega1 the parent's deviation primitive, z/g = a2/(a2 + omega1(z)),
    which is smooth at the origin, so no masking is needed for h itself.
    """

    def __init__(self, parent, parent_a2, series_g):
        self.parent = parent
        self.parent_a2 = complex(parent_a2)
        self.series_h = series_g.div_z().reciprocal()
        self.a2 = complex(series_g.coefficient(2))

    def _den(self, z):
        den = self.parent_a2 + self.parent.omega1(z)
        _guard(den, z, "a2 + omega1")
        return den

    def h(self, z):
        return self.parent_a2 / self._den(z)

    def h1(self, z):
        return -self.parent_a2 * self.parent.psi(z) / self._den(z) ** 2

    def h2(self, z):
        den = self._den(z)
        psi = self.parent.psi(z)
        return -self.parent_a2 * (self.parent.psi1(z) * den - 2.0 * psi ** 2) / den ** 3


# ---------------------------------------------------------------------------
# DiskFunction
# ---------------------------------------------------------------------------
class DiskFunction:
    """A normalized analytic function on the unit disk.

    Combines a closed-form kernel for the quotient h = z/f with a truncated
    Taylor series of f.  ``eval_f``/``eval_f1``/``eval_f2`` accept scalars or
    ndarrays and evaluate through the kernel (f = z/h and derivatives),
    except for entries that carry direct closed forms.
    """

    def __init__(self, fid, params, kernel, series, check_normalized=True):
        self.id = fid
        self.params = params
        self.kernel = kernel
        self.series = series
        if check_normalized:
            if abs(series.coefficient(0)) > 1e-9 or abs(series.coefficient(1) - 1.0) > 1e-9:
                raise ValueError(f"series of {fid!r} is not normalized")
        self.a2 = complex(series.coefficient(2))

    def __repr__(self):
        return f"DiskFunction(id={self.id!r}, params={self.params!r}, a2={self.a2:.6g})"

    # -- closed-form evaluation ----------------------------------------
    def eval_f(self, z):
        zz, scalar = _as_1d(z)
        if self.kernel.direct_f is not None:
            return _unwrap(self.kernel.direct_f[0](zz), scalar)
        hv = self.kernel.h(zz)
        _guard(hv, zz, "z/f")
        return _unwrap(zz / hv, scalar)

    def eval_f1(self, z):
        zz, scalar = _as_1d(z)
        if self.kernel.direct_f is not None:
            return _unwrap(self.kernel.direct_f[1](zz), scalar)
        hv = self.kernel.h(zz)
        _guard(hv, zz, "f'")
        return _unwrap((hv - zz * self.kernel.h1(zz)) / hv ** 2, scalar)

    def eval_f2(self, z):
        zz, scalar = _as_1d(z)
        if self.kernel.direct_f is not None:
            return _unwrap(self.kernel.direct_f[2](zz), scalar)
        hv = self.kernel.h(zz)
        _guard(hv, zz, "f''")
        h1v = self.kernel.h1(zz)
        val = (-zz * self.kernel.h2(zz) * hv - 2.0 * h1v * (hv - zz * h1v)) / hv ** 3
        return _unwrap(val, scalar)

    # -- quotient and omega accessors ------------------------------------
    def h(self, z):
        zz, scalar = _as_1d(z)
        return _unwrap(self.kernel.h(zz), scalar)

    def h1(self, z):
        zz, scalar = _as_1d(z)
        return _unwrap(self.kernel.h1(zz), scalar)

    def h2(self, z):
        zz, scalar = _as_1d(z)
        return _unwrap(self.kernel.h2(zz), scalar)

    def omega1(self, z):
        zz, scalar = _as_1d(z)
        return _unwrap(self.kernel.omega1(zz), scalar)

    def psi(self, z):
        zz, scalar = _as_1d(z)
        return _unwrap(self.kernel.psi(zz), scalar)

    def psi_prime(self, z):
        zz, scalar = _as_1d(z)
        return _unwrap(self.kernel.psi1(zz), scalar)

    # -- serialization ----------------------------------------------------
    def to_spec(self) -> dict:
        if self.id == "sampled":
            gen = self.params["generator"]
            return {
                "id": "sampled",
                "params": {
                    "a2": [float(self.params["a2"].real), float(self.params["a2"].imag)],
                    "generator": gen.to_dict(),
                    "order": int(self.params["order"]),
                },
            }
        if self.id == "series":
            return {"id": "series", "series": self.series.to_json_dict()}
        if self.id == "g_transform":
            return {"id": "g_transform", "of": self.params["of"]}
        return {"id": self.id, "params": dict(self.params)}

    @classmethod
    def from_spec(cls, spec, order=None) -> "DiskFunction":
        fid = spec["id"]
        if fid == "sampled":
            p = spec["params"]
            gen = SchwarzGenerator.from_dict(p["generator"])
            a2 = complex(p["a2"][0], p["a2"][1])
            return build_member(a2, gen, order or int(p["order"]))
        if fid == "series":
            return cls.from_series(ComplexSeries.from_json_dict(spec["series"]))
        if fid == "g_transform":
            from .operators import g_transform

            return g_transform(cls.from_spec(spec["of"], order=order))
        return make_catalog(fid, spec.get("params") or None,
                            order=order or DEFAULT_ORDER)

    @classmethod
    def from_series(cls, series: ComplexSeries) -> "DiskFunction":
        """Wrap a raw Taylor series; closed forms are the truncated polynomial.

        Boundary scans of such a function see the polynomial, not the
        underlying analytic function, so results degrade near |z| = 1 when
        the coefficients decay slowly.
        """
        h = series.div_z().reciprocal()
        return cls("series", {}, _PolyKernel(h.coeffs), series)


# ---------------------------------------------------------------------------
# named catalog
# ---------------------------------------------------------------------------
def _series_from_h(h_coeffs, order):
    h = ComplexSeries(np.asarray(h_coeffs, dtype=np.complex128)).pad_to(order)
    return h.reciprocal().mul_z()


# id -> polynomial coefficients of h = z/f (low to high)
_RATIONAL_H = {
    "koebe": [1.0, -2.0, 1.0],
    "f1": [1.0, 0.0, -1.0],
    "f2": [1.0, 0.0, 0.0, -0.5],
    "half_plane": [1.0, -1.0],
    "identity": [1.0],
    "example_sec1": [1.0, -1.5, 0.0, 0.5],
}


def catalog_ids():
    return sorted(_RATIONAL_H) + ["fb", "log_map"]


def make_catalog(cid: str, params=None, order: int = DEFAULT_ORDER) -> DiskFunction:
    """Build a named catalog function.

    ``fb`` requires a parameter b with 0 < b <= 2; every other id takes no
    parameters.  Unknown ids raise UnknownId.
    """
    params = dict(params or {})
    if cid == "fb":
        b = params.get("b")
        if b is None:
            raise ParamOutOfRange("fb requires a parameter b in (0, 2]")
        b = float(b)
        if not 0.0 < b <= 2.0:
            raise ParamOutOfRange(f"fb parameter b = {b} outside (0, 2]")
        hc = [1.0, b, 1.0]
        return DiskFunction("fb", {"b": b}, _PolyKernel(hc), _series_from_h(hc, order))
    if params:
        raise ParamOutOfRange(f"catalog id {cid!r} takes no parameters")
    if cid == "log_map":
        kernel = _LogQuotientKernel(order)
        return DiskFunction("log_map", {}, kernel, kernel.series_f)
    if cid in _RATIONAL_H:
        hc = _RATIONAL_H[cid]
        return DiskFunction(cid, {}, _PolyKernel(hc), _series_from_h(hc, order))
    raise UnknownId(f"unknown catalog id {cid!r}")


# ---------------------------------------------------------------------------
# Schwarz generators
# ---------------------------------------------------------------------------
class SchwarzGenerator:
    """An analytic psi with sup |psi| <= 1 on the unit disk.

    psi plays the role of the derivative of the deviation primitive:
    omega1(z) = integral of psi from 0 to z, so |omega1(z)| <= |z| and
    |omega1'| <= 1 automatically.  Three kinds are supported:

    * ``scaled_unimodular``: psi = rho e^{i theta}, constant;
    * ``blaschke_product``: psi = rho e^{i theta} prod (z - a_k)/(1 - conj(a_k) z),
      at most 4 factors, 0.01 <= |a_k| < 0.95;
    * ``random_polynomial``: an explicit polynomial (the sampler normalizes
      its sup on the unit circle below 1; the direct constructor trusts the
      caller).
    """

    def __init__(self, kind, params, order=DEFAULT_ORDER):
        self.kind = kind
        self.params = params
        if kind == "scaled_unimodular":
            rho, theta = float(params["rho"]), float(params["theta"])
            if not 0.0 <= rho <= 1.0:
                raise ParamOutOfRange(f"rho = {rho} outside [0, 1]")
            self._coeffs = np.array([rho * np.exp(1j * theta)], dtype=np.complex128)
        elif kind == "random_polynomial":
            self._coeffs = np.array(
                [complex(re, im) for re, im in params["coeffs"]], dtype=np.complex128)
            if self._coeffs.size > 17:
                raise ParamOutOfRange("polynomial generator degree exceeds 16")
        elif kind == "blaschke_product":
            alphas = np.array(
                [complex(re, im) for re, im in params["alphas"]], dtype=np.complex128)
            rho, theta = float(params["rho"]), float(params["theta"])
            if not 1 <= alphas.size <= 4:
                raise ParamOutOfRange("blaschke product takes 1..4 factors")
            if np.any(np.abs(alphas) >= 0.95) or np.any(np.abs(alphas) < 0.01):
                raise ParamOutOfRange("blaschke zeros must satisfy 0.01 <= |a| < 0.95")
            if not 0.0 <= rho <= 1.0:
                raise ParamOutOfRange(f"rho = {rho} outside [0, 1]")
            self._alphas, self._rho, self._theta = alphas, rho, theta
            self._coeffs = None
        else:
            raise ParamOutOfRange(f"unknown generator kind {kind!r}")
        self.psi_series = self.psi_taylor(order)

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, w, order=DEFAULT_ORDER):
        w = complex(w)
        return cls("scaled_unimodular",
                   {"rho": abs(w), "theta": float(np.angle(w))}, order)

    @classmethod
    def polynomial(cls, coeffs, order=DEFAULT_ORDER):
        pairs = [[float(np.real(c)), float(np.imag(c))] for c in np.atleast_1d(coeffs)]
        return cls("random_polynomial", {"coeffs": pairs}, order)

    @classmethod
    def blaschke(cls, alphas, rho, theta, order=DEFAULT_ORDER):
        pairs = [[float(np.real(a)), float(np.imag(a))] for a in np.atleast_1d(alphas)]
        return cls("blaschke_product",
                   {"alphas": pairs, "rho": float(rho), "theta": float(theta)}, order)

    # -- evaluation ----------------------------------------------------------
    def _rational(self):
        try:
            return self._rat_cache
        except AttributeError:
            k = _BlaschkeKernel(0j, self._alphas,
                                self._rho, self._theta)
            self._rat_cache = k
            return k

    def psi(self, z):
        zz, scalar = _as_1d(z)
        if self._coeffs is not None:
            return _unwrap(npp.polyval(zz, self._coeffs), scalar)
        return _unwrap(self._rational().psi(zz), scalar)

    def psi_prime(self, z):
        zz, scalar = _as_1d(z)
        if self._coeffs is not None:
            return _unwrap(npp.polyval(zz, _polyder(self._coeffs)), scalar)
        return _unwrap(self._rational().psi1(zz), scalar)

    def omega1(self, z):
        zz, scalar = _as_1d(z)
        if self._coeffs is not None:
            return _unwrap(npp.polyval(zz, npp.polyint(self._coeffs)), scalar)
        return _unwrap(self._rational().omega1(zz), scalar)

    def psi_taylor(self, order: int) -> ComplexSeries:
        """Taylor coefficients of psi to the given order (exact for the
        polynomial kinds, true expansion for Blaschke products)."""
        if self._coeffs is not None:
            return ComplexSeries(self._coeffs).pad_to(order).truncate(order)
        num = ComplexSeries(self._rational().p_poly).pad_to(order)
        den = ComplexSeries(self._rational().q_poly).pad_to(order)
        return num * den.reciprocal()

    def c_coefficients(self):
        """First three Taylor coefficients of omega1 (c1, c2, c3)."""
        p = self.psi_series.coeffs
        c = [complex(p[k - 1]) / k if k - 1 < p.size else 0j for k in (1, 2, 3)]
        return tuple(c)

    # -- serialization ------------------------------------------------------
    def to_dict(self):
        return {"kind": self.kind, "params": self.params}

    @classmethod
    def from_dict(cls, data, order=DEFAULT_ORDER):
        return cls(data["kind"], data["params"], order)


def _sample_generator(rng, kind, degree):
    if kind == "scaled_unimodular":
        return SchwarzGenerator("scaled_unimodular",
                                {"rho": float(rng.uniform(0.0, 1.0)),
                                 "theta": float(rng.uniform(0.0, 2.0 * np.pi))})
    if kind == "random_polynomial":
        deg = int(min(max(degree, 0), 16))
        raw = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        grid = np.exp(2j * np.pi * np.arange(8192) / 8192)
        sup = float(np.abs(npp.polyval(grid, raw)).max())
        amp = float(rng.uniform(0.0, 1.0))
        coeffs = raw * (amp / (sup * 1.001)) if sup > 0 else raw * 0.0
        return SchwarzGenerator.polynomial(coeffs)
    if kind == "blaschke_product":
        m = int(min(max(degree, 1), 4))
        alphas = []
        while len(alphas) < m:
            a = rng.uniform(0.05, 0.95) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
            if all(abs(a - b) > 0.01 for b in alphas):
                alphas.append(a)
        return SchwarzGenerator.blaschke(
            alphas, rng.uniform(0.0, 1.0), rng.uniform(0.0, 2.0 * np.pi))
    raise ParamOutOfRange(f"unknown generator kind {kind!r}")


def seed_key(seed: int, index: int | None = None) -> np.random.SeedSequence:
    """Deterministic per-sample RNG stream derived from (seed, index)."""
    entropy = int(seed) & (2 ** 64 - 1)
    spawn = () if index is None else (int(index),)
    return np.random.SeedSequence(entropy=entropy, spawn_key=spawn)


def sample_schwarz(seed: int, kind: str, degree: int = 4) -> SchwarzGenerator:
    """Draw a generator of the given kind, deterministically from the seed."""
    if degree > 16:
        raise ParamOutOfRange("generator degree is capped at 16")
    rng = np.random.default_rng(seed_key(seed))
    return _sample_generator(rng, kind, degree)


# ---------------------------------------------------------------------------
# certified construction from the reciprocal normal form
# ---------------------------------------------------------------------------
def count_zeros_on_disk(h, radius: float = CERT_RADIUS,
                        samples: int = CERT_SAMPLES) -> int:
    """Zeros of h inside |z| < radius, counted by the winding number of the
    boundary image.  h must be a vectorized callable, analytic and zero-free
    on the circle itself (|h| <= 1e-9 anywhere on it raises BoundaryTooClose).
    """
    theta = 2.0 * np.pi * np.arange(samples) / samples
    w = np.asarray(h(radius * np.exp(1j * theta)))
    if float(np.min(np.abs(w))) <= MIN_BOUNDARY_ABS:
        raise BoundaryTooClose(
            f"|h| falls to {float(np.min(np.abs(w))):.3e} on the circle r = {radius}")
    turns = float(np.sum(np.angle(w / np.roll(w, 1))))
    return int(np.rint(turns / (2.0 * np.pi)))


def build_member(a2, generator: SchwarzGenerator,
                 order: int = DEFAULT_ORDER) -> DiskFunction:
    """Construct f from z/f = 1 - a2 z - z omega1(z), omega1' = psi.

    The quotient is certified zero-free on |z| < CERT_RADIUS by winding
    number before the function is returned; inadmissible parameters raise
    DenominatorVanishes (callers typically resample).
    """
    a2 = complex(a2)
    if abs(a2) > 2.0 + 1e-12:
        raise ParamOutOfRange(f"|a2| = {abs(a2):.6g} exceeds the admissible bound 2")
    if generator.kind == "blaschke_product":
        kernel = _BlaschkeKernel(a2, generator._alphas, generator._rho,
                                 generator._theta)
    else:
        psi_c = generator._coeffs
        h_exact = np.zeros(psi_c.size + 2, dtype=np.complex128)
        h_exact[0] = 1.0
        h_exact[1] = -a2
        h_exact[2:] = -psi_c / np.arange(1, psi_c.size + 1)
        kernel = _PolyKernel(h_exact)
    try:
        winding = count_zeros_on_disk(kernel.h)
    except BoundaryTooClose as exc:
        raise DenominatorVanishes(f"quotient vanishes on the certification circle: {exc}") from exc
    if winding != 0:
        raise DenominatorVanishes(
            f"quotient has {winding} zero(s) inside |z| < {CERT_RADIUS:.6f}")

    psi_s = generator.psi_taylor(order).coeffs
    h_coeffs = np.zeros(order + 1, dtype=np.complex128)
    h_coeffs[0] = 1.0
    h_coeffs[1] = -a2
    upto = min(order - 1, psi_s.size)
    h_coeffs[2 : 2 + upto] = -psi_s[:upto] / np.arange(1, upto + 1)
    series = ComplexSeries(h_coeffs).reciprocal().mul_z()
    return DiskFunction("sampled",
                        {"a2": a2, "generator": generator, "order": order},
                        kernel, series)
