"""Hankel determinants of Taylor coefficients and the sharp-bound machinery.

For a normalized f with coefficients a_1 = 1, a_2, a_3, ... the q-th Hankel
determinant at index n is det [a_{n+i+j}]_{i,j=0..q-1}.  For members of the
bounded reciprocal-deviation class the second and third determinants reduce
to expressions in (a2, c1, c2, c3), where the c_k come from the deviation
primitive omega1; their sharp bounds are 1 and 1/4.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .catalog import DiskFunction
from .errors import ArgumentOutOfDomain, InsufficientOrder

__all__ = [
    "HankelReport",
    "hankel_det",
    "reduced_h2",
    "reduced_h3",
    "coeffs_from_c",
    "prokhorov_szynal_check",
    "PSRecord",
    "c3_envelope",
    "h3_profile_bound",
    "write_sweep_csv",
]


def _det(m):
    """Cofactor-expansion determinant for small complex matrices."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0j
    sign = 1.0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += sign * m[0][j] * _det(minor)
        sign = -sign
    return total


@dataclass(frozen=True)
class HankelReport:
    q: int
    n: int
    value: complex
    modulus: float
    coefficients: tuple

    def to_dict(self):
        return {
            "q": self.q,
            "n": self.n,
            "value": [self.value.real, self.value.imag],
            "modulus": self.modulus,
            "coefficients": [[a.real, a.imag] for a in self.coefficients],
        }


def hankel_det(f: DiskFunction, q: int, n: int) -> HankelReport:
    """det [a_{n+i+j}] for i, j in 0..q-1, expanded exactly by cofactors.

    Requires 1 <= q <= 4 and a series order of at least n + 2q - 2.
    """
    if not 1 <= q <= 4:
        raise ValueError(f"q = {q} outside the supported range 1..4")
    if n < 1:
        raise ValueError(f"n = {n} must be positive")
    top = n + 2 * q - 2
    if f.series.order < top:
        raise InsufficientOrder(
            f"series order {f.series.order} < required coefficient index {top}")
    a = [f.series.coefficient(k) for k in range(n, top + 1)]
    m = [[a[i + j] for j in range(q)] for i in range(q)]
    value = _det(m)
    return HankelReport(q=q, n=n, value=complex(value), modulus=abs(value),
                        coefficients=tuple(a))


def reduced_h2(a2: complex, c) -> complex:
    """Second determinant at n = 2 in reduced form: a2 c2 - c1^2."""
    c1, c2 = complex(c[0]), complex(c[1])
    return complex(a2) * c2 - c1 * c1


def reduced_h3(c) -> complex:
    """Third determinant at n = 1 in reduced form: c1 c3 - c2^2."""
    c1, c2, c3 = (complex(ck) for ck in c[:3])
    return c1 * c3 - c2 * c2


def coeffs_from_c(a2: complex, c) -> tuple:
    """(a3, a4, a5) rebuilt from the decomposition data (a2, c1, c2, c3)."""
    a2 = complex(a2)
    c1, c2, c3 = (complex(ck) for ck in c[:3])
    a3 = c1 + a2 ** 2
    a4 = c2 + 2.0 * a2 * c1 + a2 ** 3
    a5 = c3 + 2.0 * a2 * c2 + c1 ** 2 + 3.0 * a2 ** 2 * c1 + a2 ** 4
    return a3, a4, a5


@dataclass(frozen=True)
class PSRecord:
    """Slack of the three coefficient constraints for a bounded-derivative
    primitive; all slacks are nonnegative (up to -1e-9 roundoff) exactly when
    the tuple is admissible."""

    slack1: float
    slack2: float
    slack3: float

    @property
    def ok(self) -> bool:
        return min(self.slack1, self.slack2, self.slack3) >= -1e-9

    def to_dict(self):
        return {"slack1": self.slack1, "slack2": self.slack2,
                "slack3": self.slack3, "ok": self.ok}


def prokhorov_szynal_check(c1, c2, c3) -> PSRecord:
    """Prokhorov-Szynal constraints on (c1, c2, c3) as slack values.

    slack1 = 1 - |c1|
    slack2 = (1 - |c1|^2) - 2 |c2|
    slack3 = (1 - |c1|^2)^2 - 4 |c2|^2 - |3 c3 (1 - |c1|^2) + 4 conj(c1) c2^2|
    """
    c1, c2, c3 = complex(c1), complex(c2), complex(c3)
    m1 = abs(c1)
    s1 = 1.0 - m1
    s2 = (1.0 - m1 * m1) - 2.0 * abs(c2)
    s3 = ((1.0 - m1 * m1) ** 2 - 4.0 * abs(c2) ** 2
          - abs(3.0 * c3 * (1.0 - m1 * m1) + 4.0 * np.conj(c1) * c2 * c2))
    return PSRecord(slack1=float(s1), slack2=float(s2), slack3=float(s3))


def c3_envelope(c1: float, c2_abs: float) -> float:
    """Largest |c3| compatible with the constraints at real c1 >= 0:
    (1 - c1^2 - 4 |c2|^2/(1 + c1))/3."""
    c1, c2_abs = float(c1), float(c2_abs)
    if not 0.0 <= c1 <= 1.0:
        raise ArgumentOutOfDomain(f"c1 = {c1} outside [0, 1]")
    if c2_abs < 0.0 or c2_abs > (1.0 - c1 * c1) / 2.0 + 1e-12:
        raise ArgumentOutOfDomain(
            f"|c2| = {c2_abs} outside [0, (1 - c1^2)/2]")
    return (1.0 - c1 * c1 - 4.0 * c2_abs * c2_abs / (1.0 + c1)) / 3.0


def h3_profile_bound(c1: float) -> float:
    """(3 - 2 c1^2 - c1^4)/12, the worst third-determinant modulus over
    admissible (c2, c3) at fixed real c1 in [0, 1]; its maximum is 1/4."""
    c1 = float(c1)
    return (3.0 - 2.0 * c1 * c1 - c1 ** 4) / 12.0


def write_sweep_csv(functions, fileobj) -> int:
    """One row of determinant data per function; returns the row count."""
    from .operators import decompose

    writer = csv.writer(fileobj)
    writer.writerow(["id", "params", "h2_modulus", "h3_modulus",
                     "c1", "c2", "c3", "slack1", "slack2", "slack3"])
    count = 0
    for f in functions:
        dec = decompose(f)
        h2 = hankel_det(f, 2, 2)
        h3 = hankel_det(f, 3, 1)
        ps = prokhorov_szynal_check(*dec.c)
        params = ";".join(f"{k}={v!r}" for k, v in sorted(f.params.items())
                          if k != "generator")
        writer.writerow([f.id, params, repr(h2.modulus), repr(h3.modulus),
                         repr(dec.c[0]), repr(dec.c[1]), repr(dec.c[2]),
                         repr(ps.slack1), repr(ps.slack2), repr(ps.slack3)])
        count += 1
    return count
