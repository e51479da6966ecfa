"""Coordinates on the nilpotent slice and the Hilbert-Chow picture.

Polynomials are numpy coefficient arrays in ascending degree order
(index k holds the coefficient of t^k).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import InputError

TOL = 1e-9
ROOT_TOL = 1e-6


def poly_from_roots(roots) -> np.ndarray:
    return P.polyfromroots(np.asarray(roots, dtype=complex)).astype(complex)


def _trim(c: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=complex)
    c = np.asarray(c, dtype=complex)
    n = min(size, len(c))
    out[:n] = c[:n]
    return out


def _pad_sub(a, b) -> np.ndarray:
    n = max(len(a), len(b))
    return _trim(a, n) - _trim(b, n)


def roots_of(c: np.ndarray) -> np.ndarray:
    """Roots of a monic polynomial via the eigenvalues of its companion matrix."""
    c = np.asarray(c, dtype=complex)
    n = len(c) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    if abs(c[-1] - 1) > TOL:
        raise InputError("expected a monic polynomial")
    comp = np.zeros((n, n), dtype=complex)
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -c[:-1]
    vals = np.linalg.eigvals(comp)
    if not np.all(np.isfinite(vals)):
        raise ArithmeticError("root finder did not converge")
    return vals


@dataclass(frozen=True)
class SlicePoint:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    tau: tuple[complex, ...]

    @property
    def n(self) -> int:
        return len(self.A) - 1

    @property
    def m(self) -> int:
        return len(self.tau) // 2

    def P_tau(self) -> np.ndarray:
        return poly_from_roots(self.tau)


@dataclass(frozen=True)
class FiberPoint:
    u: complex
    v: complex
    z: complex


def _check_degrees(p: SlicePoint) -> None:
    if len(p.tau) % 2:
        raise InputError("tau must have an even number of entries")
    n, two_m = p.n, len(p.tau)
    if not 1 <= n <= two_m // 2:
        raise InputError(f"deg A = {n} outside 1..{two_m // 2}")
    if len(p.D) - 1 != two_m - n:
        raise InputError(f"deg D must be {two_m - n}")
    if len(p.B) > n or len(p.C) > n:
        raise InputError(f"B and C must have degree below {n}")


def residual(p: SlicePoint) -> float:
    """Largest coefficient of A D - B C - P_tau."""
    ad = P.polymul(p.A, p.D)
    bc = P.polymul(p.B, p.C) if len(p.B) and len(p.C) else np.zeros(1)
    r = _pad_sub(_pad_sub(ad, bc), p.P_tau())
    return float(np.max(np.abs(r))) if len(r) else 0.0


def validate(p: SlicePoint, tol: float = TOL) -> bool:
    _check_degrees(p)
    if abs(p.A[-1] - 1) > tol or abs(p.D[-1] - 1) > tol:
        return False
    return residual(p) <= tol


def to_uv(p: SlicePoint) -> tuple[np.ndarray, np.ndarray]:
    n = p.n
    b, c = _trim(p.B, n), _trim(p.C, n)
    return (b + c) / 2, (b - c) / 2j


def from_uv(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return u + 1j * v, u - 1j * v


def p_tau_at(tau, z: complex) -> complex:
    return complex(np.prod([z - r for r in tau]))


def on_fiber(q: FiberPoint, tau, tol: float = ROOT_TOL) -> bool:
    return abs(q.u ** 2 + q.v ** 2 + p_tau_at(tau, q.z)) <= tol


def hilbert_image(p: SlicePoint) -> list[FiberPoint]:
    u, v = to_uv(p)
    zs = roots_of(p.A)
    out = [FiberPoint(complex(P.polyval(z, u)), complex(P.polyval(z, v)), complex(z)) for z in zs]
    return sorted(out, key=lambda q: (q.z.real, q.z.imag))


def _interpolate(zs: np.ndarray, values: np.ndarray) -> np.ndarray:
    # Lagrange form; about three times more accurate here than solving the Vandermonde system
    n = len(zs)
    out = np.zeros(n, dtype=complex)
    for i in range(n):
        others = np.delete(zs, i)
        out += values[i] * _trim(poly_from_roots(others) / np.prod(zs[i] - others), n)
    return out


def reconstruct(points, tau, tol: float = ROOT_TOL, sep: float = 1e-9) -> SlicePoint:
    """Slice point whose Hilbert-Chow image is the given set of distinct-z fiber points."""
    points = list(points)
    n = len(points)
    if n == 0:
        raise InputError("need at least one point")
    zs = np.array([q.z for q in points], dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(zs[i] - zs[j]) <= sep:
                raise InputError("repeated z value; the point is off the reduced stratum")
    for q in points:
        if not on_fiber(q, tau, tol):
            raise InputError(f"point {q} is not on the fiber")
    a = poly_from_roots(zs)
    u = _interpolate(zs, np.array([q.u for q in points], dtype=complex))
    v = _interpolate(zs, np.array([q.v for q in points], dtype=complex))
    top = _pad_sub(P.polyadd(P.polymul(u, u), P.polymul(v, v)), -poly_from_roots(tau))
    d, rem = P.polydiv(top, a)
    if len(rem) and np.max(np.abs(rem)) > tol * max(1.0, float(np.max(np.abs(top)))):
        raise ArithmeticError("division by A left a remainder")
    d = _trim(d, len(tau) - n + 1)
    b, c = from_uv(u, v)
    return SlicePoint(a, b, c, d, tuple(complex(t) for t in tau))


def involution(p: SlicePoint) -> SlicePoint:
    return SlicePoint(p.A, p.C, p.B, p.D, p.tau)


def anti_diagonal_check(points, tau, tol: float = ROOT_TOL) -> bool:
    """True when two of the points (u, z) on the v = 0 locus have the form (u, z), (-u, z)."""
    points = list(points)
    for q in points:
        if abs(q.v) > tol or abs(q.u ** 2 + p_tau_at(tau, q.z)) > tol:
            raise InputError(f"point {q} is not on the branched double cover")
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a, b = points[i], points[j]
            if abs(a.z - b.z) <= tol and abs(a.u + b.u) <= tol:
                return True
    return False


def random_tau(rng: np.random.Generator, m: int, sep: float = 0.1, scale: float = 3.0) -> tuple[complex, ...]:
    """2m roots summing to zero with pairwise separation at least sep."""
    while True:
        r = rng.uniform(-scale, scale, 2 * m) + 1j * rng.uniform(-scale, scale, 2 * m)
        r = r - r.mean()
        if _separated(r, sep):
            return tuple(complex(x) for x in r)


def _separated(r, sep: float) -> bool:
    return all(abs(r[i] - r[j]) >= sep for i in range(len(r)) for j in range(i + 1, len(r)))


def random_slice_point(rng: np.random.Generator, n: int, m: int, sep: float = 0.1, scale: float = 3.0) -> SlicePoint:
    """A valid slice point built from n random fiber points with well separated z."""
    tau = random_tau(rng, m, sep, scale)
    while True:
        zs = rng.uniform(-scale, scale, n) + 1j * rng.uniform(-scale, scale, n)
        if _separated(zs, sep) and all(abs(z - t) >= sep for z in zs for t in tau):
            break
    pts = []
    for z in zs:
        v = complex(rng.normal(), rng.normal())
        u = np.sqrt(-(v ** 2) - p_tau_at(tau, z))
        pts.append(FiberPoint(complex(u), v, complex(z)))
    return reconstruct(pts, tau)


def serialize_poly(c: np.ndarray) -> str:
    return " ".join(f"{float(x.real)!r},{float(x.imag)!r}" for x in np.asarray(c, dtype=complex))


def parse_poly(text: str) -> np.ndarray:
    return np.array([complex(*map(float, pair.split(","))) for pair in text.split()], dtype=complex)
