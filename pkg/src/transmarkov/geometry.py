"""
Numerical checks of transversality and braiding on sampled curves.

The contact form is dz + r^2 dtheta = dz + x dy - y dx.  Derivatives are
estimated by cyclic central differences and theta is unwrapped along each
polyline, so winding is tracked globally rather than modulo 2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MIN_SAMPLES = 16


@dataclass(frozen=True)
class SampledCurve:
    components: tuple[np.ndarray, ...]
    closed: bool = True

    def __post_init__(self) -> None:
        comps = tuple(np.asarray(c, dtype=float) for c in self.components)
        if not comps:
            raise ValueError("a curve needs at least one component")
        for c in comps:
            if c.ndim != 2 or c.shape[1] != 3:
                raise ValueError("each component must be an (m, 3) array of samples")
            if len(c) < MIN_SAMPLES:
                raise ValueError(f"each component needs at least {MIN_SAMPLES} samples")
        object.__setattr__(self, "components", comps)

    def rotated(self, angle: float) -> "SampledCurve":
        c, s = math.cos(angle), math.sin(angle)
        rot = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
        return SampledCurve(tuple(p @ rot.T for p in self.components), self.closed)

    def refined(self) -> "SampledCurve":
        """Insert the midpoint of every edge."""
        out = []
        for p in self.components:
            nxt = np.roll(p, -1, axis=0) if self.closed else p[1:]
            base = p if self.closed else p[:-1]
            mid = (base + nxt) / 2
            merged = np.empty((len(base) + len(mid), 3))
            merged[0::2], merged[1::2] = base, mid
            if not self.closed:
                merged = np.vstack([merged, p[-1:]])
            out.append(merged)
        return SampledCurve(tuple(out), self.closed)


def _check_spacing(p: np.ndarray, closed: bool) -> np.ndarray:
    edges = (np.roll(p, -1, axis=0) - p) if closed else np.diff(p, axis=0)
    lengths = np.linalg.norm(edges, axis=1)
    if np.any(lengths == 0):
        raise ValueError("consecutive samples coincide (degenerate spacing)")
    return lengths


def _central(p: np.ndarray, closed: bool) -> tuple[np.ndarray, np.ndarray]:
    """Central differences and the samples they belong to."""
    if closed:
        return (np.roll(p, -1, axis=0) - np.roll(p, 1, axis=0)) / 2, p
    return (p[2:] - p[:-2]) / 2, p[1:-1]


@dataclass(frozen=True)
class TransversalityReport:
    ok: bool
    margins: tuple[np.ndarray, ...]   # per sample: (dz + x dy - y dx) - tol * ds

    def __bool__(self) -> bool:
        return self.ok

    def failing(self, component: int = 0) -> np.ndarray:
        return np.flatnonzero(self.margins[component] <= 0)


def check_transversal(c: SampledCurve, tol: float = 1e-6) -> TransversalityReport:
    margins = []
    for p in c.components:
        _check_spacing(p, c.closed)
        d, at = _central(p, c.closed)
        alpha = d[:, 2] + at[:, 0] * d[:, 1] - at[:, 1] * d[:, 0]
        ds = np.linalg.norm(d, axis=1)
        margins.append(alpha - tol * ds)
    ok = all(bool(np.all(m > 0)) for m in margins)
    return TransversalityReport(ok, tuple(margins))


def unwrapped_theta(p: np.ndarray) -> np.ndarray:
    return np.unwrap(np.arctan2(p[:, 1], p[:, 0]))


def theta_steps(p: np.ndarray, closed: bool = True) -> np.ndarray:
    """Theta increment along every edge, each taken in (-pi, pi]."""
    theta = np.arctan2(p[:, 1], p[:, 0])
    nxt = np.roll(theta, -1) if closed else theta[1:]
    base = theta if closed else theta[:-1]
    return np.angle(np.exp(1j * (nxt - base)))


def _check_axis(p: np.ndarray, axis_tol: float) -> None:
    r = np.hypot(p[:, 0], p[:, 1])
    if np.any(r <= axis_tol):
        raise ValueError("curve passes too close to the z-axis")


@dataclass(frozen=True)
class BraidReport:
    ok: bool
    degree: int | None

    def __iter__(self):
        return iter((self.ok, self.degree))


def winding_degree(c: SampledCurve) -> int:
    total = sum(float(theta_steps(p, c.closed).sum()) for p in c.components) / (2 * math.pi)
    rounded = round(total)
    if abs(total - rounded) >= 0.01:
        raise ValueError(f"total winding {total:.4f} is not close to an integer")
    return int(rounded)


def check_geometric_braid(c: SampledCurve, tol: float = 1e-6,
                          axis_tol: float = 1e-9) -> BraidReport:
    for p in c.components:
        _check_axis(p, axis_tol)
        _check_spacing(p, c.closed)
    ok = all(bool(np.all(theta_steps(p, c.closed) > tol)) for p in c.components)
    return BraidReport(ok, winding_degree(c) if ok else None)


@dataclass(frozen=True)
class Zone:
    start: int              # first sample of the zone
    stop: int               # last sample (the zone spans edges start..stop-1, cyclically)
    theta_increment: float

    @property
    def simple(self) -> bool:
        return abs(self.theta_increment) < 2 * math.pi


@dataclass(frozen=True)
class ZoneReport:
    zones: tuple[tuple[Zone, ...], ...]

    @property
    def empty(self) -> bool:
        return not any(self.zones)


def _runs(bad: np.ndarray, closed: bool) -> list[tuple[int, int]]:
    """Maximal runs of bad edges as (first edge, edge count), wrapping if closed."""
    m = len(bad)
    if not bad.any():
        return []
    if bad.all():
        return [(0, m)]
    runs = []
    k = 0
    while k < m:
        if bad[k]:
            j = k
            while j < m and bad[j]:
                j += 1
            runs.append((k, j - k))
            k = j
        else:
            k += 1
    if closed and len(runs) > 1 and bad[0] and bad[-1]:
        first_start, first_len = runs.pop(0)
        last_start, last_len = runs.pop()
        runs.append((last_start, last_len + first_len))
    return runs


def bad_zones(c: SampledCurve, tol: float = 1e-6) -> ZoneReport:
    per_component = []
    for p in c.components:
        steps = theta_steps(p, c.closed)
        runs = _runs(steps <= tol, c.closed)
        zones = []
        for start, count in runs:
            idx = (np.arange(start, start + count) % len(steps))
            zones.append(Zone(start, (start + count) % len(p) if c.closed else start + count,
                              float(steps[idx].sum())))
        per_component.append(tuple(zones))
    return ZoneReport(tuple(per_component))


# ---------------------------------------------------------------------------
# local model near an axis crossing


def local_model_point(s, tau, z0: float = 0.0):
    s = np.asarray(s, dtype=float)
    return tau - 3 * s ** 2, s * tau - s ** 3, z0 + s


def local_model(tau: float, z0: float = 0.0, samples: int = 64) -> SampledCurve:
    """Open arc x = tau - 3 s^2, y = s tau - s^3, z = z0 + s over s in [-1, 1]."""
    if samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples")
    s = np.linspace(-1.0, 1.0, samples)
    x, y, z = local_model_point(s, tau, z0)
    return SampledCurve((np.column_stack([x, y, z]),), closed=False)


def model_identity_error(s, tau) -> np.ndarray:
    """|x y' - y x' - (tau^2 + 3 s^4)| with derivatives in s taken analytically."""
    s = np.asarray(s, dtype=float)
    tau = np.asarray(tau, dtype=float)
    x, y, _ = local_model_point(s, tau)
    dx = -6 * s
    dy = tau - 3 * s ** 2
    return np.abs(x * dy - y * dx - (tau ** 2 + 3 * s ** 4))


def verify_model_identity(s_values, tau_values) -> float:
    ss, tt = np.meshgrid(np.asarray(s_values, float), np.asarray(tau_values, float))
    return float(model_identity_error(ss, tt).max())


def _segments_cross(p1, p2, q1, q2) -> bool:
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def planar_self_crossings(c: SampledCurve, component: int = 0) -> int:
    """Number of transverse self-crossings of the xy-projection (brute force)."""
    p = c.components[component][:, :2]
    segs = list(zip(p[:-1], p[1:]))
    if c.closed:
        segs.append((p[-1], p[0]))
    m = len(segs)
    count = 0
    for i in range(m):
        for j in range(i + 2, m):
            if c.closed and i == 0 and j == m - 1:
                continue
            if _segments_cross(*segs[i], *segs[j]):
                count += 1
    return count


# ---------------------------------------------------------------------------
# tangencies in the theta-z projection


@dataclass(frozen=True)
class Branch:
    """Local data of an arc at a crossing of the theta-z projection."""

    r: float
    dtheta: float
    dz: float

    @property
    def alpha(self) -> float:
        return self.dz + self.r ** 2 * self.dtheta


def tangency_violation(outer: Branch, inner: Branch, rtol: float = 1e-9) -> bool:
    """True when a shadowing tangency breaks the sign rule for transversal arcs.

    ``outer`` is the arc farther from the axis.  If both arcs are
    transversal, tangent in the theta-z projection, and the outer arc has
    dtheta < 0, the inner arc must have dtheta < 0 as well.
    """
    if not (outer.r > inner.r and outer.alpha > 0 and inner.alpha > 0):
        return False
    if outer.dtheta >= 0:
        return False
    lam = inner.dtheta / outer.dtheta
    if not math.isclose(inner.dz, lam * outer.dz, rel_tol=rtol, abs_tol=rtol):
        return False  # not a tangency
    return inner.dtheta >= 0


# ---------------------------------------------------------------------------
# curve text format:  'component' header, then one 'x y z' line per sample


def format_curve(c: SampledCurve) -> str:
    header = "component" if c.closed else "component open"
    lines = []
    for p in c.components:
        lines.append(header)
        lines += [" ".join(repr(float(v)) for v in row) for row in p]
    return "\n".join(lines) + "\n"


def parse_curve(text: str) -> SampledCurve:
    """Read the curve format; ``component open`` marks an open fragment."""
    comps: list[list[list[float]]] = []
    kinds: set[bool] = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.split()[0] == "component":
            rest = line.split()[1:]
            if rest not in ([], ["open"]):
                raise ValueError(f"bad component header {line!r}")
            kinds.add(not rest)
            comps.append([])
            continue
        if not comps:
            raise ValueError("sample before the first 'component' header")
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'x y z', got {line!r}")
        comps[-1].append([float(v) for v in parts])
    if len(kinds) > 1:
        raise ValueError("cannot mix open and closed components")
    return SampledCurve(tuple(np.array(c) for c in comps), closed=kinds != {False})


def circle(samples: int = 64, radius: float = 1.0, z: float = 0.0,
           turns: int = 1, reverse: bool = False) -> SampledCurve:
    """The standard circle r = radius, z = const (optionally covered several times)."""
    s = np.arange(samples) / samples * 2 * math.pi * turns
    if reverse:
        s = -s
    pts = np.column_stack([radius * np.cos(s), radius * np.sin(s), np.full(samples, z)])
    return SampledCurve((pts,))
