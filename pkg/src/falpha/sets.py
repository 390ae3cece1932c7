"""Set descriptions with exact interval queries.

Every supported set is described by a small recursive spec: the
middle-thirds set, a general gap-producing iterated function system on
[0, 1], a finite point list, the harmonic cluster {0} union {1/n}, a full
interval, and translate/scale wrappers.  All queries (interval
intersection, gap enumeration, finite nets, extreme points) are answered
exactly from the structure, never by sampling.
"""

from __future__ import annotations

import bisect
import math
import os
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "Interval",
    "SetSpec",
    "GapIFS",
    "TernaryCantor",
    "FinitePoints",
    "HarmonicCluster",
    "FullInterval",
    "Translate",
    "Scale",
    "Subdivision",
    "ResolutionExceeded",
    "intersects",
    "gaps",
    "net",
    "is_point_of_change",
    "spec_from_json",
    "spec_to_json",
    "max_level",
]

DEFAULT_MAX_LEVEL = 16

# scale cutoff for degenerate (single point) interval queries: once the
# recursion has zoomed in by this factor the query point sits within float
# resolution of the set and counts as a member
_POINT_SCALE = 1e-12
# depth at which an extreme-point search has pinned its target to below
# float resolution
_EXTREME_DEPTH = 80


class ResolutionExceeded(ValueError):
    """Requested net level is above the configured maximum."""


def max_level():
    """Net/ladder depth cap, overridable via FRACTAL_CALC_MAX_LEVEL."""
    raw = os.environ.get("FRACTAL_CALC_MAX_LEVEL")
    return int(raw) if raw else DEFAULT_MAX_LEVEL


def _check_level(level):
    if level < 0:
        raise ValueError("level must be nonnegative")
    if level > max_level():
        raise ResolutionExceeded(
            f"net level {level} exceeds maximum {max_level()} "
            "(raise FRACTAL_CALC_MAX_LEVEL to go deeper)"
        )


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; degenerate (lo == hi) means a single point."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def length(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class Subdivision:
    """Strictly increasing breakpoints spanning [points[0], points[-1]]."""

    points: tuple

    def __post_init__(self):
        pts = tuple(float(p) for p in self.points)
        if not pts:
            raise ValueError("subdivision needs at least one point")
        for p, q in zip(pts, pts[1:]):
            if not p < q:
                raise ValueError("subdivision points must be strictly increasing")
        object.__setattr__(self, "points", pts)

    @property
    def a(self):
        return self.points[0]

    @property
    def b(self):
        return self.points[-1]

    @property
    def mesh(self):
        pts = self.points
        if len(pts) < 2:
            return 0.0
        return max(q - p for p, q in zip(pts, pts[1:]))

    def components(self):
        return list(zip(self.points, self.points[1:]))

    def refines(self, other):
        return set(other.points) <= set(self.points)

    @staticmethod
    def uniform(a, b, n):
        if n < 1:
            raise ValueError("need at least one component")
        return Subdivision(tuple(a + (b - a) * i / n for i in range(n + 1)))


class SetSpec:
    """Base class for set descriptions; subclasses answer exact queries."""

    def hull(self):
        """(min F, max F) or None when the set is empty."""
        raise NotImplementedError

    def _isect(self, lo, hi, depth=0):
        raise NotImplementedError

    def extremes_in(self, lo, hi):
        """(min, max) of F intersected with [lo, hi], or None if empty."""
        raise NotImplementedError

    def _raw_gaps(self, lo, hi, min_len):
        """Interior gaps of F (between hull endpoints) of length >= min_len
        overlapping the open interval (lo, hi), unclipped, sorted."""
        raise NotImplementedError

    def net_points(self, level, lo, hi):
        raise NotImplementedError

    def resolution(self, level):
        raise NotImplementedError

    def is_discrete(self):
        """True when F is a countable set of isolated-or-clustering points
        carrying no mass at any positive order."""
        return False


@dataclass(frozen=True)
class GapIFS(SetSpec):
    """Attractor of m >= 2 interior-disjoint affine contractions of [0, 1].

    Copy i is the image of the attractor under x -> offsets[i] + ratios[i]*x.
    Copies must be sorted by offset and their spans interior-disjoint.
    """

    ratios: tuple
    offsets: tuple

    def __post_init__(self):
        ratios = tuple(float(r) for r in self.ratios)
        offsets = tuple(float(o) for o in self.offsets)
        object.__setattr__(self, "ratios", ratios)
        object.__setattr__(self, "offsets", offsets)
        if len(ratios) != len(offsets) or len(ratios) < 2:
            raise ValueError("need matching ratios/offsets with at least two copies")
        for r in ratios:
            if not 0.0 < r < 1.0:
                raise ValueError("ratios must lie in (0, 1)")
        if offsets[0] < -1e-12 or offsets[-1] + ratios[-1] > 1.0 + 1e-12:
            raise ValueError("copies must lie inside [0, 1]")
        for i in range(len(ratios) - 1):
            if offsets[i] + ratios[i] > offsets[i + 1] + 1e-12:
                raise ValueError("copy spans must be sorted and interior-disjoint")

    @cached_property
    def _maps(self):
        return tuple(zip(self.offsets, self.ratios))

    @cached_property
    def _hull(self):
        # hull endpoints are the fixed points of the outermost maps; snap
        # float dust at integer endpoints (e.g. copies filling out to 1)
        lo = self.offsets[0] / (1.0 - self.ratios[0])
        hi = self.offsets[-1] / (1.0 - self.ratios[-1])
        if abs(lo - round(lo)) < 1e-12:
            lo = float(round(lo))
        if abs(hi - round(hi)) < 1e-12:
            hi = float(round(hi))
        return (lo, hi)

    def hull(self):
        return self._hull

    def _isect(self, lo, hi, scale=1.0):
        h0, h1 = self._hull
        # rejection slack: float drift accumulated while zooming in is of
        # order ulp/scale in local coordinates (1e-15 in global units)
        eps = 1e-15 / scale
        if hi < h0 - eps or lo > h1 + eps:
            return False
        if lo <= h0 or hi >= h1:
            # query contains a hull endpoint, which belongs to F
            return True
        if scale < _POINT_SCALE:
            return True
        for o, r in self._maps:
            s0 = o + r * h0
            s1 = o + r * h1
            if hi < s0 - eps or lo > s1 + eps:
                continue
            if lo <= s0 or hi >= s1:
                return True
            if self._isect((lo - o) / r, (hi - o) / r, scale * r):
                return True
        return False

    def extremes_in(self, lo, hi):
        if not self._isect(lo, hi):
            return None
        return (self._extreme(lo, hi, 0, True), self._extreme(lo, hi, 0, False))

    def _extreme(self, lo, hi, depth, want_min):
        """Extreme point of F within [lo, hi]; assumes the overlap is nonempty."""
        h0, h1 = self._hull
        if want_min and lo <= h0:
            return h0
        if not want_min and hi >= h1:
            return h1
        maps = self._maps if want_min else tuple(reversed(self._maps))
        for o, r in maps:
            s0 = o + r * h0
            s1 = o + r * h1
            if hi < s0 or lo > s1:
                continue
            ov0 = max(lo, s0)
            ov1 = min(hi, s1)
            if not self._isect(ov0, ov1):
                continue
            if want_min and lo <= s0:
                return s0
            if not want_min and hi >= s1:
                return s1
            if depth >= _EXTREME_DEPTH or s1 - s0 <= 1e-15 * max(1.0, abs(s1)):
                return ov0 if want_min else ov1
            return o + r * self._extreme((ov0 - o) / r, (ov1 - o) / r, depth + 1, want_min)
        # unreachable when the caller checked intersection; fall back safely
        return lo if want_min else hi

    def _raw_gaps(self, lo, hi, min_len):
        if min_len <= 0.0:
            raise ValueError(
                "min_len must be positive: this set has infinitely many gaps"
            )
        h0, h1 = self._hull
        width = h1 - h0
        maps = self._maps
        out = []
        stack = [(0.0, 1.0)]
        while stack:
            off, sc = stack.pop()
            for i in range(len(maps) - 1):
                o0, r0 = maps[i]
                o1, r1 = maps[i + 1]
                u = off + sc * (o0 + r0 * h1)
                v = off + sc * (o1 + r1 * h0)
                if v - u >= min_len and u < hi and v > lo:
                    out.append((u, v))
            for o, r in maps:
                if sc * r * width <= min_len:
                    continue  # no gap inside this copy can reach min_len
                c0 = off + sc * (o + r * h0)
                c1 = off + sc * (o + r * h1)
                if c1 <= lo or c0 >= hi:
                    continue
                stack.append((off + sc * o, sc * r))
        out.sort()
        return out

    def net_points(self, level, lo, hi):
        _check_level(level)
        h0, h1 = self._hull
        out = set()
        stack = [(0.0, 1.0, 0)]
        while stack:
            off, sc, d = stack.pop()
            p0 = off + sc * h0
            p1 = off + sc * h1
            if p1 < lo or p0 > hi:
                continue
            if d == level:
                if lo <= p0 <= hi:
                    out.add(p0)
                if lo <= p1 <= hi:
                    out.add(p1)
                continue
            for o, r in self._maps:
                stack.append((off + sc * o, sc * r, d + 1))
        return sorted(out)

    def resolution(self, level):
        h0, h1 = self._hull
        return (h1 - h0) * max(self.ratios) ** level


@dataclass(frozen=True)
class TernaryCantor(GapIFS):
    """The middle-thirds set on [0, 1]."""

    ratios: tuple = (1.0 / 3.0, 1.0 / 3.0)
    offsets: tuple = (0.0, 2.0 / 3.0)


@dataclass(frozen=True)
class FinitePoints(SetSpec):
    """A finite, strictly sorted point list; may be empty."""

    points: tuple

    def __post_init__(self):
        pts = tuple(float(p) for p in self.points)
        for p, q in zip(pts, pts[1:]):
            if not p < q:
                raise ValueError("points must be strictly sorted")
        object.__setattr__(self, "points", pts)

    def hull(self):
        if not self.points:
            return None
        return (self.points[0], self.points[-1])

    def _isect(self, lo, hi, depth=0):
        i = bisect.bisect_left(self.points, lo)
        return i < len(self.points) and self.points[i] <= hi

    def extremes_in(self, lo, hi):
        i = bisect.bisect_left(self.points, lo)
        j = bisect.bisect_right(self.points, hi)
        if i >= j:
            return None
        return (self.points[i], self.points[j - 1])

    def _raw_gaps(self, lo, hi, min_len):
        out = []
        for p, q in zip(self.points, self.points[1:]):
            if q - p >= min_len and q - p > 0 and p < hi and q > lo:
                out.append((p, q))
        return out

    def net_points(self, level, lo, hi):
        return [p for p in self.points if lo <= p <= hi]

    def resolution(self, level):
        return 0.0

    def is_discrete(self):
        return True


@dataclass(frozen=True)
class HarmonicCluster(SetSpec):
    """The set {0} union {1/n : n >= 1}."""

    def hull(self):
        return (0.0, 1.0)

    @staticmethod
    def _n_range(lo, hi):
        """Integer range [n_min, n_max] with 1/n inside [lo, hi], or None."""
        if hi <= 0.0:
            return None
        n_min = max(1, math.ceil(1.0 / hi - 1e-12))
        if lo <= 0.0:
            return (n_min, None)  # unbounded above (accumulation at 0)
        n_max = math.floor(1.0 / lo + 1e-12)
        if n_min > n_max:
            return None
        return (n_min, n_max)

    def _isect(self, lo, hi, depth=0):
        if lo <= 0.0 <= hi:
            return True
        return self._n_range(lo, hi) is not None

    def extremes_in(self, lo, hi):
        rng = self._n_range(lo, hi)
        has_zero = lo <= 0.0 <= hi
        if rng is None:
            return (0.0, 0.0) if has_zero else None
        n_min, n_max = rng
        mx = 1.0 / n_min
        mn = 0.0 if has_zero else 1.0 / n_max
        return (mn, mx)

    def _raw_gaps(self, lo, hi, min_len):
        if min_len <= 0.0:
            raise ValueError(
                "min_len must be positive: this set has infinitely many gaps"
            )
        out = []
        n = 1
        while True:
            u = 1.0 / (n + 1)
            v = 1.0 / n
            if v - u < min_len:
                break
            if u < hi and v > lo:
                out.append((u, v))
            if v <= lo:
                break
            n += 1
        out.sort()
        return out

    def net_points(self, level, lo, hi):
        _check_level(level)
        count = 2 ** level
        pts = [0.0] + [1.0 / n for n in range(count, 0, -1)]
        return [p for p in pts if lo <= p <= hi]

    def resolution(self, level):
        return 2.0 ** -level

    def is_discrete(self):
        return True


@dataclass(frozen=True)
class FullInterval(SetSpec):
    """The whole interval [lo, hi] (the dense case)."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")

    def hull(self):
        return (self.lo, self.hi)

    def _isect(self, lo, hi, depth=0):
        return not (hi < self.lo or lo > self.hi)

    def extremes_in(self, lo, hi):
        a = max(lo, self.lo)
        b = min(hi, self.hi)
        if a > b:
            return None
        return (a, b)

    def _raw_gaps(self, lo, hi, min_len):
        return []

    def net_points(self, level, lo, hi):
        _check_level(level)
        n = 2 ** level
        step = (self.hi - self.lo) / n
        pts = [self.lo + i * step for i in range(n + 1)]
        return [p for p in pts if lo <= p <= hi]

    def resolution(self, level):
        return (self.hi - self.lo) / 2 ** level


_ORIGIN = FinitePoints((0.0,))


@dataclass(frozen=True)
class Translate(SetSpec):
    """The set F + shift."""

    inner: SetSpec
    shift: float

    def hull(self):
        h = self.inner.hull()
        if h is None:
            return None
        return (h[0] + self.shift, h[1] + self.shift)

    def _isect(self, lo, hi, depth=0):
        return self.inner._isect(lo - self.shift, hi - self.shift)

    def extremes_in(self, lo, hi):
        e = self.inner.extremes_in(lo - self.shift, hi - self.shift)
        if e is None:
            return None
        return (e[0] + self.shift, e[1] + self.shift)

    def _raw_gaps(self, lo, hi, min_len):
        raw = self.inner._raw_gaps(lo - self.shift, hi - self.shift, min_len)
        return [(u + self.shift, v + self.shift) for u, v in raw]

    def net_points(self, level, lo, hi):
        pts = self.inner.net_points(level, lo - self.shift, hi - self.shift)
        return [p + self.shift for p in pts]

    def resolution(self, level):
        return self.inner.resolution(level)

    def is_discrete(self):
        return self.inner.is_discrete()


@dataclass(frozen=True)
class Scale(SetSpec):
    """The set factor * F; factor 0 collapses everything to {0}."""

    inner: SetSpec
    factor: float

    def __post_init__(self):
        if self.factor < 0.0:
            raise ValueError("scale factor must be nonnegative")

    def _eff(self):
        return _ORIGIN if self.factor == 0.0 else None

    def hull(self):
        eff = self._eff()
        if eff is not None:
            return eff.hull()
        h = self.inner.hull()
        if h is None:
            return None
        return (h[0] * self.factor, h[1] * self.factor)

    def _isect(self, lo, hi, depth=0):
        eff = self._eff()
        if eff is not None:
            return eff._isect(lo, hi)
        return self.inner._isect(lo / self.factor, hi / self.factor)

    def extremes_in(self, lo, hi):
        eff = self._eff()
        if eff is not None:
            return eff.extremes_in(lo, hi)
        e = self.inner.extremes_in(lo / self.factor, hi / self.factor)
        if e is None:
            return None
        return (e[0] * self.factor, e[1] * self.factor)

    def _raw_gaps(self, lo, hi, min_len):
        eff = self._eff()
        if eff is not None:
            return eff._raw_gaps(lo, hi, min_len)
        f = self.factor
        raw = self.inner._raw_gaps(lo / f, hi / f, min_len / f)
        return [(u * f, v * f) for u, v in raw]

    def net_points(self, level, lo, hi):
        eff = self._eff()
        if eff is not None:
            return eff.net_points(level, lo, hi)
        f = self.factor
        return [p * f for p in self.inner.net_points(level, lo / f, hi / f)]

    def resolution(self, level):
        if self.factor == 0.0:
            return 0.0
        return self.inner.resolution(level) * self.factor

    def is_discrete(self):
        return self.factor == 0.0 or self.inner.is_discrete()


def intersects(spec, interval):
    """Flag function: 1 when F meets the closed interval, else 0."""
    return 1 if spec._isect(interval.lo, interval.hi) else 0


def gaps(spec, interval, min_len=0.0):
    """Maximal open subintervals of ``interval`` disjoint from F with
    length >= min_len, sorted.

    For sets with infinitely many gaps a positive ``min_len`` is required.
    """
    lo, hi = interval.lo, interval.hi
    h = spec.hull()
    pieces = []
    if h is None:
        if hi > lo:
            pieces.append((lo, hi))
    else:
        h0, h1 = h
        if lo < h0:
            pieces.append((lo, min(h0, hi)))
        if hi > h1:
            pieces.append((max(h1, lo), hi))
        if hi > h0 and lo < h1:
            for u, v in spec._raw_gaps(lo, hi, min_len):
                cu = max(u, lo)
                cv = min(v, hi)
                if cv > cu:
                    pieces.append((cu, cv))
    out = [Interval(u, v) for u, v in sorted(pieces) if v - u >= min_len and v > u]
    return out


def net(spec, level, interval):
    """Finite sample of F in ``interval``, dense to within resolution(level)."""
    return spec.net_points(level, interval.lo, interval.hi)


def is_point_of_change(stair, x, h_min, h0=1.0 / 3.0, eps=1e-12):
    """1 iff ``stair`` is non-constant on (x-h, x+h) for every ladder h down
    to h_min; the ladder ratio is 1/3 so rungs align with the construction
    scales of the middle-thirds set."""
    if h_min <= 0.0:
        raise ValueError("h_min must be positive")
    h = h0
    while True:
        if stair(x + h) - stair(x - h) <= eps:
            return 0
        if h <= h_min:
            return 1
        h /= 3.0


def spec_from_json(obj):
    """Build a SetSpec from the JSON description format.

    {"type": "cantor" | "gap_ifs" | "finite" | "harmonic" | "interval", ...}
    with optional "scale" and "translate" keys (scale applied first).
    """
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("set spec must be an object with a 'type' key")
    kind = obj["type"]
    if kind == "cantor":
        spec = TernaryCantor()
    elif kind == "gap_ifs":
        spec = GapIFS(tuple(obj["ratios"]), tuple(obj["offsets"]))
    elif kind == "finite":
        spec = FinitePoints(tuple(obj["points"]))
    elif kind == "harmonic":
        spec = HarmonicCluster()
    elif kind == "interval":
        spec = FullInterval(float(obj["lo"]), float(obj["hi"]))
    else:
        raise ValueError(f"unknown set type {kind!r}")
    if "scale" in obj:
        spec = Scale(spec, float(obj["scale"]))
    if "translate" in obj:
        spec = Translate(spec, float(obj["translate"]))
    return spec


def spec_to_json(spec):
    """Inverse of spec_from_json for the supported shapes."""
    wrap = {}
    while isinstance(spec, (Translate, Scale)):
        if isinstance(spec, Translate):
            wrap["translate"] = wrap.get("translate", 0.0) + spec.shift
        else:
            wrap["scale"] = wrap.get("scale", 1.0) * spec.factor
        spec = spec.inner
    if isinstance(spec, TernaryCantor):
        base = {"type": "cantor"}
    elif isinstance(spec, GapIFS):
        base = {"type": "gap_ifs", "ratios": list(spec.ratios),
                "offsets": list(spec.offsets)}
    elif isinstance(spec, FinitePoints):
        base = {"type": "finite", "points": list(spec.points)}
    elif isinstance(spec, HarmonicCluster):
        base = {"type": "harmonic"}
    elif isinstance(spec, FullInterval):
        base = {"type": "interval", "lo": spec.lo, "hi": spec.hi}
    else:
        raise ValueError(f"cannot serialize {type(spec).__name__}")
    base.update(wrap)
    return base
