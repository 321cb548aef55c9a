"""The normalized symplectic cone of the one-point blow-up and its chambers.

A normalized class is u = (mu, 1, e_1, ..., e_n): the areas of B, F and the
exceptional spheres, with the fiber area scaled to 1.  Valid classes satisfy

    mu > 0,  0 < e_i < 1,  e_1 >= e_2 >= ... >= e_n,
    e_1 + e_2 < 1 (n >= 2),  e_1 < mu,

plus the policy mu >= 1: the leftmost region of the cone is bounded by the
Gromov width of the minimal surface, which is unknown in general and not
representable by linear inequalities, so it is excluded outright.

For n = 1 the cone is partitioned into half-open chambers indexed by the
walls the class sits between:

    chamber 2k:    k < mu <= k + c        (between walls B-kF and B-kF-E)
    chamber 2k+1:  k + c < mu <= k + 1    (between walls B-kF-E and B-(k+1)F)

where c = e_1.  A point on a wall belongs to the chamber on its left: the
inequality signs are strict on the left condition and non-strict on the
right, matching the half-open intervals of the minimal case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import B, E, F, ClassVector
from .rationals import format_rational

_Q = Fraction


@dataclass(frozen=True)
class NormalizedClass:
    """Areas (mu, 1, e_1 ... e_n) of B, F, E_1 ... E_n, exact rationals.

    Instances are plain data; they may violate the cone constraints (so that
    `is_valid` can report on them).  Use `validity_violations` to check.
    """

    mu: Fraction
    e: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", _Q(self.mu))
        object.__setattr__(self, "e", tuple(_Q(x) for x in self.e))

    @property
    def n(self) -> int:
        return len(self.e)

    @property
    def c(self) -> Fraction:
        """Blow-up area e_1, the vertical coordinate of the n=1 cone picture."""
        return self.e[0]

    def __str__(self) -> str:
        areas = ", ".join(format_rational(x) for x in (self.mu, *self.e))
        return f"({areas})"


def normalized(mu, c) -> NormalizedClass:
    """n = 1 convenience constructor."""
    return NormalizedClass(_Q(mu), (_Q(c),))


def area(u: NormalizedClass, a: ClassVector) -> Fraction:
    """Symplectic area p*mu + q + sum r_i e_i of the class a, linear in both."""
    if a.n != u.n:
        raise ValueError(f"class has n={a.n}, cone point has n={u.n}")
    return a.p * u.mu + a.q + sum(r * e for r, e in zip(a.r, u.e))


def validity_violations(u: NormalizedClass, policy: bool = True) -> list[str]:
    """Violated cone constraints, empty when u is a valid normalized class.

    With policy=True the global assumption mu >= 1 is enforced as well.
    """
    bad: list[str] = []
    if u.mu <= 0:
        bad.append(f"mu > 0 violated (mu = {format_rational(u.mu)})")
    for i, e in enumerate(u.e, 1):
        if not 0 < e < 1:
            bad.append(f"0 < e_{i} < 1 violated (e_{i} = {format_rational(e)})")
    for i in range(u.n - 1):
        if u.e[i] < u.e[i + 1]:
            bad.append(f"e_{i+1} >= e_{i+2} violated")
    if u.n >= 2 and u.e[0] + u.e[1] >= 1:
        bad.append("e_1 + e_2 < 1 violated")
    if u.n >= 1 and u.e[0] >= u.mu:
        bad.append(f"e_1 < mu violated (e_1 = {format_rational(u.e[0])},"
                   f" mu = {format_rational(u.mu)})")
    if policy and u.mu < 1:
        bad.append(f"mu >= 1 policy violated (mu = {format_rational(u.mu)});"
                   " the leftmost chamber is out of scope")
    return bad


def is_valid(u: NormalizedClass, policy: bool = True) -> bool:
    return not validity_violations(u, policy=policy)


def require_valid(u: NormalizedClass, policy: bool = True) -> None:
    bad = validity_violations(u, policy=policy)
    if bad:
        raise ValueError("invalid normalized class: " + "; ".join(bad))


@dataclass(frozen=True)
class ChamberId:
    """Region number of the n = 1 chamber decomposition (index >= 1)."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"chamber index must be >= 1, got {self.index}")

    @property
    def k(self) -> int:
        return self.index // 2

    @property
    def is_even(self) -> bool:
        return self.index % 2 == 0

    def defining_classes(self) -> tuple[ClassVector, ClassVector]:
        """(A_left, A_right): the chamber is area(A_left) > 0, area(A_right) <= 0."""
        k = self.k
        if self.is_even:
            return B - k * F, B - k * F - E
        return B - k * F - E, B - (k + 1) * F

    def inequalities(self) -> list[str]:
        k = self.k
        if self.is_even:
            return [f"mu > {k}", f"mu <= {k} + c"]
        return [f"mu > {k} + c", f"mu <= {k + 1}"]

    def contains(self, u: NormalizedClass) -> bool:
        # inline area(B-kF), area(B-kF-E) signs; equivalent to the
        # defining_classes inequalities but without object churn
        k = self.k
        if self.is_even:
            return k < u.mu <= k + u.c
        return k + u.c < u.mu <= k + 1


def chamber_of(u: NormalizedClass) -> ChamberId:
    """Chamber of a valid class: index 2k on k < mu <= k+c, 2k+1 on k+c < mu <= k+1."""
    require_valid(u)
    if u.n != 1:
        raise ValueError("chamber decomposition is defined for n = 1 only")
    k = math.ceil(u.mu) - 1  # the unique integer with k < mu <= k+1
    index = 2 * k if u.mu <= k + u.c else 2 * k + 1
    return ChamberId(index)


def same_chamber(u1: NormalizedClass, u2: NormalizedClass) -> bool:
    return chamber_of(u1) == chamber_of(u2)


@dataclass(frozen=True)
class Wall:
    """The locus area(u, curve_class) = 0 inside the cone."""

    curve_class: ClassVector

    @property
    def name(self) -> str:
        return str(self.curve_class)


def active_walls(u: NormalizedClass, k_max: int | None = None) -> list[Wall]:
    """Walls through u: classes B-kF, B-kF-E (1 <= k <= k_max) of zero area.

    The boundary classes E and F-E are reported too if their areas vanish,
    which cannot happen for a strictly valid u.  The mu >= 1 policy is not
    required here, only the open cone constraints.
    """
    require_valid(u, policy=False)
    if u.n != 1:
        raise ValueError("walls are enumerated for n = 1 only")
    if k_max is None:
        k_max = math.ceil(u.mu) + 1
    walls = []
    for a in (E, F - E):
        if area(u, a) == 0:
            walls.append(Wall(a))
    for k in range(1, k_max + 1):
        for a in (B - k * F, B - k * F - E):
            if area(u, a) == 0:
                walls.append(Wall(a))
    return walls


# -- figure model ------------------------------------------------------------


@dataclass(frozen=True)
class WallSegment:
    """A wall drawn as a segment in the (mu, c) strip."""

    curve_class: ClassVector
    start: tuple[Fraction, Fraction]
    end: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RegionLabel:
    chamber: ChamberId
    position: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class FigureModel:
    """Walls, cone boundaries and chamber labels of the n = 1 cone picture.

    Coordinates are (mu, c).  Vertical walls mu = k carry B-kF, slanted
    walls from (k, 0) to (k+1, 1) carry B-kF-E, and the horizontal
    boundaries c = 0, c = 1 carry E and F-E.
    """

    mu_max: Fraction
    walls: tuple[WallSegment, ...]
    boundaries: tuple[WallSegment, ...]
    labels: tuple[RegionLabel, ...]

    def to_csv(self) -> str:
        lines = ["wall_class,x1,y1,x2,y2"]
        for seg in self.walls + self.boundaries:
            coords = (*seg.start, *seg.end)
            lines.append(str(seg.curve_class) + ","
                         + ",".join(format_rational(x) for x in coords))
        return "\n".join(lines) + "\n"

    def to_svg(self, scale: int = 100) -> str:
        """Deterministic SVG: x = mu * scale, y = (1 - c) * scale."""

        def pt(p: tuple[Fraction, Fraction]) -> tuple[float, float]:
            return (float(p[0] * scale), float((1 - p[1]) * scale))

        width = float(self.mu_max * scale)
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" '
            f'height="{scale}" viewBox="0 0 {width:.2f} {scale}">',
        ]
        for seg in self.boundaries:
            (x1, y1), (x2, y2) = pt(seg.start), pt(seg.end)
            out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                       'stroke="#888888" stroke-dasharray="4 3" stroke-width="1"/>')
            lx, ly = pt(seg.start)
            out.append(f'<text x="{lx + 4:.3f}" y="{ly - 4:.3f}" font-size="10" '
                       f'fill="#888888">{seg.curve_class}</text>')
        for seg in self.walls:
            (x1, y1), (x2, y2) = pt(seg.start), pt(seg.end)
            out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                       'stroke="#000000" stroke-width="1"/>')
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            out.append(f'<text x="{mx + 3:.3f}" y="{my:.3f}" font-size="10" '
                       f'fill="#000000">{seg.curve_class}</text>')
        for label in self.labels:
            x, y = pt(label.position)
            out.append(f'<text x="{x:.3f}" y="{y:.3f}" font-size="12" '
                       f'fill="#3030a0" text-anchor="middle">{label.chamber.index}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def figure_data(mu_max, k_max: int | None = None) -> FigureModel:
    """Wall segments and chamber labels for the strip 1 <= mu <= mu_max.

    Without an explicit k_max only walls strictly inside the window are
    emitted: verticals mu = k for k < mu_max, slants (k,0)-(k+1,1) for
    k+1 < mu_max.  With k_max given: verticals k = 1..k_max and slants
    k = 0..k_max-1.
    """
    mu_max = _Q(mu_max)
    if mu_max <= 1:
        raise ValueError("mu_max must exceed 1")
    if k_max is None:
        vert_ks = range(1, math.ceil(mu_max))
        slant_ks = range(0, math.ceil(mu_max) - 1)
    else:
        vert_ks = range(1, k_max + 1)
        slant_ks = range(0, k_max)

    walls = [WallSegment(B - k * F, (_Q(k), _Q(0)), (_Q(k), _Q(1)))
             for k in vert_ks]
    walls += [WallSegment(B - k * F - E, (_Q(k), _Q(0)), (_Q(k + 1), _Q(1)))
              for k in slant_ks]

    boundaries = (
        WallSegment(E, (_Q(1), _Q(0)), (mu_max, _Q(0))),
        WallSegment(F - E, (_Q(1), _Q(1)), (mu_max, _Q(1))),
    )

    # One label per region meeting the window, at the centroid of the region
    # clipped to mu <= mu_max.  Chamber 1 meets the window only in the
    # segment mu = 1.
    labels = [RegionLabel(ChamberId(1), (_Q(1), _Q(1, 2)))]
    for k in range(1, math.ceil(mu_max)):
        lo, hi = _Q(k), min(_Q(k + 1), mu_max)
        even_region = [(lo, _Q(0)), (hi, hi - k), (hi, _Q(1)), (lo, _Q(1))]
        labels.append(RegionLabel(ChamberId(2 * k), _polygon_centroid(even_region)))
        odd_region = [(lo, _Q(0)), (hi, _Q(0)), (hi, hi - k)]
        labels.append(RegionLabel(ChamberId(2 * k + 1), _polygon_centroid(odd_region)))

    return FigureModel(mu_max=mu_max, walls=tuple(walls),
                       boundaries=tuple(boundaries), labels=tuple(labels))


def _polygon_centroid(pts: list[tuple[Fraction, Fraction]]) -> tuple[Fraction, Fraction]:
    """Exact centroid of a simple polygon given by its vertices in order."""
    twice_area = _Q(0)
    cx = cy = _Q(0)
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        cross = x1 * y2 - x2 * y1
        twice_area += cross
        cx += (x1 + x2) * cross
        cy += (y1 + y2) * cross
    if twice_area == 0:  # degenerate region, fall back to the vertex mean
        m = len(pts)
        return (sum(p[0] for p in pts) / m, sum(p[1] for p in pts) / m)
    return (cx / (3 * twice_area), cy / (3 * twice_area))
