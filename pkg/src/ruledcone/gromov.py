"""Curve counts for section classes and the stable-decomposition oracle.

For C = pB + qF on a genus-g ruled surface the curve count is

    Gr(C) = (p+1)^g,   valid when the virtual dimension
    k(C) = (c_1(C) + C.C)/2 = (-K.C + C.C)/2 is non-negative,

and Gr(C) != 0 whenever q >= g-1.  The decomposition oracle backs the
open-stratum section argument: it enumerates every way B + gF can split
into components with non-negative base and fiber coefficients, confirms
each splitting has exactly one component with base coefficient 1, and
reports whether that component is a plain section B + xF (x <= g) or
carries an exceptional term.  Components with exceptional terms are
reported, never suppressed: ruling them out is not part of the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cone import NormalizedClass, area, normalized, require_valid
from .lattice import ClassVector, SurfaceParams, canonical_class, pair

_Q = Fraction


def virtual_dim_k(c: ClassVector, params: SurfaceParams) -> Fraction:
    """Virtual dimension k(C) = (-K.C + C.C)/2, exact (integrality reported
    by the caller, not assumed)."""
    k = canonical_class(params)
    return _Q(-pair(k, c) + pair(c, c), 2)


def gromov_invariant(p: int, q: int, params: SurfaceParams) -> int:
    """Gr(pB + qF) = (p+1)^g, defined when k(C) >= 0."""
    c = ClassVector(p, q, (0,) * params.n)
    k = virtual_dim_k(c, params)
    if k < 0:
        raise ValueError(
            f"k({c}) = {k} < 0: the closed curve-count formula does not apply")
    return (p + 1) ** params.g


def gromov_nonzero_criterion(p: int, q: int, params: SurfaceParams) -> bool:
    """The sufficient nonvanishing condition q >= g - 1 (for g = 0: p, q >= 0
    and p + q > 0)."""
    if params.g == 0:
        return p >= 0 and q >= 0 and p + q > 0
    return q >= params.g - 1


@dataclass(frozen=True)
class Decomposition:
    """A multiset of components summing to a fixed total class."""

    parts: tuple[ClassVector, ...]

    def total(self) -> ClassVector:
        out = self.parts[0]
        for a in self.parts[1:]:
            out = out + a
        return out

    def section_parts(self) -> tuple[ClassVector, ...]:
        return tuple(a for a in self.parts if a.p == 1)

    def as_json(self) -> dict:
        section = self.section_parts()
        sec = section[0] if len(section) == 1 else None
        return {
            "parts": [str(a) for a in self.parts],
            "section": str(sec) if sec is not None else None,
            "plain_section": bool(sec is not None and sec.r == (0,)),
            "section_fiber_coefficient": sec.q if sec is not None else None,
        }


def section_decompositions(params: SurfaceParams, q_bound: int,
                           u: NormalizedClass | None = None,
                           r_bound: int = 1) -> list[Decomposition]:
    """All splittings of B + gF into parts pB + qF + rE with p in {0, 1},
    0 <= q <= q_bound, |r| <= r_bound, zero total exceptional coefficient,
    and positive area at u (default: (g+1, 1, 1/2), inside the mu > g range).

    The bound |r| <= 1 mirrors the one blow-up class available; it is a
    parameter so the restriction stays visible.
    """
    if params.n != 1:
        raise ValueError("the decomposition oracle is defined for n = 1 only")
    if q_bound < params.g:
        raise ValueError(f"q_bound must be at least g = {params.g}")
    if u is None:
        u = normalized(params.g + 1, _Q(1, 2))
    require_valid(u)

    def allowed(a: ClassVector) -> bool:
        return not a.is_zero() and area(u, a) > 0

    # fiber-type parts (p = 0), largest-first for canonical multiset order
    fiber_parts = [ClassVector(0, q, (r,))
                   for q in range(q_bound, -1, -1)
                   for r in range(r_bound, -r_bound - 1, -1)]
    fiber_parts = [a for a in fiber_parts if allowed(a)]

    out: list[Decomposition] = []

    def extend(prefix: list[ClassVector], q_left: int, r_left: int,
               start: int) -> None:
        if q_left == 0 and r_left == 0:
            out.append(Decomposition(tuple(sorted(prefix))))
            return  # any further nonzero part would break the remainder
        # remaining parts can reach at worst -q_left * r_bound in total
        # exceptional weight (each negative-r part carries fiber weight)
        if r_left < -q_left * r_bound or (q_left == 0 and r_left < 0):
            return
        for i in range(start, len(fiber_parts)):
            a = fiber_parts[i]
            if a.q > q_left:
                continue
            prefix.append(a)
            extend(prefix, q_left - a.q, r_left - a.r[0], i)
            prefix.pop()

    for x in range(0, min(params.g, q_bound) + 1):
        for r in range(-r_bound, r_bound + 1):
            section = ClassVector(1, x, (r,))
            if not allowed(section):
                continue
            extend([section], params.g - x, -r, 0)

    out.sort(key=lambda d: d.parts)
    return out
