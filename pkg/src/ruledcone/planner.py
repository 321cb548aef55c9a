"""Exact inflation planning between normalized cone classes.

Every recipe is derived from the intersection pairing, never transcribed:
the published display of the transport recipes contains sign and role
slips (see `detected_discrepancies`), so the solver
recomputes each family from `pd_area_vector` and the recipes' published
conclusions are asserted as tests instead of assumed.

Move catalogue (all parameters solved exactly, all steps replay-checked):

  right     (F, t): areas (mu+t, 1, c); unbounded, stratum-blind.
  drop      (E, t): lowers the blow-up area at fixed mu; always available.
  vertical  raise the blow-up area at fixed normalized mu by combining the
            stratum's section-type class Z with F-E; solving
            u + t1 PD(Z) + t2 PD(F-E) for fixed mu and target c gives
              t1 = f (c2 - c) / ((mu - c2) (Z.F) - Z.B + Z.E),
              t2 = t1 (mu (Z.F) - Z.B).
            Near a wall neither single-class order satisfies its range even
            though the straight path stays positive, so the pair is realized
            as N interleaved rounds (admissibility, Z.(F-E) >= 0, is what
            makes the interleaving converge).
  left hop  inflate along Z together with (1 - Z.B) t fibers so the family
            is (mu+t, 1+t, ...); the solved parameter for a normalized start
            is t = (mu - mu') / (mu' - 1).  One hop reaches mu' down to a
            bound where the area of Z hits zero; the planner chains hops
            (targets picked as smallest-denominator rationals near the
            bound, with blow-up-area drops in between) toward the limiting
            wall max(1, k).

The open stratum guarantees a section B + xF for *some* x <= g only, so the
x used by each step is recorded as that step's assumption; where x is free
the planner searches x = g, g-1, ..., 0 and keeps the first that works.

Internally a cone point is a plain triple (b, f, e) of areas; the public
surface speaks NormalizedClass / InflationStep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cone import (NormalizedClass, area, chamber_of, is_valid, normalized,
                   require_valid)
from .inflation import (InflationStep, apply_step, normalize, pd_area_vector,
                        raw_from, t_range_raw)
from .lattice import B, E, F, ClassVector, SurfaceParams, pair
from .rationals import format_rational, simplest_between
from .strata import OPEN_LABEL, StratumLabel, stratum_labels

_Q = Fraction
_ONE = _Q(1)

ALWAYS = "always"
OPEN = "open"
STRATUM = "stratum"

_FE = F - E
_MAX_HOPS = 256
_MAX_ROUNDS = 1 << 20

# (b-increment, f-increment, e-increment, self-intersection) per class
_PD3: dict[ClassVector, tuple[Fraction, Fraction, Fraction, int]] = {}


def _pd3(z: ClassVector) -> tuple[Fraction, Fraction, Fraction, int]:
    hit = _PD3.get(z)
    if hit is None:
        v = pd_area_vector(z)
        hit = (v.b_area, v.f_area, v.e_area[0], pair(z, z))
        _PD3[z] = hit
    return hit


State = tuple[Fraction, Fraction, Fraction]


def _state_of(u: NormalizedClass) -> State:
    return (u.mu, _ONE, u.c)


def _area3(state: State, z: ClassVector) -> Fraction:
    b, f, e = state
    return z.p * b + z.q * f + z.r[0] * e


def _apply3(state: State, z: ClassVector, t: Fraction) -> State:
    db, df, de, _ = _pd3(z)
    b, f, e = state
    return (b + t * db, f + t * df, e + t * de)


def _steps_valid3(state: State, steps) -> bool:
    for step in steps:
        a = _area3(state, step.z)
        if a <= 0:
            return False
        zz = _pd3(step.z)[3]
        if zz < 0 and step.t * (-zz) >= a:
            return False
        state = _apply3(state, step.z, step.t)
    return True


class PlanError(ValueError):
    """No valid plan: the message names the binding constraint."""


def _assumption_for(z: ClassVector) -> str:
    if z in (F, E, _FE):
        return ALWAYS
    if z.p == 1 and z.q >= 0 and z.r == (0,):
        return OPEN
    return STRATUM


def _step(z: ClassVector, t: Fraction) -> InflationStep:
    return InflationStep(z, t, _assumption_for(z))


@dataclass(frozen=True)
class InflationPlan:
    """A replay-checked sequence of inflation steps from start to end."""

    start: NormalizedClass
    steps: tuple[InflationStep, ...]
    end: NormalizedClass
    label: StratumLabel | None = None

    def intermediates(self) -> list[NormalizedClass]:
        """Normalized points after each step (the last one equals `end`)."""
        out = []
        raw = raw_from(self.start)
        for step in self.steps:
            raw = apply_step(raw, step)
            out.append(normalize(raw))
        return out

    def replay(self) -> NormalizedClass:
        """Re-run the steps, enforcing every range, and return the endpoint."""
        raw = raw_from(self.start)
        for step in self.steps:
            bound = t_range_raw(raw, step.z)  # raises if area(z) <= 0
            if bound is not None and step.t >= bound:
                raise PlanError(
                    f"step ({step.z}, {format_rational(step.t)}) exceeds its"
                    f" range [0, {format_rational(bound)})")
            raw = apply_step(raw, step)
        return normalize(raw)

    def stays_in_chamber(self) -> bool:
        """Whether every intermediate point is valid and in the start chamber."""
        if not is_valid(self.start) or not is_valid(self.end):
            return False
        cid = chamber_of(self.start)
        return cid.contains(self.end) and all(
            is_valid(v) and cid.contains(v) for v in self.intermediates())

    def as_json(self) -> dict:
        return {
            "start": {"mu": format_rational(self.start.mu),
                      "e": [format_rational(x) for x in self.start.e]},
            "end": {"mu": format_rational(self.end.mu),
                    "e": [format_rational(x) for x in self.end.e]},
            "label": self.label.name if self.label is not None else None,
            "steps": [s.as_json() for s in self.steps],
            "stays_in_chamber": self.stays_in_chamber(),
        }


def _finish_plan(start: NormalizedClass, steps: list[InflationStep],
                 label: StratumLabel | None = None) -> InflationPlan:
    """Assemble a plan, certifying every range along the way."""
    kept = tuple(s for s in steps if s.t != 0)
    state = _state_of(start)
    for step in kept:
        a = _area3(state, step.z)
        if a <= 0:
            raise PlanError(f"{step.z} has non-positive area"
                            f" {format_rational(a)} mid-plan")
        zz = _pd3(step.z)[3]
        if zz < 0 and step.t * (-zz) >= a:
            raise PlanError(
                f"step ({step.z}, {format_rational(step.t)}) exceeds its"
                f" range [0, {format_rational(a / -zz)})")
        state = _apply3(state, step.z, step.t)
    b, f, e = state
    if f <= 0:  # pragma: no cover - impossible for valid inflation chains
        raise PlanError("fiber area collapsed")
    end = NormalizedClass(b / f, (e / f,))
    return InflationPlan(start, kept, end, label)


# -- vertical moves ----------------------------------------------------------


def _vertical_solve(state: State, z1: ClassVector,
                    c_target: Fraction) -> tuple[Fraction, Fraction]:
    """Solve state + t1 PD(z1) + t2 PD(F-E) for unchanged normalized mu and
    normalized blow-up area c_target.  Raises when no positive solution
    exists (the recipe's feasibility constraint)."""
    vb, vf, ve, _ = _pd3(z1)
    b, f, e = state
    mu = b / f
    den = (mu - c_target) * vf - vb + ve
    if den <= 0:
        raise PlanError(
            f"raising the blow-up area to {format_rational(c_target)} along"
            f" {z1} and {_FE} needs mu >"
            f" {format_rational(vb - ve + c_target * vf)}"
            f" (mu = {format_rational(mu)}): no positive solution")
    t1 = f * (c_target - e / f) / den
    t2 = t1 * (mu * vf - vb)
    if t1 <= 0 or t2 < 0:  # pragma: no cover - den>0 and c_target>c ensure this
        raise PlanError(f"vertical solve along {z1} gave non-positive"
                        f" parameters t1={t1}, t2={t2}")
    return t1, t2


def _interleaved(state: State, first: tuple[ClassVector, Fraction],
                 second: tuple[ClassVector, Fraction]) -> list[InflationStep]:
    """Realize a simultaneous two-class inflation as N valid rounds."""
    rounds = 1
    while rounds <= _MAX_ROUNDS:
        steps = []
        for _ in range(rounds):
            steps.append(_step(first[0], first[1] / rounds))
            steps.append(_step(second[0], second[1] / rounds))
        if _steps_valid3(state, steps):
            return steps
        rounds *= 2
    raise PlanError("could not realize the simultaneous inflation as"
                    " interleaved steps")  # pragma: no cover


def _vertical_steps(state: State, c_target: Fraction, label: StratumLabel,
                    params: SurfaceParams,
                    x: int | None = None) -> list[InflationStep]:
    """Steps moving normalized (mu, c) to (mu, c_target) from `state`."""
    b, f, e = state
    c = e / f
    if c_target == c:
        return []
    if c_target < c:
        return [_step(E, f * (c - c_target))]  # an embedded E always exists
    if label.is_open:
        choices = [x] if x is not None else list(range(params.g, -1, -1))
        last_err: PlanError | None = None
        for xx in choices:
            if not 0 <= xx <= params.g:
                raise PlanError(f"section coefficient x={xx} outside 0..{params.g}")
            try:
                t1, t2 = _vertical_solve(state, B + xx * F, c_target)
            except PlanError as err:
                last_err = err
                continue
            # B+xF has square 2x >= 0; applying it first always stays in range
            return [_step(B + xx * F, t1), _step(_FE, t2)]
        assert last_err is not None
        raise last_err
    if len(label.core) != 1:
        raise PlanError(f"no transport recipe for the multi-class label"
                        f" {label.name}")
    z = label.core[0]
    t1, t2 = _vertical_solve(state, z, c_target)
    return _interleaved(state, (_FE, t2), (z, t1))


# -- leftward moves ----------------------------------------------------------


def stratum_left_parameter(u: NormalizedClass, z: ClassVector,
                           mu_target: Fraction) -> Fraction:
    """Solved parameter t of the leftward hop along z from a normalized start.

    The hop inflates along z and (1 - z.B) t fibers simultaneously, so the
    base-area slot of the family grows by exactly t per unit; solving
    (mu + t) / (1 + t) = mu_target gives the closed form.
    """
    vb = _pd3(z)[0]
    if 1 - vb < 0:
        raise PlanError(f"{z} is not a leftward class")
    mu_target = _Q(mu_target)
    if not 1 < mu_target < u.mu:
        raise PlanError(f"leftward target must lie in (1, mu); got"
                        f" {format_rational(mu_target)}")
    # increment per unit t is (1, 1, ...): base and fiber slots both +1
    return (u.mu - mu_target) / (mu_target - 1)


def _left_hop(state: State, z: ClassVector,
              mu_target: Fraction) -> list[InflationStep]:
    """One leftward hop: fiber companion first, then z (replay-safe order)."""
    companion = 1 - _pd3(z)[0]
    b, f, _ = state
    t = (b - mu_target * f) / (mu_target - 1)
    if t <= 0:
        raise PlanError(f"hop target {format_rational(mu_target)} is not to"
                        " the left of the current point")
    steps = []
    if companion > 0:
        steps.append(_step(F, companion * t))
    steps.append(_step(z, t))
    return steps


def _left_reach_bound(state: State, z: ClassVector) -> Fraction:
    """Infimum of normalized mu reachable by a single hop along z.

    Along the hop the area of z changes by (z.z + 1 - z.B) per unit t; when
    that drift is negative the hop dies where the area of z hits zero, which
    is the wall of z.  Returns 1 when the drift is non-negative (any target
    above 1 is reachable in one hop)."""
    vb, _, _, zz = _pd3(z)
    drift = zz + 1 - vb
    if drift >= 0:
        return _ONE
    a = _area3(state, z)
    return ((-drift) * state[0] + a) / ((-drift) * state[1] + a)


def _hop_limit(z: ClassVector) -> Fraction:
    """Infimum of normalized mu reachable by iterated hops along z (with
    interleaved blow-up-area drops): the wall position at vanishing blow-up
    area, max(1, k)."""
    return _Q(max(1, -z.q))


def _left_route(state: State, mu_target: Fraction, z: ClassVector,
                c_cap: Fraction) -> list[InflationStep]:
    """Chained hops along z down to normalized mu_target.

    A hop along B-kF-E raises the normalized blow-up area, which in turn
    worsens the next reach bound, so the area is dropped back to a floor
    between hops (an embedded E always exists).  The floor
    (mu_target - limit)/2 pins the hop attractor, the wall of z at the
    shrunken blow-up area, strictly left of mu_target; c_cap additionally
    caps it (the caller never wants the area raised here).
    """
    limit = _hop_limit(z)
    if mu_target <= limit:
        raise PlanError(
            f"mu' = {format_rational(mu_target)} is unreachable along {z}:"
            f" iterated hops are bounded by the wall at {format_rational(limit)}")
    c_floor = min(c_cap, (mu_target - limit) / 2)
    steps: list[InflationStep] = []
    for _ in range(_MAX_HOPS):
        bound = _left_reach_bound(state, z)
        if mu_target > bound:
            steps.extend(_left_hop(state, z, mu_target))
            return steps
        b, f, e = state
        c = e / f
        if c > c_floor:
            drop = _step(E, f * (c - c_floor))
            steps.append(drop)
            state = _apply3(state, E, drop.t)
            continue
        mu_now = b / f
        if bound >= mu_now:  # pragma: no cover - guarded by area checks
            raise PlanError(f"no leftward progress possible along {z}")
        # aim just right of the bound; small denominators keep plans compact
        hop_to = simplest_between(bound, bound + (mu_now - bound) / 8)
        for s in _left_hop(state, z, hop_to):
            steps.append(s)
            state = _apply3(state, s.z, s.t)
    raise PlanError(
        f"leftward target {format_rational(mu_target)} not reached along {z}"
        f" within {_MAX_HOPS} hops; the binding constraint is the wall of {z}")


# -- the published recipe surface -------------------------------------------


def plan_vertical(u: NormalizedClass, c_target, label: StratumLabel,
                  params: SurfaceParams, x: int | None = None) -> InflationPlan:
    """Transport (mu, c) -> (mu, c_target) inside the stratum of `label`."""
    require_valid(u)
    c_target = _Q(c_target)
    if not 0 < c_target < 1:
        raise PlanError(f"target blow-up area must lie in (0, 1), got"
                        f" {format_rational(c_target)}")
    _check_label_present(u, label)
    steps = _vertical_steps(_state_of(u), c_target, label, params, x)
    return _finish_plan(u, steps, label)


def plan_right(u: NormalizedClass, mu_target) -> InflationPlan:
    """Increase mu at fixed c by inflating along the fiber; stratum-blind."""
    require_valid(u)
    mu_target = _Q(mu_target)
    if mu_target < u.mu:
        raise PlanError(f"rightward target {format_rational(mu_target)} is"
                        f" below mu = {format_rational(u.mu)}")
    return _finish_plan(u, [_step(F, mu_target - u.mu)])


def plan_left_open(u: NormalizedClass, mu_target, params: SurfaceParams,
                   x: int | None = None) -> InflationPlan:
    """Decrease mu on the open stratum along a section B + xF, then restore c.

    The normalized base area along the section hop is x + (mu - x)/(1 + t),
    strictly decreasing with limit x, so targets at or below x are
    unreachable; with x <= g every target above g works.
    """
    require_valid(u)
    mu_target = _Q(mu_target)
    if mu_target == u.mu:
        return _finish_plan(u, [], OPEN_LABEL)
    x = params.g if x is None else x
    if not 0 <= x <= params.g:
        raise PlanError(f"section coefficient x={x} outside 0..{params.g}")
    if mu_target <= x:
        raise PlanError(f"mu' = {format_rational(mu_target)} is unreachable"
                        f" along B+{x}F: the normalized limit is {x}")
    if not params.g < mu_target < u.mu:
        raise PlanError(f"open-stratum leftward targets must lie in"
                        f" ({params.g}, {format_rational(u.mu)}), got"
                        f" {format_rational(mu_target)}")
    t = (u.mu - mu_target) / (mu_target - x)
    steps = [_step(B + x * F, t)]
    state = _apply3(_state_of(u), steps[0].z, t)
    steps += _vertical_steps(state, u.c, OPEN_LABEL, params)
    return _finish_plan(u, steps, OPEN_LABEL)


def plan_left_stratum(u: NormalizedClass, mu_target, label: StratumLabel,
                      params: SurfaceParams) -> InflationPlan:
    """Decrease mu inside a positive-codimension stratum, then restore c."""
    require_valid(u)
    mu_target = _Q(mu_target)
    if label.is_open or len(label.core) != 1:
        raise PlanError("leftward stratum moves need a single-class label")
    if mu_target == u.mu:
        _check_label_present(u, label)
        return _finish_plan(u, [], label)
    if not 1 < mu_target < u.mu:
        raise PlanError(f"leftward targets must lie in (1,"
                        f" {format_rational(u.mu)}), got"
                        f" {format_rational(mu_target)}")
    _check_label_present(u, label)
    z = label.core[0]
    steps = _left_route(_state_of(u), mu_target, z, u.c)
    state = _state_of(u)
    for s in steps:
        state = _apply3(state, s.z, s.t)
    steps += _vertical_steps(state, u.c, label, params)
    return _finish_plan(u, steps, label)


def _check_label_present(u: NormalizedClass, label: StratumLabel) -> None:
    for a in label.classes():
        if area(u, a) <= 0:
            raise PlanError(f"label {label.name} is absent at {u}:"
                            f" {a} has non-positive area")


def plan(u1: NormalizedClass, u2: NormalizedClass, label: StratumLabel,
         params: SurfaceParams, x: int | None = None) -> InflationPlan:
    """Certified transport u1 -> u2 inside one chamber and one stratum.

    Route: rightward or leftward leg to mu2 first (stratum-dictated class),
    then the vertical leg to c2.  Every step is replay-checked; failures
    raise PlanError naming the violated recipe precondition.
    """
    require_valid(u1)
    require_valid(u2)
    cid = chamber_of(u1)
    if not cid.contains(u2):
        raise PlanError(
            f"{u1} and {u2} lie in chambers {cid.index} and"
            f" {chamber_of(u2).index}; cross-chamber transport is out of scope")
    if label.is_open:
        if not (u1.mu > params.g and u2.mu > params.g):
            raise PlanError(f"open-stratum transport needs mu > g ="
                            f" {params.g} at both endpoints")
    else:
        if not (u1.mu > 1 and u2.mu > 1):
            raise PlanError("stratum transport needs mu > 1 at both endpoints")
        _check_label_present(u1, label)
    if u1 == u2:
        return _finish_plan(u1, [], label)

    steps: list[InflationStep] = []
    state = _state_of(u1)
    if u2.mu > u1.mu:
        steps.append(_step(F, u2.mu - u1.mu))
        state = _apply3(state, F, steps[-1].t)
    elif u2.mu < u1.mu:
        if label.is_open:
            xx = params.g if x is None else x
            if not 0 <= xx <= params.g:
                raise PlanError(f"section coefficient x={xx} outside"
                                f" 0..{params.g}")
            if u2.mu <= xx:
                raise PlanError(f"mu' = {format_rational(u2.mu)} unreachable"
                                f" along B+{xx}F: the normalized limit is {xx}")
            t = (u1.mu - u2.mu) / (u2.mu - xx)
            steps.append(_step(B + xx * F, t))
            state = _apply3(state, steps[-1].z, t)
        else:
            left = _left_route(state, u2.mu, label.core[0], min(u1.c, u2.c))
            steps.extend(left)
            for s in left:
                state = _apply3(state, s.z, s.t)
    steps += _vertical_steps(state, u2.c, label, params, x)
    result = _finish_plan(u1, steps, label)
    if result.end != u2:  # pragma: no cover - replay exactness guard
        raise PlanError(f"plan replay ended at {result.end}, expected {u2}")
    return result


# -- grid verification of intra-chamber transport ----------------------------


@dataclass
class ChamberVerdict:
    index: int
    points: int
    labels: list[str]
    checked: int = 0
    passed: int = 0
    failed: int = 0
    first_failure: dict | None = None

    def as_json(self) -> dict:
        return {
            "chamber": self.index, "points": self.points,
            "labels": self.labels, "checked": self.checked,
            "passed": self.passed, "failed": self.failed,
            "first_failure": self.first_failure,
        }


@dataclass
class StabilityReport:
    """Per-chamber tallies of certified two-way transport on a grid."""

    g: int
    mu_min: Fraction
    mu_max: Fraction
    grid_step: Fraction
    min_index: int
    chambers: list[ChamberVerdict]
    skipped_chambers: list[int]
    cross_chamber_pairs: int

    @property
    def ok(self) -> bool:
        return all(v.failed == 0 for v in self.chambers)

    def as_json(self) -> dict:
        return {
            "g": self.g,
            "mu_min": format_rational(self.mu_min),
            "mu_max": format_rational(self.mu_max),
            "grid_step": format_rational(self.grid_step),
            "min_chamber_index": self.min_index,
            "ok": self.ok,
            "chambers": [v.as_json() for v in self.chambers],
            "skipped_chambers": self.skipped_chambers,
            "cross_chamber_pairs": self.cross_chamber_pairs,
        }


def _verify_chamber(args) -> ChamberVerdict:
    params, index, points = args
    labels = stratum_labels(points[0], params)
    verdict = ChamberVerdict(index=index, points=len(points),
                             labels=[lb.name for lb in labels])
    for ua, ub in itertools.combinations(points, 2):
        for label in labels:
            for src, dst in ((ua, ub), (ub, ua)):
                verdict.checked += 1
                try:
                    plan(src, dst, label, params)
                    verdict.passed += 1
                except PlanError as err:
                    verdict.failed += 1
                    if verdict.first_failure is None:
                        verdict.first_failure = {
                            "from": str(src), "to": str(dst),
                            "label": label.name, "error": str(err),
                        }
    return verdict


def verify_stability(params: SurfaceParams, mu_max, grid_step,
                     mu_min=None, min_index: int | None = None,
                     workers: int = 1) -> StabilityReport:
    """Check two-way transport for every same-chamber grid pair and label.

    Grid: mu in (mu_min, mu_max] and c in (0, 1), both stepped by grid_step;
    mu_min defaults to max(1, g).  Chambers with index below min_index
    (default 2g) are recorded as skipped, not attempted.  Cross-chamber
    pairs are out of scope and only counted.
    """
    if params.n != 1:
        raise ValueError("stability verification is defined for n = 1 only")
    mu_max = _Q(mu_max)
    grid_step = _Q(grid_step)
    if grid_step <= 0:
        raise ValueError("grid step must be positive")
    mu_min = _Q(max(1, params.g)) if mu_min is None else _Q(mu_min)
    if min_index is None:
        min_index = 2 * params.g

    by_chamber: dict[int, list[NormalizedClass]] = {}
    mu = mu_min + grid_step
    while mu <= mu_max:
        c = grid_step
        while c < 1:
            u = normalized(mu, c)
            if is_valid(u):
                by_chamber.setdefault(chamber_of(u).index, []).append(u)
            c += grid_step
        mu += grid_step

    total_points = sum(len(pts) for pts in by_chamber.values())
    same_chamber_pairs = sum(len(pts) * (len(pts) - 1) // 2
                             for pts in by_chamber.values())
    cross = total_points * (total_points - 1) // 2 - same_chamber_pairs

    skipped = sorted(i for i in by_chamber if i < min_index)
    tasks = [(params, i, by_chamber[i])
             for i in sorted(by_chamber) if i >= min_index]

    if workers > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            verdicts = pool.map(_verify_chamber, tasks)
    else:
        verdicts = [_verify_chamber(t) for t in tasks]

    return StabilityReport(
        g=params.g, mu_min=mu_min, mu_max=mu_max, grid_step=grid_step,
        min_index=min_index, chambers=verdicts, skipped_chambers=skipped,
        cross_chamber_pairs=cross)


# -- discrepancy detection ----------------------------------------------------


def detected_discrepancies(params: SurfaceParams | None = None) -> list[dict]:
    """The arithmetic slips in the published recipes, re-derived, not transcribed.

    Each record carries the stated expression, the recomputed one, and a
    `detected` flag set by actually evaluating both sides on sample data, so
    a silent transcription of the slip into this library would flip the flag
    and fail the build.
    """
    del params  # the records are parameter-independent; kept for CLI symmetry
    items = []

    # 1. Fixed-mu transport on the open stratum: the displayed increment sum
    # swaps the roles of the two parameters, and the displayed solutions
    # solve that swapped system.  Replaying them misses the target.
    sample = []
    for mu, x, c1, c2 in [(_Q(3), 1, _Q(1, 4), _Q(1, 2)),
                          (_Q(4), 2, _Q(1, 3), _Q(2, 3)),
                          (_Q(5), 0, _Q(1, 5), _Q(4, 5))]:
        u = normalized(mu, c1)
        t2_stated = (c2 - c1) / (1 - c2)
        t1_stated = (mu - x) * t2_stated
        raw = apply_step(apply_step(raw_from(u), InflationStep(B + x * F, t1_stated)),
                         InflationStep(_FE, t2_stated))
        stated_end = normalize(raw)
        t1 = (c2 - c1) / (mu - x - c2)
        t2 = (mu - x) * t1
        raw = apply_step(apply_step(raw_from(u), InflationStep(B + x * F, t1)),
                         InflationStep(_FE, t2))
        recomputed_end = normalize(raw)
        sample.append(recomputed_end == normalized(mu, c2)
                      and stated_end != normalized(mu, c2))
    items.append({
        "id": "vertical-transport-solutions",
        "context": "fixed-mu transport raising the blow-up area (open stratum,"
                   " classes B+xF and F-E; same slip in the B-kF case, whose"
                   " stated blow-up-area condition carries a spurious t1 term"
                   " although B-kF pairs trivially with E)",
        "stated": "t1 = (mu-x)*t2 with (1-c2)*t2 = c2-c1",
        "recomputed": "t1 = (c2-c1)/(mu-x-c2), t2 = (mu-x)*t1;"
                      " positive solutions need mu > x + c2",
        "detected": all(sample),
    })

    # 2. Leftward inflation family along B-kF-E: the displayed family has +t
    # in the base slot, but PD(B-kF-E) contributes -k there.  The displayed
    # family is the combination with (k+1)t fibers, for which the closed
    # form t = (mu-mu')/(mu'-1) is exact.
    slots_differ = all(
        pd_area_vector(B - k * F - E).b_area == -k != 1 for k in range(1, 5))
    items.append({
        "id": "left-inflation-family",
        "context": "leftward inflation along B-kF-E (and B-kF, same slip)",
        "stated": "family (mu+t, 1+t, c1+t) for t*PD(B-kF-E)",
        "recomputed": "t*PD(B-kF-E) adds (-k, 1, 1) per unit t; the stated"
                      " family is the combination with (k+1)t fibers, under"
                      " which t = (mu-mu')/(mu'-1) is exact (a single-class"
                      " parameter would solve to (mu-mu')/(mu'+k))",
        "detected": slots_differ,
    })

    # 3. Virtual dimension of B+gF: the stated inline evaluation collapses to
    # the constant 2; the adjunction-consistent canonical class gives g+1.
    from .gromov import virtual_dim_k

    diffs = [virtual_dim_k(B + g * F, SurfaceParams(g)) for g in range(1, 5)]
    items.append({
        "id": "section-virtual-dimension",
        "context": "existence of a section on the open stratum via the"
                   " curve count of B+gF",
        "stated": "k(B+gF) = 2g+2-2g = 2",
        "recomputed": "k(B+gF) = (-K.(B+gF) + (B+gF).(B+gF))/2 = g+1 with"
                      " K = -2B+(2g-2)F+E (the two agree only at g = 1);"
                      " still >= 0, so the curve count stays valid",
        "detected": diffs == [_Q(g + 1) for g in range(1, 5)] and
                    any(d != 2 for d in diffs),
    })
    return items
