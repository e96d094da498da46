"""Parametrized bound families for multipartite entanglement.

The machinery rests on one elementary inequality: for 0 < p <= 1,
0 <= t <= p and 0 <= x <= 1,

    (1 + t)^x <= Omega + Upsilon * t^x,
    Omega   = 1 + x*t/(1+p)^2,
    Upsilon = ((1+p)^x - 1)/p^x - x*p/((1+p)^2 * p^x),

which is exact at p = t and at x in {0, 1}.  Applied recursively over an
ordered grouping of squared pair CoA values it yields the grouped upper
bound ``theta`` on the x-th power of a one-versus-rest squared
concurrence, and from theta the monogamy/polygamy bounds for the AB|rest
and ABC1|rest cuts, their negativity analogues, and the multi-focus
polygamy bound.  The looser literature bounds appear as comparators:
the p=1 specialization and the coefficient chains (2^x - 1)^(l-1),
x^(l-1) and 1.

Convention used throughout: 0^0 := 1 and v^0 := 1, so exponent-zero
curves are defined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import rng
from .linalg import TAU_NUM
from .measures import (
    Bipartition,
    cren_crenoa_two_qubit,
    negativity,
    pure_concurrence,
    reduced_density,
    schmidt_rank,
)
from .states import PureState

P_FLOOR = 1e-6        # lower clamp for auto-chosen p (avoids p=0 at t=0)
_FEAS_SLACK = 1e-12   # numerical slack in admissibility comparisons

COMPARATOR_NAMES = ("p1_specialization", "pow2_chain", "beta_half_chain",
                    "trivial_sum")


class InfeasibleParamsError(ValueError):
    """No admissible parameter at some recursion level.

    ``level`` is 1-based; ``min_p`` is the smallest feasible value (the
    tail/head ratio t at that level; > 1 means no p in (0, 1] works).
    """

    def __init__(self, level: int, min_p: float):
        super().__init__(
            f"infeasible parameter at level {level}: "
            f"minimal feasible p is {min_p:.12g}"
            + (" (> 1, no admissible p exists)" if min_p > 1 else ""))
        self.level = level
        self.min_p = min_p


def _xpow(base: float, expo: float) -> float:
    """base**expo with the 0^0 := 1 and v^0 := 1 convention."""
    if expo == 0.0:
        return 1.0
    return float(base) ** expo


@dataclass(frozen=True)
class Grouping:
    """Ordered partition of partner indices 0..m-1 into k groups."""

    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        groups = tuple(tuple(sorted(int(i) for i in g)) for g in self.groups)
        object.__setattr__(self, "groups", groups)
        if not groups or any(not g for g in groups):
            raise ValueError("groups must be non-empty")
        flat = [i for g in groups for i in g]
        if sorted(flat) != list(range(len(flat))):
            raise ValueError(f"groups must partition 0..{len(flat) - 1} "
                             f"exactly, got {groups}")

    @property
    def k(self) -> int:
        return len(self.groups)

    @property
    def n_partners(self) -> int:
        return sum(len(g) for g in self.groups)

    def sort_key(self):
        """Deterministic tie-break key: lexicographic groups, then k."""
        return (self.groups, self.k)


def singleton_grouping(m: int) -> Grouping:
    return Grouping(tuple((i,) for i in range(m)))


def full_grouping(m: int) -> Grouping:
    return Grouping((tuple(range(m)),))


@dataclass(frozen=True)
class LemmaCoefficients:
    """Coefficients of the key inequality at one (t, p, x) triple."""

    omega: float
    upsilon: float
    t: float
    p: float
    x: float

    @property
    def rhs(self) -> float:
        return self.omega + self.upsilon * _xpow(self.t, self.x)


@dataclass(frozen=True)
class BoundParams:
    """Exponent plus per-level parameter vector with admissibility flags."""

    exponent: float
    p: tuple[float, ...] = ()
    feasible: tuple[bool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(float(v) for v in self.p))
        object.__setattr__(self, "feasible", tuple(bool(b) for b in self.feasible))
        if not 0.0 <= self.exponent <= 2.0:
            raise ValueError(f"exponent must be in [0, 2], got {self.exponent}")
        if any(not 0.0 < v <= 1.0 for v in self.p):
            raise ValueError(f"parameters must lie in (0, 1], got {self.p}")
        if len(self.feasible) != len(self.p):
            raise ValueError("one feasibility flag per parameter required")

    @property
    def all_feasible(self) -> bool:
        return all(self.feasible)


@dataclass(frozen=True)
class ThetaResult:
    """Value of the grouped bound plus its per-level ingredients.

    ``per_level`` holds (Omega_l, Upsilon_l, group CoA^2 sum) per level;
    the final level carries (1, 1, head) since no inequality is applied
    after it.
    """

    value: float
    per_level: tuple[tuple[float, float, float], ...]
    focus: str = ""


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluation: lhs, our value, literature comparators.

    ``gap`` is the slack of our bound against the lhs (ours - lhs for an
    upper bound, lhs - ours for a lower bound; nonnegative when the bound
    holds).  ``fallback`` flags foci whose grouping collapsed to k=1
    because no admissible parameters existed.
    """

    lhs: float
    ours: float
    side: str
    comparators: dict[str, float]
    gap: float
    exponent: float
    groupings: dict[str, Grouping]
    params: dict[str, BoundParams]
    fallback: dict[str, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class SandwichBounds:
    """Lower and upper reports for one cut of one state."""

    lower: BoundReport
    upper: BoundReport

    @property
    def lhs(self) -> float:
        return self.lower.lhs


def lemma_rhs(t: float, p: float, x: float) -> LemmaCoefficients:
    """Coefficients of the key inequality; rhs >= (1+t)^x on the domain."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must be in [0, 1], got {x}")
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must be in (0, 1], got {p}")
    if not 0.0 <= t <= p:
        raise ValueError(f"t must be in [0, p] = [0, {p}], got {t}")
    omega = 1.0 + x * t / (1.0 + p) ** 2
    upsilon = ((1.0 + p) ** x - 1.0) / p ** x - x * p / ((1.0 + p) ** 2 * p ** x)
    return LemmaCoefficients(omega=omega, upsilon=upsilon, t=t, p=p, x=x)


def chain_values(t: float, p: float, x: float) -> tuple[float, ...]:
    """The six expressions of the nested inequality chain, in order.

    Returns ((1+t)^x, lemma rhs, 1 + Phi t^x, 1 + (2^x - 1) t^x,
    1 + x t^x, 1 + t^x); nondecreasing for every admissible triple.
    """
    c = lemma_rhs(t, p, x)
    tx = _xpow(t, x)
    phi = ((1.0 + p) ** x - 1.0) / p ** x
    return (
        (1.0 + t) ** x,
        c.rhs,
        1.0 + phi * tx,
        1.0 + (2.0 ** x - 1.0) * tx,
        1.0 + x * tx,
        1.0 + tx,
    )


def lemma_chain_grid(count: int, seed: int, stream: int = 0) -> np.ndarray:
    """(count, 6) array of chain values on random admissible triples.

    Triples are drawn as x ~ U(0,1], p ~ U(0,1], t = u*p, from the
    project RNG; used by the randomized verification harness.
    """
    u = rng.uniforms(3 * count, seed, stream)
    x, p = u[:count], u[count:2 * count]
    t = u[2 * count:] * p
    tx = t ** x
    omega = 1.0 + x * t / (1.0 + p) ** 2
    upsilon = ((1.0 + p) ** x - 1.0) / p ** x - x * p / ((1.0 + p) ** 2 * p ** x)
    phi = ((1.0 + p) ** x - 1.0) / p ** x
    cols = [
        (1.0 + t) ** x,
        omega + upsilon * tx,
        1.0 + phi * tx,
        1.0 + (2.0 ** x - 1.0) * tx,
        1.0 + x * tx,
        1.0 + tx,
    ]
    return np.column_stack(cols)


def _group_heads(group_coa_sq: Sequence[Sequence[float]]) -> list[float]:
    heads = []
    for g in group_coa_sq:
        vals = [float(v) for v in g]
        if any(v < -TAU_NUM for v in vals):
            raise ValueError(f"squared CoA values must be nonnegative: {vals}")
        heads.append(sum(max(v, 0.0) for v in vals))
    return heads


def _trimmed_heads(heads: Sequence[float]) -> list[float]:
    """Drop trailing near-zero groups; reject interior ones.

    A trailing zero group contributes zero tail sum, so dropping it is
    exact; an interior zero would put 0/0 into Omega and the caller must
    reorder or merge first.
    """
    trimmed = list(heads)
    while trimmed and trimmed[-1] < TAU_NUM:
        trimmed.pop()
    if any(h < TAU_NUM for h in trimmed):
        raise ValueError(
            "a group with zero CoA^2 precedes nonzero groups; "
            "reorder or merge groups so zero groups trail")
    return trimmed


def tail_ratios(heads: Sequence[float]) -> list[float]:
    """t_l = (sum of heads after level l) / head_l for each non-final level."""
    return [sum(heads[i + 1:]) / heads[i] for i in range(len(heads) - 1)]


def trimmed_group_heads(group_coa_sq: Sequence[Sequence[float]]) -> list[float]:
    """Group CoA^2 sums with trailing zero groups dropped."""
    return _trimmed_heads(_group_heads(group_coa_sq))


def theta(group_coa_sq: Sequence[Sequence[float]], params: BoundParams,
          focus: str = "") -> ThetaResult:
    """Grouped upper bound on the (exponent)-th power of C(focus|rest).

    ``group_coa_sq`` lists the squared pair CoA values per group, in
    recursion order.  Equals (sum of all values)^(exponent/2) for a single
    group and the plain sum at exponent 2.  Raises InfeasibleParamsError
    when some p_l falls below the tail/head ratio at its level.
    """
    x = params.exponent / 2.0
    heads = _trimmed_heads(_group_heads(group_coa_sq))
    if not heads:
        return ThetaResult(value=_xpow(0.0, x), per_level=(), focus=focus)
    k = len(heads)
    if len(params.p) < k - 1:
        raise ValueError(f"grouping needs {k - 1} parameters, "
                         f"got {len(params.p)}")
    value = 0.0
    prefix = 1.0
    per_level = []
    for lvl in range(k - 1):
        t = sum(heads[lvl + 1:]) / heads[lvl]
        p = params.p[lvl]
        if t > p + _FEAS_SLACK:
            raise InfeasibleParamsError(level=lvl + 1, min_p=t)
        coeff = lemma_rhs(min(t, p), p, x)
        value += prefix * coeff.omega * _xpow(heads[lvl], x)
        per_level.append((coeff.omega, coeff.upsilon, heads[lvl]))
        prefix *= coeff.upsilon
    value += prefix * _xpow(heads[-1], x)
    per_level.append((1.0, 1.0, heads[-1]))
    return ThetaResult(value=value, per_level=tuple(per_level), focus=focus)


# ---------------------------------------------------------------------------
# state-level plumbing


def partner_labels(psi: PureState, focus: str) -> tuple[str, ...]:
    if focus not in psi.shape.labels:
        raise ValueError(f"unknown focus label {focus!r}")
    return tuple(l for l in psi.shape.labels if l != focus)


def pair_measures_sq(psi: PureState, focus: str) -> tuple[np.ndarray, np.ndarray]:
    """Squared pair concurrence and CoA of the focus with each partner.

    Returns (c_sq, ca_sq) aligned with ``partner_labels``; one spin-flip
    spectrum per pair serves both.
    """
    c_sq, ca_sq = [], []
    for q in partner_labels(psi, focus):
        rho = reduced_density(psi, [focus, q])
        c, ca = cren_crenoa_two_qubit(rho)
        c_sq.append(c * c)
        ca_sq.append(ca * ca)
    return np.array(c_sq), np.array(ca_sq)


def _descending_grouping(values: np.ndarray) -> Grouping:
    order = np.argsort(-values, kind="stable")
    return Grouping(tuple((int(i),) for i in order))


def _grouped(values: np.ndarray, grouping: Grouping) -> list[list[float]]:
    return [[float(values[i]) for i in g] for g in grouping.groups]


@dataclass(frozen=True)
class FocusData:
    """Per-focus ingredients of a bound evaluation."""

    theta: ThetaResult
    grouping: Grouping
    params: BoundParams
    fallback: bool
    c_sq: np.ndarray
    ca_sq: np.ndarray
    p1: float

    @property
    def radicand(self) -> float:
        return float(self.c_sq.sum())


def _resolve_focus_theta(psi: PureState, focus: str, exponent: float,
                         grouping: Grouping | None, p_spec) -> FocusData:
    """Resolve grouping and parameters, evaluate theta for one focus.

    ``p_spec`` is "auto" (p = tail/head ratio, the tightest choice),
    "one" (the p=1 literature specialization) or an explicit sequence.
    For "auto"/"one" an infeasible grouping (some t_l > 1) falls back to
    the always-valid single-group bound and is flagged; an explicit
    infeasible vector raises InfeasibleParamsError.
    """
    c_sq, ca_sq = pair_measures_sq(psi, focus)
    if grouping is None:
        grouping = _descending_grouping(ca_sq)
    elif grouping.n_partners != ca_sq.size:
        raise ValueError(f"grouping covers {grouping.n_partners} partners, "
                         f"focus {focus!r} has {ca_sq.size}")
    groups = _grouped(ca_sq, grouping)
    heads = _trimmed_heads(_group_heads(groups))
    ts = tail_ratios(heads)
    k = len(heads)
    fallback = False

    if isinstance(p_spec, str):
        if p_spec not in ("auto", "one"):
            raise ValueError(f"p mode must be 'auto' or 'one', got {p_spec!r}")
        if any(t > 1.0 + _FEAS_SLACK for t in ts):
            grouping = full_grouping(grouping.n_partners)
            groups = _grouped(ca_sq, grouping)
            params = BoundParams(exponent=exponent)
            ts = []
            fallback = True
        elif p_spec == "auto":
            params = BoundParams(
                exponent=exponent,
                p=tuple(min(1.0, max(t, P_FLOOR)) for t in ts),
                feasible=(True,) * len(ts))
        else:
            params = BoundParams(exponent=exponent, p=(1.0,) * len(ts),
                                 feasible=(True,) * len(ts))
    else:
        pvec = tuple(float(v) for v in p_spec)
        if len(pvec) < k - 1:
            raise ValueError(f"grouping needs {k - 1} parameters, "
                             f"got {len(pvec)}")
        pvec = pvec[:max(k - 1, 0)]
        params = BoundParams(
            exponent=exponent, p=pvec,
            feasible=tuple(t <= pv + _FEAS_SLACK for t, pv in zip(ts, pvec)))

    result = theta(groups, params, focus)
    p1_params = BoundParams(exponent=exponent, p=(1.0,) * len(ts),
                            feasible=(True,) * len(ts))
    p1_value = theta(groups, p1_params, focus).value
    return FocusData(theta=result, grouping=grouping, params=params,
                     fallback=fallback, c_sq=c_sq, ca_sq=ca_sq, p1=p1_value)


def chain_bound(values_sq, exponent: float, kind: str) -> float:
    """Literature chain bound sum_l c^(l-1) (v_l)^(exponent/2) over the
    descending singleton ordering; c is 2^(x)-1, x, or 1."""
    x = exponent / 2.0
    vals = sorted((max(float(v), 0.0) for v in values_sq), reverse=True)
    if kind == "pow2_chain":
        c = 2.0 ** x - 1.0
    elif kind == "beta_half_chain":
        c = x
    elif kind == "trivial_sum":
        c = 1.0
    else:
        raise ValueError(f"unknown chain kind {kind!r}")
    total = 0.0
    weight = 1.0
    for v in vals:
        total += weight * _xpow(v, x)
        weight *= c
    return total


def _spec_for(p_spec, focus: str):
    if isinstance(p_spec, Mapping):
        return p_spec.get(focus, "auto")
    return p_spec


def _grouping_for(groupings, focus: str):
    if groupings is None:
        return None
    if isinstance(groupings, Mapping):
        return groupings.get(focus)
    return groupings


def _check_exponent(exponent: float) -> float:
    exponent = float(exponent)
    if not 0.0 <= exponent <= 2.0:
        raise ValueError(f"exponent must be in [0, 2], got {exponent}")
    return exponent


def polygamy_bound_coa(psi: PureState, focus: str, exponent: float,
                       grouping: Grouping | None = None,
                       p="auto") -> BoundReport:
    """Upper bound C^beta(focus|rest) <= theta, with comparators.

    Comparators: the p=1 specialization of the same grouping and the
    generic chains over descending singleton groups.
    """
    exponent = _check_exponent(exponent)
    fd = _resolve_focus_theta(psi, focus, exponent, grouping, p)
    lhs = _xpow(pure_concurrence(psi, Bipartition.of(psi.shape, [focus])),
                exponent)
    comparators = {"p1_specialization": fd.p1}
    for kind in ("pow2_chain", "beta_half_chain", "trivial_sum"):
        comparators[kind] = chain_bound(fd.ca_sq, exponent, kind)
    return BoundReport(
        lhs=lhs, ours=fd.theta.value, side="upper", comparators=comparators,
        gap=fd.theta.value - lhs, exponent=exponent,
        groupings={focus: fd.grouping}, params={focus: fd.params},
        fallback={focus: fd.fallback})


def _two_focus_data(psi: PureState, exponent: float, groupings, p):
    labels = psi.shape.labels
    if len(labels) < 4:
        raise ValueError("AB-cut bounds need at least 4 subsystems")
    fa, fb = labels[0], labels[1]
    data = {f: _resolve_focus_theta(psi, f, exponent,
                                    _grouping_for(groupings, f),
                                    _spec_for(p, f))
            for f in (fa, fb)}
    return fa, fb, data


def _lower_comparator(rad_a, rad_b, bound_a, bound_b, x):
    """max of the two one-sided expressions (both always valid)."""
    return max(_xpow(rad_a, x) - bound_b, _xpow(rad_b, x) - bound_a)


def monogamy_lower_AB(psi: PureState, exponent: float,
                      groupings=None, p="auto") -> BoundReport:
    """Lower bound on C^alpha(AB|rest) from pair concurrences and theta.

    Both one-sided expressions are valid lower bounds; the max is taken.
    The radicands use pair concurrence, the subtracted theta uses CoA.
    """
    exponent = _check_exponent(exponent)
    x = exponent / 2.0
    fa, fb, d = _two_focus_data(psi, exponent, groupings, p)
    ours = _lower_comparator(d[fa].radicand, d[fb].radicand,
                             d[fa].theta.value, d[fb].theta.value, x)
    lhs = _xpow(pure_concurrence(psi, Bipartition.of(psi.shape, [fa, fb])),
                exponent)
    comparators = {"p1_specialization": _lower_comparator(
        d[fa].radicand, d[fb].radicand, d[fa].p1, d[fb].p1, x)}
    for kind in ("pow2_chain", "beta_half_chain", "trivial_sum"):
        comparators[kind] = _lower_comparator(
            d[fa].radicand, d[fb].radicand,
            chain_bound(d[fa].ca_sq, exponent, kind),
            chain_bound(d[fb].ca_sq, exponent, kind), x)
    return BoundReport(
        lhs=lhs, ours=ours, side="lower", comparators=comparators,
        gap=lhs - ours, exponent=exponent,
        groupings={f: d[f].grouping for f in (fa, fb)},
        params={f: d[f].params for f in (fa, fb)},
        fallback={f: d[f].fallback for f in (fa, fb)})


def polygamy_upper_AB(psi: PureState, exponent: float,
                      groupings=None, p="auto") -> BoundReport:
    """Upper bound C^alpha(AB|rest) <= theta_A + theta_B."""
    exponent = _check_exponent(exponent)
    fa, fb, d = _two_focus_data(psi, exponent, groupings, p)
    ours = d[fa].theta.value + d[fb].theta.value
    lhs = _xpow(pure_concurrence(psi, Bipartition.of(psi.shape, [fa, fb])),
                exponent)
    comparators = {"p1_specialization": d[fa].p1 + d[fb].p1}
    for kind in ("pow2_chain", "beta_half_chain", "trivial_sum"):
        comparators[kind] = (chain_bound(d[fa].ca_sq, exponent, kind)
                             + chain_bound(d[fb].ca_sq, exponent, kind))
    return BoundReport(
        lhs=lhs, ours=ours, side="upper", comparators=comparators,
        gap=ours - lhs, exponent=exponent,
        groupings={f: d[f].grouping for f in (fa, fb)},
        params={f: d[f].params for f in (fa, fb)},
        fallback={f: d[f].fallback for f in (fa, fb)})


def negativity_bounds_AB(psi: PureState, exponent: float,
                         groupings=None, p="auto") -> SandwichBounds:
    """Negativity sandwich across AB|rest for qubit systems.

    Pair CREN/CRENoA coincide with pair concurrence/CoA on qubits, so the
    lower bound reuses the concurrence construction; the upper bound picks
    up the Schmidt-rank factor (r(r-1)/2)^(alpha/2) of the cut.
    """
    exponent = _check_exponent(exponent)
    if any(dim != 2 for dim in psi.shape.dims):
        raise ValueError("negativity bounds are implemented for qubits only")
    x = exponent / 2.0
    fa, fb, d = _two_focus_data(psi, exponent, groupings, p)
    cut = Bipartition.of(psi.shape, [fa, fb])
    lhs = _xpow(negativity(psi.density(), psi.shape, [fa, fb]), exponent)
    r = schmidt_rank(psi, cut)
    factor = _xpow(r * (r - 1) / 2.0, x)

    lower_ours = _lower_comparator(d[fa].radicand, d[fb].radicand,
                                   d[fa].theta.value, d[fb].theta.value, x)
    upper_ours = factor * (d[fa].theta.value + d[fb].theta.value)
    lower_cmp = {"p1_specialization": _lower_comparator(
        d[fa].radicand, d[fb].radicand, d[fa].p1, d[fb].p1, x)}
    upper_cmp = {"p1_specialization": factor * (d[fa].p1 + d[fb].p1)}
    for kind in ("pow2_chain", "beta_half_chain", "trivial_sum"):
        ca = chain_bound(d[fa].ca_sq, exponent, kind)
        cb = chain_bound(d[fb].ca_sq, exponent, kind)
        lower_cmp[kind] = _lower_comparator(
            d[fa].radicand, d[fb].radicand, ca, cb, x)
        upper_cmp[kind] = factor * (ca + cb)

    groupings_used = {f: d[f].grouping for f in (fa, fb)}
    params_used = {f: d[f].params for f in (fa, fb)}
    fallback = {f: d[f].fallback for f in (fa, fb)}
    return SandwichBounds(
        lower=BoundReport(lhs=lhs, ours=lower_ours, side="lower",
                          comparators=lower_cmp, gap=lhs - lower_ours,
                          exponent=exponent, groupings=groupings_used,
                          params=params_used, fallback=fallback),
        upper=BoundReport(lhs=lhs, ours=upper_ours, side="upper",
                          comparators=upper_cmp, gap=upper_ours - lhs,
                          exponent=exponent, groupings=groupings_used,
                          params=params_used, fallback=fallback))


def tripartite_bounds(psi: PureState, exponent: float,
                      groupings=None, p="auto") -> SandwichBounds:
    """Sandwich for the ABC1|rest cut of an N >= 5 qubit state.

    Lower bound: max of the AB-side expression minus theta_C1 and the
    C1-side radicand minus theta_A - theta_B (both sides are valid
    unconditionally, so the max needs no case detection).  Upper bound:
    theta_A + theta_B + theta_C1.
    """
    exponent = _check_exponent(exponent)
    labels = psi.shape.labels
    if len(labels) < 5:
        raise ValueError("tripartite bounds need at least 5 subsystems")
    x = exponent / 2.0
    foci = labels[:3]
    d = {f: _resolve_focus_theta(psi, f, exponent,
                                 _grouping_for(groupings, f), _spec_for(p, f))
         for f in foci}
    fa, fb, fc = foci
    lhs = _xpow(pure_concurrence(psi, Bipartition.of(psi.shape, list(foci))),
                exponent)

    def lower_of(bound):
        ab_arm = _lower_comparator(d[fa].radicand, d[fb].radicand,
                                   bound[fa], bound[fb], x)
        return max(ab_arm - bound[fc],
                   _xpow(d[fc].radicand, x) - bound[fa] - bound[fb])

    def upper_of(bound):
        return bound[fa] + bound[fb] + bound[fc]

    ours = {f: d[f].theta.value for f in foci}
    p1s = {f: d[f].p1 for f in foci}
    lower_cmp = {"p1_specialization": lower_of(p1s)}
    upper_cmp = {"p1_specialization": upper_of(p1s)}
    for kind in ("pow2_chain", "beta_half_chain", "trivial_sum"):
        ch = {f: chain_bound(d[f].ca_sq, exponent, kind) for f in foci}
        lower_cmp[kind] = lower_of(ch)
        upper_cmp[kind] = upper_of(ch)

    groupings_used = {f: d[f].grouping for f in foci}
    params_used = {f: d[f].params for f in foci}
    fallback = {f: d[f].fallback for f in foci}
    return SandwichBounds(
        lower=BoundReport(lhs=lhs, ours=lower_of(ours), side="lower",
                          comparators=lower_cmp, gap=lhs - lower_of(ours),
                          exponent=exponent, groupings=groupings_used,
                          params=params_used, fallback=fallback),
        upper=BoundReport(lhs=lhs, ours=upper_of(ours), side="upper",
                          comparators=upper_cmp, gap=upper_of(ours) - lhs,
                          exponent=exponent, groupings=groupings_used,
                          params=params_used, fallback=fallback))


def multi_partition_polygamy(psi: PureState, left, exponent: float,
                             groupings=None, p="auto") -> BoundReport:
    """Upper bound C^alpha(left|rest) <= sum over left foci of theta.

    Reduces to the single-focus polygamy bound for |left| = 1 and to the
    AB upper bound for left = first two labels.
    """
    exponent = _check_exponent(exponent)
    cut = Bipartition.of(psi.shape, left)
    lhs = _xpow(pure_concurrence(psi, cut), exponent)
    ours = 0.0
    comparators = dict.fromkeys(COMPARATOR_NAMES, 0.0)
    groupings_used, params_used, fallback = {}, {}, {}
    for f in cut.left:
        fd = _resolve_focus_theta(psi, f, exponent,
                                  _grouping_for(groupings, f), _spec_for(p, f))
        ours += fd.theta.value
        comparators["p1_specialization"] += fd.p1
        for kind in ("pow2_chain", "beta_half_chain", "trivial_sum"):
            comparators[kind] += chain_bound(fd.ca_sq, exponent, kind)
        groupings_used[f] = fd.grouping
        params_used[f] = fd.params
        fallback[f] = fd.fallback
    return BoundReport(
        lhs=lhs, ours=ours, side="upper", comparators=comparators,
        gap=ours - lhs, exponent=exponent, groupings=groupings_used,
        params=params_used, fallback=fallback)
