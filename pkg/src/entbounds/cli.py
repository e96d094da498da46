"""Command-line front end: figure data files, randomized verification
sweeps, and single-state bound reports.

Exit codes: 0 success, 1 verification violation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bounds import (
    InfeasibleParamsError,
    lemma_chain_grid,
    monogamy_lower_AB,
    multi_partition_polygamy,
    negativity_bounds_AB,
    pair_measures_sq,
    polygamy_bound_coa,
    polygamy_upper_AB,
    tripartite_bounds,
)
from .measures import Bipartition, pure_concurrence
from .states import (
    AcinParams,
    StateSpecError,
    WClass4Params,
    acin_state,
    haar_random_pure,
    parse_state_spec,
    wclass4_state,
)

# Example-family parameters used by the three figures.
FIG1_PARAMS = AcinParams(l0=0.5, l1=0.0, l2=np.sqrt(2) / 2, l3=0.5, l4=0.0)
FIG1_P = (3 / 5,)
FIG23_PARAMS = WClass4Params(l1=3 / 4, l2=1 / 2, l3=np.sqrt(2) / 4, l4=1 / 4)
# The monogamy figure's bound subtracts theta_B, so only focus B's p is
# pinned by that curve; focus A reuses the polygamy figure's choice.
FIG23_P = {"A": (4 / 5, 3 / 5), "B": (2 / 5, 3 / 5)}

_LEMMA_STREAM_BASE = 2 ** 32  # keeps lemma triples off the state streams


@dataclass(frozen=True)
class FigureSpec:
    """One figure reproduction request."""

    id: int
    out_csv: str
    out_svg: str | None = None
    samples: int = 201

    def __post_init__(self):
        if self.id not in (1, 2, 3):
            raise ValueError(f"figure id must be 1, 2 or 3, got {self.id}")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")


@dataclass(frozen=True)
class VerifyConfig:
    """Randomized verification sweep configuration."""

    qubits: int = 4
    trials: int = 100
    exponents: tuple[float, ...] = (0.5, 1.0, 1.5, 2.0)
    seed: int = 42
    tol: float = 1e-9
    out_csv: str | None = None

    def __post_init__(self):
        if not 4 <= self.qubits <= 6:
            raise ValueError(f"qubits must be in [4, 6], got {self.qubits}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.exponents:
            raise ValueError("need at least one exponent")
        if any(not 0.0 <= e <= 2.0 for e in self.exponents):
            raise ValueError(f"exponents must lie in [0, 2]: {self.exponents}")


@dataclass
class CheckStat:
    """Worst slack and violation count of one inequality over a sweep."""

    name: str
    worst_slack: float = np.inf
    violations: int = 0
    samples: int = 0

    def add(self, slack: float, tol: float):
        self.samples += 1
        if slack < self.worst_slack:
            self.worst_slack = slack
        if slack < -tol:
            self.violations += 1


@dataclass
class VerifyResult:
    stats: dict[str, CheckStat] = field(default_factory=dict)

    def record(self, name: str, slack: float, tol: float):
        self.stats.setdefault(name, CheckStat(name)).add(slack, tol)

    @property
    def violations(self) -> int:
        return sum(s.violations for s in self.stats.values())


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _write_csv(path: str, header: list[str], rows: list[list[float]]):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


_SVG_COLORS = ("#1f4e9c", "#c02020", "#b020b0", "#208020", "#20a0a0")


def _write_svg(path: str, header: list[str], rows: list[list[float]]):
    """Minimal self-contained line plot: axes, tick labels, legend."""
    width, height, margin = 640, 440, 56
    xs = [r[0] for r in rows]
    series = list(zip(*[r[1:] for r in rows]))
    names = header[1:]
    ymin = min(min(s) for s in series)
    ymax = max(max(s) for s in series)
    if ymax - ymin < 1e-12:
        ymax = ymin + 1.0
    xmin, xmax = min(xs), max(xs)

    def sx(x):
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
    ]
    for i in range(5):
        xv = xmin + (xmax - xmin) * i / 4
        yv = ymin + (ymax - ymin) * i / 4
        parts.append(f'<line x1="{sx(xv):.1f}" y1="{height - margin}" '
                     f'x2="{sx(xv):.1f}" y2="{height - margin + 5}" stroke="black"/>')
        parts.append(f'<text x="{sx(xv):.1f}" y="{height - margin + 18}" '
                     f'font-size="11" text-anchor="middle">{xv:.2g}</text>')
        parts.append(f'<line x1="{margin - 5}" y1="{sy(yv):.1f}" '
                     f'x2="{margin}" y2="{sy(yv):.1f}" stroke="black"/>')
        parts.append(f'<text x="{margin - 8}" y="{sy(yv):.1f}" font-size="11" '
                     f'text-anchor="end" dominant-baseline="middle">{yv:.3g}</text>')
    parts.append(f'<text x="{width / 2:.0f}" y="{height - 12}" font-size="12" '
                 f'text-anchor="middle">{header[0]}</text>')
    for idx, (name, ys) in enumerate(zip(names, series)):
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     f'stroke-width="1.5"/>')
        ly = margin + 16 * idx
        parts.append(f'<line x1="{width - margin - 90}" y1="{ly}" '
                     f'x2="{width - margin - 70}" y2="{ly}" stroke="{color}" '
                     f'stroke-width="2"/>')
        parts.append(f'<text x="{width - margin - 64}" y="{ly + 4}" '
                     f'font-size="12">{name}</text>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")


def figure_rows(fig_id: int, samples: int = 201) -> tuple[list[str], list[list[float]]]:
    """Header and rows of one figure's data table."""
    grid = np.linspace(0.0, 2.0, samples)
    rows = []
    if fig_id == 1:
        psi = acin_state(FIG1_PARAMS)
        header = ["beta", "lhs", "Z1", "Z2", "Z3", "Z4"]
        for b in grid:
            rep = polygamy_bound_coa(psi, "A", float(b), p=FIG1_P)
            rows.append([b, rep.lhs, rep.ours,
                         rep.comparators["p1_specialization"],
                         rep.comparators["pow2_chain"],
                         rep.comparators["beta_half_chain"]])
    elif fig_id == 2:
        psi = wclass4_state(FIG23_PARAMS)
        header = ["alpha", "lhs", "T1", "T2", "T3", "T4"]
        for a in grid:
            rep = monogamy_lower_AB(psi, float(a), p=FIG23_P)
            rows.append([a, rep.lhs, rep.ours,
                         rep.comparators["p1_specialization"],
                         rep.comparators["pow2_chain"],
                         rep.comparators["beta_half_chain"]])
    elif fig_id == 3:
        psi = wclass4_state(FIG23_PARAMS)
        header = ["alpha", "lhs", "X1", "X2", "X3", "X4"]
        for a in grid:
            rep = polygamy_upper_AB(psi, float(a), p=FIG23_P)
            rows.append([a, rep.lhs, rep.ours,
                         rep.comparators["p1_specialization"],
                         rep.comparators["pow2_chain"],
                         rep.comparators["beta_half_chain"]])
    else:
        raise ValueError(f"unknown figure id {fig_id}")
    return header, rows


def run_figure(spec: FigureSpec) -> tuple[list[str], list[list[float]]]:
    """Generate one figure's CSV (and optional SVG); returns the table."""
    header, rows = figure_rows(spec.id, spec.samples)
    _write_csv(spec.out_csv, header, rows)
    if spec.out_svg:
        _write_svg(spec.out_svg, header, rows)
    return header, rows


def run_verify(cfg: VerifyConfig) -> VerifyResult:
    """Randomized verification of every inequality family on Haar states.

    Each trial draws one state (stream = trial index) and one lemma
    triple; per exponent it checks the monogamy/polygamy sandwich for
    concurrence and negativity across AB|rest, and the tripartite
    sandwich when the register has at least 5 qubits.  Slack is
    (larger side) - (smaller side) of each inequality; a violation is
    slack < -tol.
    """
    res = VerifyResult()
    for trial in range(cfg.trials):
        chain = lemma_chain_grid(1, cfg.seed, _LEMMA_STREAM_BASE + trial)[0]
        res.record("lemma_key_inequality", chain[1] - chain[0], cfg.tol)
        res.record("lemma_chain_order", float(np.min(np.diff(chain[1:]))),
                   cfg.tol)

        psi = haar_random_pure(cfg.qubits, cfg.seed, stream=trial)
        focus = psi.shape.labels[0]
        c_sq, ca_sq = pair_measures_sq(psi, focus)
        c_one_rest = pure_concurrence(
            psi, Bipartition.of(psi.shape, [focus]))
        res.record("pair_coa_polygamy", float(ca_sq.sum()) - c_one_rest ** 2,
                   cfg.tol)
        res.record("pair_conc_monogamy", c_one_rest ** 2 - float(c_sq.sum()),
                   cfg.tol)

        for expo in cfg.exponents:
            lo = monogamy_lower_AB(psi, expo)
            up = polygamy_upper_AB(psi, expo)
            res.record("concurrence_lower_AB", lo.gap, cfg.tol)
            res.record("concurrence_upper_AB", up.gap, cfg.tol)
            neg = negativity_bounds_AB(psi, expo)
            res.record("negativity_lower_AB", neg.lower.gap, cfg.tol)
            res.record("negativity_upper_AB", neg.upper.gap, cfg.tol)
            if cfg.qubits >= 5:
                tri = tripartite_bounds(psi, expo)
                res.record("tripartite_lower_ABC1", tri.lower.gap, cfg.tol)
                res.record("tripartite_upper_ABC1", tri.upper.gap, cfg.tol)
    if cfg.out_csv:
        header = ["check", "worst_slack", "violations", "samples"]
        lines = [",".join(header)]
        for st in res.stats.values():
            lines.append(f"{st.name},{_fmt(st.worst_slack)},"
                         f"{st.violations},{st.samples}")
        Path(cfg.out_csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return res


_BOUNDS_CSV_HEADER = ("cut,exponent,lhs,ours,p1_specialization,pow2_chain,"
                      "beta_half_chain,trivial_sum,gap")


def run_bounds(state_path: str, cut_expr: str, exponent: float, p_mode: str,
               renormalize: bool = False):
    """Evaluate the polygamy bound for one state file and cut.

    Returns (report, text lines, csv row string).  p_mode is "auto", "1"
    (the literature specialization) or a comma-separated explicit vector
    applied to every focus on the left side of the cut.
    """
    text = Path(state_path).read_text(encoding="utf-8")
    psi = parse_state_spec(text, renormalize=renormalize)
    cut = Bipartition.parse(cut_expr, psi.shape)
    if p_mode == "auto":
        p = "auto"
    elif p_mode == "1":
        p = "one"
    else:
        try:
            p = tuple(float(v) for v in p_mode.split(","))
        except ValueError:
            raise ValueError(f"cannot parse p specification {p_mode!r}") from None
    rep = multi_partition_polygamy(psi, cut.left, exponent, p=p)

    lines = [
        f"state: {state_path} ({psi.n_qubits} qubits)",
        f"cut: {''.join(cut.left)}|{''.join(cut.right)}   "
        f"exponent: {_fmt(exponent)}",
        f"lhs  C^b(left|rest) = {_fmt(rep.lhs)}",
        f"ours (parametrized) = {_fmt(rep.ours)}   gap = {_fmt(rep.gap)}",
    ]
    for name in ("p1_specialization", "pow2_chain", "beta_half_chain",
                 "trivial_sum"):
        lines.append(f"{name:20s}= {_fmt(rep.comparators[name])}")
    for f in cut.left:
        g = rep.groupings[f]
        pa = rep.params[f]
        fb = " (fallback to single group)" if rep.fallback[f] else ""
        lines.append(f"focus {f}: groups {list(g.groups)} "
                     f"p = {[round(v, 12) for v in pa.p]}{fb}")
    csv_row = ",".join([
        f"{''.join(cut.left)}|{''.join(cut.right)}", _fmt(exponent),
        _fmt(rep.lhs), _fmt(rep.ours),
        _fmt(rep.comparators["p1_specialization"]),
        _fmt(rep.comparators["pow2_chain"]),
        _fmt(rep.comparators["beta_half_chain"]),
        _fmt(rep.comparators["trivial_sum"]), _fmt(rep.gap)])
    return rep, lines, csv_row


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entbounds",
        description="Multipartite entanglement bound families: figure "
                    "reproduction, randomized verification, bound reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="reproduce a figure as CSV (+SVG)")
    fig.add_argument("--id", type=int, required=True, choices=(1, 2, 3))
    fig.add_argument("--out", required=True, help="output CSV path")
    fig.add_argument("--svg", help="optional SVG plot path")
    fig.add_argument("--samples", type=int, default=201)

    ver = sub.add_parser("verify", help="randomized inequality verification")
    ver.add_argument("--qubits", type=int, default=4)
    ver.add_argument("--trials", type=int, default=100)
    ver.add_argument("--exponents", default="0.5,1,1.5,2",
                     help="comma-separated exponents in [0,2]")
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--tol", type=float, default=1e-9)
    ver.add_argument("--csv", help="optional per-check CSV summary path")

    bnd = sub.add_parser("bounds", help="bound report for one state file")
    bnd.add_argument("--state", required=True, help="state-spec file path")
    bnd.add_argument("--cut", required=True, help="partition, e.g. AB|C1C2")
    bnd.add_argument("--exponent", type=float, required=True)
    bnd.add_argument("--p", default="auto",
                     help="'auto', '1', or comma-separated values in (0,1]")
    bnd.add_argument("--renormalize", action="store_true",
                     help="accept non-normalized state specs")
    bnd.add_argument("--csv", help="optional CSV row output path")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "figure":
            spec = FigureSpec(id=args.id, out_csv=args.out, out_svg=args.svg,
                              samples=args.samples)
            run_figure(spec)
            print(f"figure {spec.id}: wrote {spec.out_csv}"
                  + (f" and {spec.out_svg}" if spec.out_svg else ""))
            return 0
        if args.command == "verify":
            exponents = tuple(float(v) for v in args.exponents.split(","))
            cfg = VerifyConfig(qubits=args.qubits, trials=args.trials,
                               exponents=exponents, seed=args.seed,
                               tol=args.tol, out_csv=args.csv)
            res = run_verify(cfg)
            width = max(len(n) for n in res.stats)
            for st in res.stats.values():
                flag = "FAIL" if st.violations else "ok"
                print(f"{st.name:{width}s}  worst slack {st.worst_slack: .3e}"
                      f"  violations {st.violations}/{st.samples}  [{flag}]")
            if res.violations:
                print(f"{res.violations} violation(s) beyond tol={args.tol}")
                return 1
            print("all inequalities hold within tolerance")
            return 0
        if args.command == "bounds":
            _, lines, csv_row = run_bounds(
                args.state, args.cut, args.exponent, args.p,
                renormalize=args.renormalize)
            for line in lines:
                print(line)
            if args.csv:
                Path(args.csv).write_text(
                    _BOUNDS_CSV_HEADER + "\n" + csv_row + "\n",
                    encoding="utf-8")
            else:
                print(_BOUNDS_CSV_HEADER)
                print(csv_row)
            return 0
    except (StateSpecError, InfeasibleParamsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
