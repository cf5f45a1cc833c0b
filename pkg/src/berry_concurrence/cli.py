"""
Command-line front end.

Subcommands: ``sweep``, ``verify``, ``evolve``, ``bell``, ``three-spin`` and
``monogamy``.  Every subcommand emits rows of flat records as ``csv``,
``json`` (one object with ``spec``, ``rows`` and ``summary``) or ``pretty``
text.  Exit status is 0 on success, 1 when a tolerance or check fails and
2 on bad arguments.
"""
import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .entanglement import (
    coefficients_from_phi, complex_concurrence, concurrence_from_phi, general_concurrence,
    monogamy_report, spin_model_catalog, wootters_concurrence,
)
from .errors import BerryConcurrenceError, ZeroVisibility
from .evolution import (
    DEFAULT_STEPS, cyclic_evolve_pair, cyclic_phase_record, exact_propagator, pair_state,
    propagate,
)
from .geometric import (
    TWO_PI, angle_distance, bell_evolve, bell_state, bell_transition_matrix,
    closed_form_gamma, entangled_loop, eigenstate_loop, sigma_matrix, three_spin_phase,
    wilson_loop_phase,
)
from .linalg import is_unitary
from .spin import FieldConfig, berry_factor, flux_phase

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ADIABATIC_FLAG = 1e-2

SWEEP_COLUMNS = [
    "phi", "b", "abs_b", "gamma_plus", "gamma_minus", "gamma_wilson",
    "c_paper", "c_wootters_normalized", "abs_err_gamma", "abs_err_c",
]


class UsageError(Exception):
    pass


@dataclass
class SweepSpec:
    phi_min: float = 0.0
    phi_max: float = np.pi
    points: int = 64
    wilson_samples: int = 10_000
    ratio: float = 500.0
    tolerance: float = 1e-6

    def validate(self):
        if not 0.0 <= self.phi_min < self.phi_max <= np.pi:
            raise UsageError("need 0 <= phi-min < phi-max <= pi")
        if self.points < 2:
            raise UsageError("points must be >= 2")
        if self.wilson_samples < 16:
            raise UsageError("wilson-samples must be >= 16")
        if not self.ratio > 0:
            raise UsageError("ratio must be positive")
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")


@dataclass
class RunReport:
    rows: list
    max_abs_err: float
    tolerance: float
    summary: dict = field(default_factory=dict)

    @property
    def passed(self):
        return bool(self.max_abs_err <= self.tolerance)


def run_sweep(spec):
    """C and Berry phase versus cone angle on an even grid."""
    spec.validate()
    rows = []
    for phi in np.linspace(spec.phi_min, spec.phi_max, spec.points):
        phi = float(phi)
        cfg = FieldConfig(phi, 1.0, spec.ratio)
        gp, gm = closed_form_gamma(phi)
        gw = wilson_loop_phase(eigenstate_loop(cfg, spec.wilson_samples))
        bf = berry_factor(phi)
        rep = concurrence_from_phi(phi)
        rows.append({
            "phi": phi, "b": bf.b, "abs_b": bf.abs_b,
            "gamma_plus": gp, "gamma_minus": gm, "gamma_wilson": gw,
            "c_paper": rep.paper_c, "c_wootters_normalized": rep.wootters_c,
            "abs_err_gamma": angle_distance(gw, gp),
            "abs_err_c": abs(rep.paper_c - rep.abs_b),
        })
    err_g = max(r["abs_err_gamma"] for r in rows)
    err_c = max(r["abs_err_c"] for r in rows)
    rep = RunReport(rows, max(err_g, err_c), spec.tolerance)
    rep.summary = {"max_abs_err": rep.max_abs_err, "max_abs_err_gamma": err_g,
                   "max_abs_err_c": err_c, "pass": rep.passed}
    return rep


# --- verify -----------------------------------------------------------------

def _random_state(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def _check_wilson(rng, n):
    return max(angle_distance(wilson_loop_phase(eigenstate_loop(FieldConfig(phi), 10_000)),
                              closed_form_gamma(phi)[0])
               for phi in np.linspace(0.05, np.pi - 0.05, 16))


def _check_gamma_sum(rng, n):
    return max(abs(sum(closed_form_gamma(phi)) + TWO_PI) for phi in np.linspace(0, np.pi, 64))


def _check_flux_phase(rng, n):
    return max(abs(flux_phase(berry_factor(phi).b) - np.exp(1j * closed_form_gamma(phi)[0]))
               for phi in np.linspace(0, np.pi, 64))


def _check_sigma_unitary(rng, n):
    return max(np.max(np.abs(sigma_matrix(g).conj().T @ sigma_matrix(g) - np.eye(2)))
               for g in np.linspace(-TWO_PI, 0, 64))


def _check_sigma_bell(rng, n):
    return max(np.max(np.abs(bell_transition_matrix(g) - sigma_matrix(g)))
               for g in np.linspace(-TWO_PI, 0, 64))


def _check_c_equals_b(rng, n):
    return max(abs(abs(complex_concurrence(coefficients_from_phi(phi))) - berry_factor(phi).abs_b)
               for phi in np.linspace(0, np.pi, 256))


def _check_catalog(rng, n):
    expected = [(0.0, 0.0), (0.5, 0.5), (1.0, 1.0)]
    return max(max(abs(e.abs_b - b), abs(e.c - c))
               for e, (b, c) in zip(spin_model_catalog(), expected))


def _check_bell_wootters(rng, n):
    return max(abs(wootters_concurrence(bell_state(k)) - 1.0)
               for k in ("phi+", "phi-", "psi+", "psi-"))


def _check_stepper(rng, n):
    cfg = FieldConfig(0.7, 1.0, 5.0)
    psi = np.array([0.6, 0.8j])
    exact = exact_propagator(cfg, cfg.period) @ psi
    return float(np.linalg.norm(propagate(psi, cfg, 0.0, cfg.period).final_state - exact))


def _check_monogamy(rng, n):
    return max(abs(monogamy_report(0.0, k).bound - 1.0 / (k - 1)) for k in range(2, 17))


def _check_oracles(rng, n):
    return max(abs(wootters_concurrence(v) - general_concurrence(v))
               for v in (_random_state(rng, 4) for _ in range(n)))


def _random_pair(rng):
    a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
    return a, b, FieldConfig(float(rng.uniform(0, np.pi)))


def _check_cyclic_invariance(rng, n):
    err = 0.0
    for _ in range(n):
        a, b, cfg = _random_pair(rng)
        before = wootters_concurrence(pair_state(a, b, cfg))
        after = wootters_concurrence(cyclic_evolve_pair(a, b, cfg))
        err = max(err, abs(before - after))
    return err


def _check_entangled_loop(rng, n):
    err = 0.0
    for _ in range(n):
        a, b, cfg = _random_pair(rng)
        m = abs(a) ** 2 + abs(b) ** 2
        gp, gm = closed_form_gamma(cfg.phi)
        expected = 2.0 / m * (abs(a) ** 2 * gm + abs(b) ** 2 * gp)
        got = wilson_loop_phase(entangled_loop(a, b, cfg, 10_000))
        err = max(err, angle_distance(got, expected))
    return err


# name, function, default tolerance, uses random draws
CHECKS = [
    ("wilson_loop_vs_closed_form", _check_wilson, 1e-6, False),
    ("gamma_sum_identity", _check_gamma_sum, 1e-14, False),
    ("flux_phase_vs_gamma_plus", _check_flux_phase, 1e-12, False),
    ("sigma_unitary", _check_sigma_unitary, 1e-14, False),
    ("sigma_vs_bell_evolve", _check_sigma_bell, 1e-12, False),
    ("concurrence_equals_abs_b", _check_c_equals_b, 1e-14, False),
    ("spin_model_catalog", _check_catalog, 0.0, False),
    ("bell_states_wootters", _check_bell_wootters, 1e-12, False),
    ("stepper_vs_exact_propagator", _check_stepper, 1e-6, False),
    ("monogamy_bound", _check_monogamy, 1e-15, False),
    ("wootters_vs_general_concurrence", _check_oracles, 1e-10, True),
    ("cyclic_evolution_keeps_concurrence", _check_cyclic_invariance, 1e-10, True),
    ("entangled_loop_vs_weighted_sum", _check_entangled_loop, 1e-6, True),
]


def run_verify(tolerance=None, seeds=20, seed=0):
    """Run the consistency checks.

    ``tolerance`` overrides every per-check tolerance when given; ``seeds``
    is the number of random draws per randomized check (0 skips them).
    """
    if tolerance is not None and not tolerance > 0:
        raise UsageError("tolerance must be positive")
    if seeds < 0:
        raise UsageError("seeds must be >= 0")
    rng = np.random.default_rng(seed)
    rows = []
    for name, fn, tol, randomized in CHECKS:
        if randomized and seeds == 0:
            continue
        tol = tolerance if tolerance is not None else tol
        err = float(fn(rng, seeds))
        rows.append({"check": name, "error": err, "tolerance": tol,
                     "passed": bool(err <= tol), "randomized": randomized})
    failed = [r["check"] for r in rows if not r["passed"]]
    rep = RunReport(rows, max(r["error"] - r["tolerance"] for r in rows), 0.0)
    rep.summary = {"checks": len(rows), "failed": failed, "seed": seed, "pass": not failed}
    return rep


# --- single-shot commands ---------------------------------------------------

def run_evolve(phi, ratio, steps):
    if not ratio > 1:
        raise UsageError("ratio must be > 1")
    if steps < 1:
        raise UsageError("steps must be >= 1")
    cfg = FieldConfig(phi, 1.0, ratio)
    rec = cyclic_phase_record(cfg, steps)
    gp = closed_form_gamma(phi)[0]
    dev = angle_distance(rec.geometric, gp)
    row = {"phi": phi, "ratio": ratio, "steps": steps,
           "geometric": rec.geometric, "dynamical": rec.dynamical, "total": rec.total,
           "visibility": rec.visibility, "gamma_plus": gp, "deviation": dev,
           "non_adiabatic": bool(dev > ADIABATIC_FLAG)}
    rep = RunReport([row], 0.0, 0.0)
    rep.summary = {"deviation": dev, "flagged": row["non_adiabatic"], "pass": True}
    return rep


def run_bell(gamma_plus):
    sigma = sigma_matrix(gamma_plus)
    trans = bell_transition_matrix(gamma_plus)
    rows = []
    for i, si in enumerate(("plus", "minus")):
        for j, sj in enumerate(("plus", "minus")):
            rows.append({"from": si, "to": sj,
                         "sigma_re": sigma[i, j].real, "sigma_im": sigma[i, j].imag,
                         "transition_re": trans[i, j].real, "transition_im": trans[i, j].imag})
    unitarity = float(np.max(np.abs(sigma.conj().T @ sigma - np.eye(2))))
    det = complex(np.linalg.det(sigma))
    consistency = float(np.max(np.abs(trans - sigma)))
    overlap_plus = complex(np.vdot(bell_state("plus"), bell_evolve("plus", gamma_plus)))
    rep = RunReport(rows, consistency, 1e-12)
    rep.summary = {
        "gamma_plus": gamma_plus, "unitarity_defect": unitarity,
        "det_re": det.real, "det_im": det.imag, "max_consistency_err": consistency,
        "minus_identity": bool(np.allclose(sigma, -np.eye(2), atol=1e-12)),
        "symmetric_overlap_re": overlap_plus.real, "symmetric_overlap_im": overlap_plus.imag,
        "pass": rep.passed and unitarity <= 1e-14,
    }
    return rep


def run_three_spin(a, pair_phases, single_phases):
    value, phase = three_spin_phase(a, pair_phases, single_phases)
    row = {"value_re": value.real, "value_im": value.imag, "phase": phase,
           "visibility": abs(value)}
    rep = RunReport([row], 0.0, 0.0)
    rep.summary = {"phase": phase, "pass": True}
    return rep


def run_monogamy(c12, n, c1_rest=None):
    m = monogamy_report(c12, n, c1_rest)
    row = {"n": m.n, "c12": m.c12, "c1_rest": m.c1_rest, "bound": m.bound,
           "lhs": m.lhs, "critical_c12": m.critical_c12, "satisfied": m.satisfied}
    rep = RunReport([row], 0.0, 0.0)
    rep.summary = {"satisfied": m.satisfied, "pass": True}
    return rep


# --- output -----------------------------------------------------------------

_NUMBER = {"type": "number"}
_ROW_SCHEMAS = {
    "sweep": {"type": "object", "required": SWEEP_COLUMNS,
              "properties": {k: _NUMBER for k in SWEEP_COLUMNS}},
    "verify": {"type": "object", "required": ["check", "error", "tolerance", "passed", "randomized"],
               "properties": {"check": {"type": "string"}, "error": _NUMBER,
                              "tolerance": _NUMBER, "passed": {"type": "boolean"},
                              "randomized": {"type": "boolean"}}},
    "evolve": {"type": "object",
               "required": ["phi", "ratio", "steps", "geometric", "dynamical", "total",
                            "visibility", "gamma_plus", "deviation", "non_adiabatic"],
               "properties": {"steps": {"type": "integer"},
                              "non_adiabatic": {"type": "boolean"}}},
    "bell": {"type": "object",
             "required": ["from", "to", "sigma_re", "sigma_im", "transition_re", "transition_im"]},
    "three-spin": {"type": "object", "required": ["value_re", "value_im", "phase", "visibility"]},
    "monogamy": {"type": "object",
                 "required": ["n", "c12", "c1_rest", "bound", "lhs", "critical_c12", "satisfied"],
                 "properties": {"n": {"type": "integer"}, "satisfied": {"type": "boolean"},
                                "c1_rest": {"type": ["number", "null"]}}},
}


def json_schema(command):
    """JSON Schema of the ``--out json`` document of ``command``."""
    return {
        "type": "object",
        "required": ["spec", "rows", "summary"],
        "additionalProperties": False,
        "properties": {
            "spec": {"type": "object", "required": ["command"]},
            "rows": {"type": "array", "items": _ROW_SCHEMAS[command]},
            "summary": {"type": "object", "required": ["pass"],
                        "properties": {"pass": {"type": "boolean"}}},
        },
    }


def _plain(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return "%.17g" % x
    if x is None:
        return ""
    return str(x)


def render(command, spec, report, fmt):
    rows = [_plain(r) for r in report.rows]
    if fmt == "json":
        doc = {"spec": _plain(dict(spec, command=command)), "rows": rows,
               "summary": _plain(report.summary)}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = list(rows[0]) if rows else []
        writer.writerow(keys)
        for r in rows:
            writer.writerow([_fmt(r[k]) for k in keys])
        return buf.getvalue()
    lines = [f"{command}: " + ", ".join(f"{k}={_fmt(v)}" for k, v in _plain(spec).items())]
    keys = list(rows[0]) if rows else []
    table = [keys] + [[_fmt(r[k]) if not isinstance(r[k], float) else f"{r[k]:.10g}"
                       for k in keys] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(keys))]
    for row in table:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    lines.append("summary: " + ", ".join(f"{k}={_fmt(v)}" for k, v in _plain(report.summary).items()))
    return "\n".join(lines) + "\n"


# --- argument parsing -------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=["csv", "json", "pretty"], default="pretty")
    common.add_argument("--output-path", default=None, help="write output here instead of stdout")
    common.add_argument("--degrees", action="store_true", help="angle arguments are in degrees")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tolerance", type=float, default=None)

    parser = argparse.ArgumentParser(prog="berry-concurrence",
                                     description="Berry phase and concurrence of spin-1/2 pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", parents=[common], help="C and Berry phase versus cone angle")
    p.add_argument("--phi-min", type=float, default=0.0)
    p.add_argument("--phi-max", type=float, default=None, help="default pi")
    p.add_argument("--points", type=int, default=64)
    p.add_argument("--wilson-samples", type=int, default=10_000)
    p.add_argument("--ratio", type=float, default=500.0, help="omega_L / omega_0")

    p = sub.add_parser("verify", parents=[common], help="run the consistency checks")
    p.add_argument("--seeds", type=int, default=20, help="random draws per randomized check")

    p = sub.add_parser("evolve", parents=[common], help="phase split over one field cycle")
    p.add_argument("--phi", type=float, default=np.pi / 3)
    p.add_argument("--ratio", type=float, default=500.0, help="omega_L / omega_0")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)

    p = sub.add_parser("bell", parents=[common], help="cycled Bell states and their phase matrix")
    p.add_argument("--gamma-plus", type=float, required=True)

    p = sub.add_parser("three-spin", parents=[common], help="three-spin phase composition")
    p.add_argument("--a", type=complex, nargs=3, required=True, metavar=("A1", "A2", "A3"))
    for name in ("ab", "bc", "ca", "a", "b", "c"):
        p.add_argument(f"--gamma-{name}", type=float, default=0.0)

    p = sub.add_parser("monogamy", parents=[common], help="pair concurrence versus chain bound")
    p.add_argument("--c12", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c1-rest", type=float, default=None)
    return parser


def _dispatch(args):
    ang = np.deg2rad if args.degrees else (lambda x: x)
    cmd = args.command
    if cmd == "sweep":
        spec = SweepSpec(
            phi_min=float(ang(args.phi_min)),
            phi_max=float(ang(args.phi_max)) if args.phi_max is not None else np.pi,
            points=args.points, wilson_samples=args.wilson_samples, ratio=args.ratio,
            tolerance=args.tolerance if args.tolerance is not None else 1e-6,
        )
        return vars(spec) | {"seed": args.seed}, run_sweep(spec)
    if cmd == "verify":
        spec = {"tolerance": args.tolerance, "seeds": args.seeds, "seed": args.seed}
        return spec, run_verify(args.tolerance, args.seeds, args.seed)
    if cmd == "evolve":
        phi = float(ang(args.phi))
        return {"phi": phi, "ratio": args.ratio, "steps": args.steps}, \
            run_evolve(phi, args.ratio, args.steps)
    if cmd == "bell":
        g = float(ang(args.gamma_plus))
        return {"gamma_plus": g}, run_bell(g)
    if cmd == "three-spin":
        pair = tuple(float(ang(getattr(args, f"gamma_{k}"))) for k in ("ab", "bc", "ca"))
        single = tuple(float(ang(getattr(args, f"gamma_{k}"))) for k in ("a", "b", "c"))
        spec = {"a": [[z.real, z.imag] for z in args.a],
                "pair_phases": list(pair), "single_phases": list(single)}
        return spec, run_three_spin(args.a, pair, single)
    if cmd == "monogamy":
        spec = {"c12": args.c12, "n": args.n, "c1_rest": args.c1_rest}
        return spec, run_monogamy(args.c12, args.n, args.c1_rest)
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec, report = _dispatch(args)
    except ZeroVisibility as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, BerryConcurrenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(args.command, spec, report, args.out)
    if args.output_path:
        with open(args.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify":
        for name in report.summary["failed"]:
            print(f"FAILED: {name}", file=sys.stderr)
    return EXIT_OK if report.summary["pass"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
