"""Command-line front end.

Subcommands:
    ee            entropy of one (N, N_A, z, m, beta) point
    sweep         entropy over a grid of z / beta / N_A values
    fit           low- or high-temperature expansion fit of a sweep
    cmera         export (u, phi, g, g_uu) circuit profiles
    oracle-check  compare lattice correlators/entropy to the brute-force
                  many-body computation on a small chain

Options may also come from a config file (``--config``) holding
``key = value`` lines with ``#`` comments; command-line flags win over
file values.  Exit codes: 0 success, 1 computational failure
(EechainError), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import cmera as cmera_mod
from .entropy import entanglement_entropy, entropy_of
from .errors import EechainError, UsageError
from .lattice import LatticeSpec, build_correlation_matrix
from .oracle import MAX_SITES, many_body_state, mode_correlators, reduced_entropy
from .output import emit_plot, emit_table
from .thermal import (
    SweepTable,
    default_high_temperature_betas,
    default_low_temperature_betas,
    fit_high_temperature,
    fit_low_temperature,
    sweep_entropy,
)

CORRELATOR_TOL = 1e-10
ENTROPY_TOL = 1e-8

_FLAG_KEYS = (
    "n",
    "na",
    "z",
    "mass",
    "beta",
    "temp",
    "eps",
    "theta",
    "zs",
    "betas",
    "nas",
    "regime",
    "format",
    "out",
    "jobs",
)


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    na: int | None = None
    z: int | None = None
    mass: float = 0.0
    beta: float = math.inf
    epsilon: float = 1.0
    theta: float = 0.0
    zs: tuple = ()
    betas: tuple = ()
    nas: tuple = ()
    regime: str = "low"
    fmt: str | None = None
    out: str | None = None
    jobs: int = 1
    raw: dict = field(default_factory=dict, repr=False)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="eechain",
        description="entanglement entropy of free Lifshitz fermion chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    names = ("ee", "sweep", "fit", "cmera", "oracle-check")
    for name in names:
        p = sub.add_parser(name)
        p.add_argument("--n", default=None)
        p.add_argument("--na", default=None)
        p.add_argument("--z", default=None)
        p.add_argument("--mass", default=None)
        group = p.add_mutually_exclusive_group()
        group.add_argument("--beta", default=None)
        group.add_argument("--temp", default=None)
        p.add_argument("--eps", default=None)
        p.add_argument("--theta", default=None)
        p.add_argument("--zs", default=None)
        p.add_argument("--betas", default=None)
        p.add_argument("--nas", default=None)
        p.add_argument("--regime", default=None, choices=("low", "high"))
        p.add_argument("--format", default=None, choices=("csv", "json", "svg"))
        p.add_argument("--out", default=None)
        p.add_argument("--jobs", default=None)
        p.add_argument("--config", default=None)
    return parser


_PARSER = _build_parser()


def _read_config_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _FLAG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _as_int(name, value):
    try:
        return int(str(value))
    except ValueError:
        raise UsageError(f"--{name} must be an integer, got {value!r}") from None


def _as_float(name, value):
    try:
        return float(str(value))
    except ValueError:
        raise UsageError(f"--{name} must be a number, got {value!r}") from None


def _as_beta(value):
    if str(value).strip().lower() in ("inf", "infinity"):
        return math.inf
    beta = _as_float("beta", value)
    if beta <= 0:
        raise UsageError(f"--beta must be positive or 'inf', got {value!r}")
    return beta


def _as_list(name, value, coerce):
    items = [s for s in str(value).split(",") if s.strip()]
    if not items:
        raise UsageError(f"--{name} needs a comma-separated list")
    return tuple(coerce(name, s.strip()) for s in items)


def parse_config(argv):
    """Merge argv and optional config file into a validated RunConfig."""
    ns = _PARSER.parse_args(argv)
    merged = {}
    if ns.config is not None:
        merged.update(_read_config_file(ns.config))
    for key in _FLAG_KEYS:
        flag = getattr(ns, key.replace("-", "_"))
        if flag is not None:
            merged[key] = flag

    if "beta" in merged and "temp" in merged:
        raise UsageError("--beta and --temp are mutually exclusive")

    cfg = RunConfig(command=ns.command, raw=dict(merged))
    if "n" in merged:
        cfg.n = _as_int("n", merged["n"])
    if "na" in merged:
        cfg.na = _as_int("na", merged["na"])
    if "z" in merged:
        cfg.z = _as_int("z", merged["z"])
    if "mass" in merged:
        cfg.mass = _as_float("mass", merged["mass"])
    if "beta" in merged:
        cfg.beta = _as_beta(merged["beta"])
    if "temp" in merged:
        temp = _as_float("temp", merged["temp"])
        if temp <= 0:
            raise UsageError(f"--temp must be positive, got {merged['temp']!r}")
        cfg.beta = 1.0 / temp
    if "eps" in merged:
        cfg.epsilon = _as_float("eps", merged["eps"])
        if cfg.epsilon <= 0:
            raise UsageError("--eps must be positive")
    if "theta" in merged:
        cfg.theta = _as_float("theta", merged["theta"])
    if "zs" in merged:
        cfg.zs = _as_list("zs", merged["zs"], _as_int)
    if "betas" in merged:
        cfg.betas = _as_list("betas", merged["betas"], lambda _n, s: _as_beta(s))
    if "nas" in merged:
        cfg.nas = _as_list("nas", merged["nas"], _as_int)
    if "regime" in merged:
        if merged["regime"] not in ("low", "high"):
            raise UsageError(f"--regime must be low or high, got {merged['regime']!r}")
        cfg.regime = merged["regime"]
    if "format" in merged:
        if merged["format"] not in ("csv", "json", "svg"):
            raise UsageError(f"--format must be csv/json/svg, got {merged['format']!r}")
        cfg.fmt = merged["format"]
    if "out" in merged:
        cfg.out = merged["out"]
    if "jobs" in merged:
        cfg.jobs = _as_int("jobs", merged["jobs"])
        if cfg.jobs < 1:
            raise UsageError("--jobs must be >= 1")
    return cfg


def _require(cfg, *names):
    for name in names:
        attr = {"eps": "epsilon"}.get(name, name)
        if getattr(cfg, attr) is None:
            raise UsageError(f"{cfg.command} requires --{name}")


def _emit(cfg, data):
    if cfg.out:
        Path(cfg.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _spec_of(cfg, z=None):
    return LatticeSpec(
        n_sites=cfg.n,
        z_exponent=cfg.z if z is None else z,
        mass=cfg.mass,
        spacing=cfg.epsilon,
        boundary_phase=cfg.theta,
    )


def _run_ee(cfg):
    _require(cfg, "n", "na", "z")
    point = entropy_of(_spec_of(cfg), cfg.beta, range(cfg.na))
    if cfg.fmt is None:
        print(f"{point.entropy:.12g}")
        return 0
    if cfg.fmt == "svg":
        raise UsageError("ee has a single value; svg output needs sweep")
    from .thermal import SweepRow

    table = SweepTable(
        rows=(
            SweepRow(
                z=cfg.z,
                beta=cfg.beta,
                n=cfg.n,
                na=cfg.na,
                epsilon=cfg.epsilon,
                mass=cfg.mass,
                entropy=point.entropy,
            ),
        )
    )
    _emit(cfg, emit_table(table, cfg.fmt))
    return 0


def _sweep_axes(cfg):
    zs = cfg.zs or ((cfg.z,) if cfg.z is not None else ())
    betas = cfg.betas or (cfg.beta,)
    nas = cfg.nas or ((cfg.na,) if cfg.na is not None else ())
    if not zs:
        raise UsageError("sweep requires --z or --zs")
    if not nas:
        raise UsageError("sweep requires --na or --nas")
    return zs, betas, nas


def _run_sweep(cfg):
    _require(cfg, "n")
    zs, betas, nas = _sweep_axes(cfg)
    table = sweep_entropy(
        zs,
        betas,
        nas,
        n_sites=cfg.n,
        mass=cfg.mass,
        spacing=cfg.epsilon,
        boundary_phase=cfg.theta,
        jobs=cfg.jobs,
    )
    fmt = cfg.fmt or "csv"
    if fmt == "svg":
        _emit(cfg, _sweep_plot(table, zs, betas, nas))
        return 0
    _emit(cfg, emit_table(table, fmt))
    return 0


def _sweep_plot(table, zs, betas, nas):
    rows = table.rows
    if len(nas) > 1:
        series = []
        for z in zs:
            for beta in betas:
                pts = [(r.na, r.entropy) for r in rows if r.z == z and r.beta == beta]
                pts.sort()
                lbl = f"z={z}" + ("" if len(betas) == 1 else f" b={beta:g}")
                series.append(([p[0] for p in pts], [p[1] for p in pts], lbl))
        meta = {"xlabel": "N_A", "ylabel": "S", "xscale": "log", "title": "S vs N_A"}
    elif len(betas) > 1:
        series = []
        for z in zs:
            for na in nas:
                pts = [(r.beta, r.entropy) for r in rows if r.z == z and r.na == na]
                pts.sort()
                series.append(([p[0] for p in pts], [p[1] for p in pts], f"z={z}"))
        meta = {"xlabel": "beta", "ylabel": "S", "xscale": "log", "title": "S vs beta"}
    else:
        pts = sorted((r.z, r.entropy) for r in rows)
        smax = 2 * nas[0] * math.log(2)
        series = [([p[0] for p in pts], [p[1] for p in pts], "S(z)")]
        meta = {
            "xlabel": "z",
            "ylabel": "S",
            "title": "S vs z",
            "hlines": [(smax, "2 N_A ln 2")],
        }
    return emit_plot(series, meta)


def _run_fit(cfg):
    _require(cfg, "n", "na", "z")
    if cfg.betas:
        betas = cfg.betas
    elif cfg.regime == "low":
        betas = default_low_temperature_betas(cfg.z, cfg.na, cfg.epsilon)
    else:
        betas = default_high_temperature_betas(cfg.z, cfg.na, cfg.epsilon)
    table = sweep_entropy(
        (cfg.z,),
        tuple(betas),
        (cfg.na,),
        n_sites=cfg.n,
        mass=cfg.mass,
        spacing=cfg.epsilon,
        boundary_phase=cfg.theta,
        jobs=cfg.jobs,
    )
    if cfg.regime == "low":
        fit = fit_low_temperature(table, cfg.z)
    else:
        fit = fit_high_temperature(table, cfg.z)
    if cfg.fmt == "json":
        import json

        payload = {
            "regime": cfg.regime,
            "z": cfg.z,
            "n_rows": fit.n_rows,
            "basis": list(fit.basis),
            "coefficients": [float(c) for c in fit.coefficients],
            "std_errors": [float(s) for s in fit.std_errors],
            "residual_rms": float(fit.residual_rms),
        }
        _emit(cfg, (json.dumps(payload, indent=1) + "\n").encode())
        return 0
    lines = [f"regime: {cfg.regime}   z: {cfg.z}   rows: {fit.n_rows}"]
    for name, coef, se in zip(fit.basis, fit.coefficients, fit.std_errors):
        lines.append(f"  coeff[{name}] = {coef:+.6g} +/- {se:.3g}")
    lines.append(f"  residual rms = {fit.residual_rms:.6g}")
    out = "\n".join(lines) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(out)
    else:
        print(out, end="")
    return 0


def _run_cmera(cfg):
    _require(cfg, "z")
    cutoff = 1.0 / cfg.epsilon
    u = np.linspace(-5.0, 0.0, 501)
    k = cutoff * np.exp(u)
    phi = np.array([cmera_mod.bogoliubov_angle(kv, cfg.z, cfg.mass) for kv in k])
    g = cmera_mod.g_closed_form(u, cfg.z, cfg.mass, cutoff)
    guu = cmera_mod.metric_guu(u, cfg.z, cfg.mass, cutoff)
    fmt = cfg.fmt or "csv"
    if fmt == "csv":
        lines = ["u,phi,g,guu"]
        for row in zip(u, phi, g, guu):
            lines.append(",".join(f"{v:.12g}" for v in row))
        _emit(cfg, ("\n".join(lines) + "\n").encode())
    elif fmt == "json":
        import json

        payload = [
            {"u": float(a), "phi": float(b), "g": float(c), "guu": float(d)}
            for a, b, c, d in zip(u, phi, g, guu)
        ]
        _emit(cfg, (json.dumps(payload, indent=1) + "\n").encode())
    else:
        data = emit_plot(
            [(u, phi, "phi"), (u, g, "g"), (u, guu, "g_uu")],
            {"xlabel": "u", "ylabel": "profile", "title": f"cMERA z={cfg.z}"},
        )
        _emit(cfg, data)
    return 0


def _run_oracle_check(cfg):
    _require(cfg, "n", "na", "z")
    if cfg.n > MAX_SITES:
        raise UsageError(f"oracle-check supports at most {MAX_SITES} sites")
    spec = _spec_of(cfg)
    state = many_body_state(spec, cfg.beta)
    corr_exact = mode_correlators(state)
    corr_fast = build_correlation_matrix(spec, cfg.beta, range(cfg.n)).entries
    corr_diff = float(np.abs(corr_exact - corr_fast).max())

    s_exact = reduced_entropy(state, range(cfg.na))
    s_fast = entanglement_entropy(
        build_correlation_matrix(spec, cfg.beta, range(cfg.na))
    )
    s_diff = abs(s_exact - s_fast)

    corr_ok = corr_diff <= CORRELATOR_TOL
    s_ok = s_diff <= ENTROPY_TOL
    print(
        f"correlators: max|fast - oracle| = {corr_diff:.3e} "
        f"(tol {CORRELATOR_TOL:g}) {'OK' if corr_ok else 'FAIL'}"
    )
    print(
        f"entropy: fast = {s_fast:.12g}  oracle = {s_exact:.12g}  "
        f"diff = {s_diff:.3e} (tol {ENTROPY_TOL:g}) {'OK' if s_ok else 'FAIL'}"
    )
    return 0 if (corr_ok and s_ok) else 1


_DISPATCH = {
    "ee": _run_ee,
    "sweep": _run_sweep,
    "fit": _run_fit,
    "cmera": _run_cmera,
    "oracle-check": _run_oracle_check,
}


def main(argv=None):
    os.environ.get("LIFSHITZ_EE_SEED")  # reserved; every code path is deterministic
    try:
        cfg = parse_config(argv)
        return _DISPATCH[cfg.command](cfg)
    except UsageError as exc:
        print(f"eechain: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    except EechainError as exc:
        print(f"eechain: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
