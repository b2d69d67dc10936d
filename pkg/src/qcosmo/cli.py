"""Command-line front end: configuration ingestion and experiment artifacts.

Subcommands
-----------
exact      dense eigensolve of a model Hamiltonian -> result JSON
vqe        variational run -> result JSON + convergence trace CSV
eoh        fifth-time propagation -> profile CSV + summary JSON
reproduce  side-by-side comparison against the recorded reference tables

Exit codes: 0 success (an unconverged VQE is still a success), 1 numerical
failure, 2 usage or configuration error. Output files embed the resolved
configuration and a schema version; identical config and seed give
byte-identical JSON (the trace CSV's elapsed_ms column is wall-clock and
exempt).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import evolution, models, pauli, presets, tunneling, vqe
from .circuits import AnsatzSpec
from .errors import ConfigError, QcosmoError

SCHEMA_VERSION = 1

_TOP_KEYS = {"model", "params", "qubits", "basis", "vqe", "eoh", "tunneling", "seed", "out"}
_VQE_KEYS = {"reps", "rotations", "optimizer", "budget", "tol", "seed"}
_EOH_KEYS = {"kind", "n_qubits", "x0_index", "tau_list", "steps", "order",
             "center", "width", "params"}
_TUN_KEYS = {"model", "params", "guess"}

_OPTIMIZERS = {k.value: k for k in vqe.OptimizerKind}


def _validate(config: dict) -> dict:
    unknown = set(config) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for block, allowed in (("vqe", _VQE_KEYS), ("eoh", _EOH_KEYS), ("tunneling", _TUN_KEYS)):
        sub = config.get(block)
        if sub is None:
            continue
        if not isinstance(sub, dict):
            raise ConfigError(f"{block} block must be an object")
        bad = set(sub) - allowed
        if bad:
            raise ConfigError(f"unknown {block} keys: {sorted(bad)}")
    return config


def _load_config(args) -> dict:
    config: dict = {}
    if args.preset:
        config = presets.get_preset(args.preset)
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        config.update(loaded)

    if args.qubits:
        try:
            config["qubits"] = [int(q) for q in args.qubits.split(",")]
        except ValueError as exc:
            raise ConfigError(f"bad --qubits value {args.qubits!r}") from exc
    if args.basis:
        config["basis"] = args.basis
    if args.seed is not None:
        config.setdefault("vqe", {})["seed"] = args.seed
        config["seed"] = args.seed
    if args.budget is not None:
        config.setdefault("vqe", {})["budget"] = args.budget
    if args.optimizer:
        config.setdefault("vqe", {})["optimizer"] = args.optimizer
    if args.steps is not None:
        config.setdefault("eoh", {})["steps"] = args.steps
    if args.order is not None:
        config.setdefault("eoh", {})["order"] = args.order
    return _validate(config)


def _out_dir(args) -> Path:
    out = args.out or os.environ.get("QCOSMO_OUT") or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def _model_config(config: dict) -> dict:
    missing = [k for k in ("model", "qubits") if k not in config]
    if missing:
        raise ConfigError(f"config is missing keys: {missing}")
    return {
        "model": config["model"],
        "params": config.get("params", {}),
        "qubits": config["qubits"],
        "basis": config.get("basis", "oscillator"),
    }


def cmd_exact(args) -> int:
    config = _load_config(args)
    h, resolved = models.build_model(_model_config(config))
    ground, _ = vqe.exact_ground(h)
    n_terms = len(pauli.decompose(h))
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": resolved,
        "exact_ground": ground,
        "dim": h.shape[0],
        "pauli_terms": n_terms,
    }
    out = _out_dir(args) / "exact.json"
    _write_json(out, payload)
    print(f"exact ground {ground:.10g}  ({h.shape[0]}x{h.shape[0]}, {n_terms} Pauli terms) -> {out}")
    return 0


def cmd_vqe(args) -> int:
    config = _load_config(args)
    h, resolved = models.build_model(_model_config(config))
    vqe_cfg = config.get("vqe", {})
    n_qubits = int(np.log2(h.shape[0]))
    spec = AnsatzSpec(
        n_qubits=n_qubits,
        reps=int(vqe_cfg.get("reps", 3)),
        rotations=tuple(vqe_cfg.get("rotations", ["ry", "rz"])),
    )
    opt_name = vqe_cfg.get("optimizer", "gradient-descent")
    if opt_name not in _OPTIMIZERS:
        raise ConfigError(f"unknown optimizer {opt_name!r}; known: {sorted(_OPTIMIZERS)}")
    opt = vqe.OptimizerConfig(
        kind=_OPTIMIZERS[opt_name],
        budget=int(vqe_cfg.get("budget", 600)),
        tol=float(vqe_cfg.get("tol", 1e-9)),
        seed=int(vqe_cfg.get("seed", 0)),
    )
    result = vqe.run_vqe(h, spec, opt)
    exact, _ = vqe.exact_ground(h)
    n_terms = len(pauli.decompose(h))

    out_dir = _out_dir(args)
    trace_path = out_dir / "vqe_trace.csv"
    lines = ["eval,energy,elapsed_ms"]
    for (i, energy), elapsed in zip(result.trace, result.eval_times):
        lines.append(f"{i},{energy:.17g},{elapsed * 1e3:.17g}")
    trace_path.write_text("\n".join(lines) + "\n")

    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": resolved,
        "model": resolved["model"],
        "qubits": resolved["qubits"],
        "pauli_terms": n_terms,
        "exact": exact,
        "vqe": result.energy,
        "seed": opt.seed,
        "optimizer": opt_name,
        "budget": opt.budget,
        "reps": spec.reps,
        "converged": result.converged,
        "n_evals": result.n_evals,
    }
    _write_json(out_dir / "vqe.json", payload)
    print(
        f"vqe {result.energy:.10g} vs exact {exact:.10g} "
        f"({result.n_evals} evals, converged={result.converged}) -> {out_dir / 'vqe.json'}"
    )
    return 0


def cmd_eoh(args) -> int:
    config = _load_config(args)
    eoh_cfg = config.get("eoh")
    if not eoh_cfg:
        raise ConfigError("eoh command requires an 'eoh' block or preset")
    kind = eoh_cfg.get("kind", "interval")
    n_qubits = int(eoh_cfg.get("n_qubits", 5))
    tau_list = [float(t) for t in eoh_cfg.get("tau_list", [0.0, 0.1])]
    steps = int(eoh_cfg.get("steps", 64))
    order = int(eoh_cfg.get("order", 2))

    if kind == "interval":
        x0 = int(eoh_cfg.get("x0_index", 2**n_qubits // 2))
        profiles = evolution.interval_propagation_profile(
            n_qubits, tau_list, x0, steps=steps, order=order
        )
        h = evolution.free_interval_hamiltonian(n_qubits)
        psi0 = np.zeros(2**n_qubits, dtype=complex)
        psi0[x0] = 1.0
        exact_states = [evolution.exact_evolve(h, t, psi0) for t in tau_list]
    elif kind == "double-well":
        params, _ = models.params_from_dict(
            "minisuperspace", {**eoh_cfg.get("params", {}), "kind": "neg-lambda-morse"}
        )
        center = float(eoh_cfg.get("center", -1.5))
        width = float(eoh_cfg.get("width", 0.35))
        profiles = evolution.double_well_eoh(
            params, n_qubits, tau_list, center, width, steps=steps, order=order
        )
        grid = evolution.fd_grid(n_qubits)
        v = params.volume(models.MinisuperspaceKind.NEG_LAMBDA_MORSE)
        pot = 2.0 * v**2 * params.k_curv * grid**2 - 2.0 * v**2 * params.Lambda * grid**4
        from .bases import BasisKind, build_momentum_squared

        h = build_momentum_squared(BasisKind.FINITE_DIFFERENCE, 2**n_qubits) / 2.0 + np.diag(
            pot.astype(complex)
        )
        psi0 = evolution.gaussian_on_grid(grid, center, width)
        exact_states = [evolution.exact_evolve(h, t, psi0) for t in tau_list]
    else:
        raise ConfigError(f"unknown eoh kind {kind!r}")

    out_dir = _out_dir(args)
    lines = ["tau,x_index,x_value,re_K,im_K,abs2_K"]
    for prof in profiles:
        for i, (x, val) in enumerate(zip(prof.grid, prof.values)):
            lines.append(
                f"{prof.tau:.17g},{i},{x:.17g},{val.real:.17g},{val.imag:.17g},"
                f"{abs(val) ** 2:.17g}"
            )
    (out_dir / "eoh_profile.csv").write_text("\n".join(lines) + "\n")

    deviations = [
        float(np.max(np.abs(np.abs(exact) ** 2 - prof.squared)))
        for exact, prof in zip(exact_states, profiles)
    ]
    norms = [float(np.sum(prof.squared)) for prof in profiles]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": {"eoh": eoh_cfg},
        "tau": tau_list,
        "norm": norms,
        "deviation_vs_exact": deviations,
    }
    _write_json(out_dir / "eoh.json", payload)
    print(f"eoh profiles for tau={tau_list} -> {out_dir / 'eoh_profile.csv'}")
    return 0


def _tunneling_report(config: dict) -> dict:
    block = config.get("tunneling", {"model": "dark_energy_1r", "params": {}, "guess": 5.0})
    model = block.get("model", "dark_energy_1r")
    params, _ = models.params_from_dict(model, block.get("params", {}))
    if model == "dark_energy_1r":
        potential = models.dark_energy_potential(params)
    elif model == "starobinsky":
        potential = models.starobinsky_potential(params)
    else:
        raise ConfigError(f"tunneling analysis supports single-field models, not {model!r}")
    return tunneling.report(potential, float(block.get("guess", 5.0)))


def cmd_reproduce(args) -> int:
    table_id = args.table
    if table_id not in presets.REPRODUCE_TABLES:
        print(
            f"unknown table id {table_id!r}; known: {sorted(presets.REPRODUCE_TABLES)}",
            file=sys.stderr,
        )
        return 2
    spec = presets.REPRODUCE_TABLES[table_id]
    tun_cache: dict | None = None
    rows_out = []
    for row in spec["rows"]:
        preset = presets.get_preset(row["preset"])
        quantity = row["quantity"]
        if quantity in ("exact_ground", "pauli_terms"):
            h, _ = models.build_model(_model_config(preset))
            if quantity == "exact_ground":
                computed = vqe.exact_ground(h)[0]
            else:
                computed = len(pauli.decompose(h))
        else:
            if tun_cache is None:
                tun_cache = _tunneling_report(preset)
            if quantity not in tun_cache:
                raise ConfigError(f"unknown reproduce quantity {quantity!r}")
            computed = tun_cache[quantity]
        ref = row["reference"]
        abs_err = abs(computed - ref)
        rel_err = abs_err / abs(ref) if ref != 0 else float("inf")
        rows_out.append((row["preset"], quantity, ref, computed, abs_err, rel_err))

    tag = " (provisional reference values)" if spec["provisional"] else ""
    print(f"reproduction check: {table_id}{tag}")
    header = f"{'preset':<12} {'quantity':<22} {'reference':>14} {'computed':>22} {'abs_err':>10} {'rel_err':>10}"
    print(header)
    print("-" * len(header))
    for preset_name, quantity, ref, computed, abs_err, rel_err in rows_out:
        matched = "match" if rel_err < 1e-3 else "differs"
        print(
            f"{preset_name:<12} {quantity:<22} {ref:>14} {_fmt(computed):>22} "
            f"{abs_err:>10.2e} {rel_err:>10.2e}  {matched}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcosmo",
        description="Quantum cosmology toolkit: exact spectra, VQE, and fifth-time evolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="JSON run configuration")
        p.add_argument("--preset", help="named preset (see qcosmo reproduce --list)")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", help="output directory (default $QCOSMO_OUT or .)")
        p.add_argument("--qubits", help="qubit counts, e.g. 4 or 4,4")
        p.add_argument("--basis", choices=["oscillator", "position", "fd"])
        p.add_argument("--optimizer", choices=sorted(_OPTIMIZERS))
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--steps", type=int, default=None)
        p.add_argument("--order", type=int, choices=[1, 2], default=None)

    for name, fn in (("exact", cmd_exact), ("vqe", cmd_vqe), ("eoh", cmd_eoh)):
        p = sub.add_parser(name)
        add_common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("reproduce")
    p.add_argument("table", help=f"one of {sorted(presets.REPRODUCE_TABLES)}")
    p.set_defaults(fn=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except QcosmoError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
