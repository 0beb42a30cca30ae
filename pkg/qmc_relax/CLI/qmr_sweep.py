#! /usr/bin/env python
import os.path

import click
import numpy as np

from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config,
    open_output, write_output, print_table, fail
)
from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Graphs.lattices import gen_shastry_sutherland
from qmc_relax.Graphs.disorder import apply_disorder
from qmc_relax.Models.relaxsolution import level_tag, SOC, SOC_P1
from qmc_relax.Analysis.sssweep import run_ss_sweep, run_disorder_study, find_kink
from qmc_relax.Analysis.erstudy import run_er_study
from qmc_relax.Analysis.heatmap import emit_heatmap

def parse_grid(text):
    """'0.3:0.7:0.05' (inclusive range) or '0.3,0.4,0.5'."""
    try:
        if ":" in text:
            start, stop, step = (float(v) for v in text.split(":"))
            if step <= 0:
                raise ValueError("step must be positive")
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + k * step, 12) for k in range(count)]
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        fail(f"Could not parse grid '{text}': {e}")

def sweep_ss(params, opts, debug):
    grid = parse_grid(params["ratios"])
    sweep = run_ss_sweep(params["L"], grid, params["sigma"], params["seed"],
                         (SOC, SOC_P1), None, opts, debug)
    rows = [(f"J/J_D={p['value']:.4g}",
             " ".join(f"{k}={p[k]:.6f}" for k in ("soc", "soc_p1", "ed")
                      if p.get(k) is not None))
            for p in sweep.points]
    if len(grid) >= 3:
        at, jump = find_kink(sweep.grid, sweep.objectives("soc"))
        rows.append(("SOC slope kink", f"{at:.4g} (slope change {jump:.4g})"))
    if params["heatmap"]:
        for p in sweep.points:
            g = apply_disorder(gen_shastry_sutherland(params["L"], p["value"], 1.0),
                               params["sigma"], params["seed"])
            emit_heatmap(p, g, f"{params['heatmap']}_{p['value']:.4g}.csv")
    return sweep, {"sweep": sweep.metadata()}, rows

def sweep_er(params, opts, debug):
    study = run_er_study(params["n"], params["p"], params["instances"],
                         level_tag(params["relaxation"]), params["seed"], opts,
                         verbose=debug)
    rows = [("instances", len(study.ratios)), ("mean ratio", study.mean),
            ("standard error", study.stderr)]
    return None, {"er_study": study.to_dict()}, rows

def sweep_disorder(params, opts, debug):
    ratio = parse_grid(params["ratios"])[0]
    seeds = list(range(params["seed"], params["seed"] + params["instances"]))
    study = run_disorder_study(params["L"], ratio, params["sigma"], seeds,
                               (SOC, SOC_P1), opts, debug)
    rows = [(f"ED/{k} mean", f"{v['mean']:.6f} +- {v['stderr']:.1e}")
            for k, v in study.items()]
    return None, {"disorder_study": study, "ratio": ratio, "seeds": seeds}, rows

SWEEPS = {"ss": sweep_ss, "er": sweep_er, "disorder": sweep_disorder}

@click.command(
    name="sweep",
    help="Parameter sweeps: Shastry-Sutherland (ss), Erdos-Renyi ratios (er) "
         "and disorder averages (disorder)."
)
@click.option("-L", "--L", "L", default=4, type=int, help="Side length (ss, disorder)")
@click.option("--ratios", default="0.3:0.7:0.05", type=str,
              help="J/J_D grid 'start:stop:step' or comma list")
@click.option("--sigma", default=0.0, type=float, help="Relative bond disorder")
@click.option("-n", "--n", "n", default=10, type=int, help="Vertices (er)")
@click.option("-p", "--p", "p", default=0.2, type=float, help="Edge probability (er)")
@click.option("-i", "--instances", default=20, type=int,
              help="Random instances (er) or disorder seeds (disorder)")
@click.option("-r", "--relaxation", default="soc",
              type=click.Choice(["soc", "soc-p1"], case_sensitive=False),
              help="Relaxation level (er)")
@click.option("--heatmap", default=None, type=str,
              help="Write per-edge heatmap CSVs with this prefix (ss)")
@common_options
@click.argument("kind", type=click.Choice(list(SWEEPS)), required=False)
def sweep(kind, L, ratios, sigma, n, p, instances, relaxation, heatmap, seed,
          tol, max_iter, scaling, output, debug, config):
    params = dict(kind=kind, L=L, ratios=ratios, sigma=sigma, n=n, p=p,
                  instances=instances, relaxation=relaxation, heatmap=heatmap,
                  seed=seed, tol=tol, max_iter=max_iter, output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    if params["kind"] is None:
        fail("Sweep kind not supplied")
    with guarded(debug):
        opts = SolverOptions(tol=params["tol"], max_iter=params["max_iter"])
        extra = {k: params[k] for k in ("kind", "L", "ratios", "sigma", "n", "p",
                                        "instances", "heatmap")}
        cfg = RunConfig("sweep", relaxation=level_tag(params["relaxation"]),
                        solver=opts.to_dict(), seed=params["seed"],
                        output=params["output"], extra=extra)
        fh = open_output(cfg.output)
        result, body, rows = SWEEPS[params["kind"]](params, opts, debug)
        write_output(fh, body, cfg, debug)
        if result is not None and cfg.output:
            result.write_csv(os.path.splitext(cfg.output)[0] + ".csv")
        print_table(rows, f"Sweep {params['kind']}:")

def main():
    sweep()

if __name__ == "__main__":
    main()
