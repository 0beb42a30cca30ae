#! /usr/bin/env python
import click

from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config, load_graph,
    read_versioned, open_output, write_output, print_table, fail
)
from qmc_relax.Graphs.graph import Graph
from qmc_relax.Models.scaling import convert_energy, scaling_tag, QMC_MAX
from qmc_relax.Models.relaxsolution import RelaxSolution
from qmc_relax.Rounding.rounding import round as round_solution, DEFAULT_T

@click.command(
    name="round",
    help="Round a SOC+P1 solution (written by qmr_solve) to explicit states."
)
@click.option("-t", "--t", "t", default=DEFAULT_T, type=float,
              help="Singlet threshold on y")
@click.option("-n", "--samples", default=100, type=int,
              help="Number of Gaussian projections")
@common_options
@click.argument("result", type=str, required=False)
def round_cmd(result, t, samples, seed, tol, max_iter, scaling, output, debug,
              config):
    params = dict(result=result, t=t, samples=samples, seed=seed,
                  scaling=scaling, output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    if params["result"] is None:
        fail("Result file not supplied")
    doc = read_versioned(params["result"])
    with guarded(debug):
        if "result" not in doc or "instance" not in doc:
            fail(f"Result file {params['result']} has no relaxation result")
        g = Graph.from_dict(doc["instance"])
        sol = RelaxSolution.from_dict(doc["result"])
        cfg = RunConfig("round", {"file": params["result"]}, sol.level,
                        scaling=params["scaling"], t=params["t"],
                        samples=params["samples"], seed=params["seed"],
                        output=params["output"],
                        extra={"result": params["result"]})
        fh = open_output(cfg.output)
        res = round_solution(sol, g, cfg.t, cfg.samples, cfg.seed, debug)
        write_output(fh, {"instance": g.to_dict(), "relaxation": sol.level,
                          "objective": sol.objective, "rounding": res.to_dict(),
                          "seed": cfg.seed}, cfg, debug)
        tag = scaling_tag(cfg.scaling)
        W = g.total_weight()
        conv = lambda v: None if v is None else convert_energy(v, QMC_MAX, tag, W)
        print_table([("instance", g.name),
                     ("matching size", len(res.matching)),
                     (f"expected singlet state ({tag.lower()})", conv(res.expected_energy_S)),
                     (f"expected product state ({tag.lower()})", conv(res.expected_energy_prod)),
                     (f"best sampled state ({tag.lower()})", conv(res.best_sampled_energy)),
                     (f"relaxation ({tag.lower()})", conv(res.relaxation_objective)),
                     ("guarantee ratio", res.guarantee_ratio)])

def main():
    round_cmd()

if __name__ == "__main__":
    main()
