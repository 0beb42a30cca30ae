#! /usr/bin/env python
import time

import click

from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config, load_graph,
    instance_source, open_output, write_output, print_table
)
from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Models.scaling import scaling_tag
from qmc_relax.Models.socmodel import policy_tag
from qmc_relax.Models.relaxsolution import solve_relaxation, level_tag

def solve_body(cfg, debug=False):
    g = load_graph(cfg.instance)
    opts = cfg.solver_options()
    if debug:
        print(f"Solving {cfg.relaxation} on {g.name}: n={g.n}, "
              f"|E|={g.num_edges()}, W={g.total_weight()}")
    st = time.time()
    sol = solve_relaxation(g, cfg.relaxation, policy_tag(cfg.triples),
                           policy_tag(cfg.quads), opts)
    ed = time.time()
    if debug:
        print("Time taken: ", ed - st)
    body = {"instance": g.to_dict(),
            "relaxation": sol.level,
            "objective": sol.objective,
            "x": sol.x.tolist(),
            "solver": sol.solver_stats,
            "seed": cfg.seed,
            "result": sol.to_dict()}
    if sol.M is not None:
        body["M"] = sol.M.tolist()
    return g, sol, body

@click.command(
    help="Solve the SOC, SOC+P1 or SOC+4-body relaxation of an instance."
)
@click.option("-r", "--relaxation", default="soc",
              type=click.Choice(["soc", "soc-p1", "soc-4"], case_sensitive=False),
              help="Relaxation level")
@click.option("--triples", default="all",
              type=click.Choice(["all", "two-edge"], case_sensitive=False),
              help="Triples carrying the LM and PT constraints")
@click.option("--quads", default="two-edge",
              type=click.Choice(["all", "two-edge"], case_sensitive=False),
              help="Quadruples carrying the 4-body blocks (soc-4)")
@click.option("-m", "--method", default="IPM",
              type=click.Choice(["IPM", "ADMM"], case_sensitive=False),
              help="Conic solver")
@common_options
@click.argument("instance", type=str, required=False)
def solve(instance, relaxation, triples, quads, method, seed, tol, max_iter,
          scaling, output, debug, config):
    params = dict(instance=instance, relaxation=relaxation, triples=triples,
                  quads=quads, method=method, seed=seed, tol=tol,
                  max_iter=max_iter, scaling=scaling, output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    with guarded(debug):
        opts = SolverOptions(tol=params["tol"], max_iter=params["max_iter"],
                             method=params["method"].upper(), verbose=debug)
        cfg = RunConfig("solve", instance_source(params["instance"]),
                        level_tag(params["relaxation"]), params["triples"],
                        params["quads"], params["scaling"], opts.to_dict(),
                        seed=params["seed"], output=params["output"])
        fh = open_output(cfg.output)
        g, sol, body = solve_body(cfg, debug)
        write_output(fh, body, cfg, debug)
        tag = scaling_tag(cfg.scaling)
        print_table([("instance", g.name),
                     ("relaxation", sol.level),
                     (f"objective ({tag.lower()})", sol.objective[tag.lower()]),
                     ("objective (varbench)", sol.objective["varbench"]),
                     ("iterations", sol.solver_stats.get("iterations")),
                     ("residuals", sol.solver_stats.get("residuals"))])

def main():
    solve()

if __name__ == "__main__":
    main()
