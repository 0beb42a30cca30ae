#! /usr/bin/env python
import time

import click

from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config, load_graph,
    instance_source, open_output, write_output, print_table
)
from qmc_relax.Models.scaling import scaling_tag, all_scalings, VARBENCH
from qmc_relax.Exact.groundstate import ground_energy, DENSE, LANCZOS

@click.command(
    help="Exact ground state energy by sparse diagonalisation."
)
@click.option("-m", "--method", default=LANCZOS,
              type=click.Choice([DENSE, LANCZOS], case_sensitive=False),
              help="Diagonalisation method")
@click.option("--no-sectors", "no_sectors", default=False, is_flag=True,
              help="Diagonalise the full space instead of each Sz sector")
@common_options
@click.argument("instance", type=str, required=False)
def exact(instance, method, no_sectors, seed, tol, max_iter, scaling, output,
          debug, config):
    params = dict(instance=instance, method=method, no_sectors=no_sectors,
                  seed=seed, tol=tol, scaling=scaling, output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    with guarded(debug):
        cfg = RunConfig("exact", instance_source(params["instance"]),
                        scaling=params["scaling"],
                        solver={"tol": params["tol"]}, seed=params["seed"],
                        output=params["output"],
                        extra={"method": params["method"].upper(),
                               "no_sectors": params["no_sectors"]})
        fh = open_output(cfg.output)
        g = load_graph(cfg.instance)
        st = time.time()
        energy = ground_energy(g, VARBENCH, params["method"].upper(),
                               not params["no_sectors"], params["tol"],
                               params["seed"], debug)
        elapsed = time.time() - st
        energies = all_scalings(energy, VARBENCH, g.total_weight())
        write_output(fh, {"instance": g.to_dict(), "energy": energies,
                          "method": params["method"].upper(),
                          "elapsed": elapsed, "seed": cfg.seed}, cfg, debug)
        tag = scaling_tag(cfg.scaling).lower()
        print_table([("instance", g.name),
                     (f"ground energy ({tag})", energies[tag])])

def main():
    exact()

if __name__ == "__main__":
    main()
