#! /usr/bin/env python
import click

from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config,
    open_output, write_output, print_table
)
from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Rounding.rounding import DEFAULT_T
from qmc_relax.Analysis.ratiolp import solve_ratio_lp, scan_F

@click.command(
    name="ratio-lp",
    help="Approximation ratio LP of the rounding at threshold t."
)
@click.option("-t", "--t", "t", default=DEFAULT_T, type=float,
              help="Singlet threshold, 3/4 <= t <= 1")
@click.option("--scan/--no-scan", default=False,
              help="Also scan F on (0, 1] for its minimum and monotonicity")
@common_options
def ratio_lp(t, scan, seed, tol, max_iter, scaling, output, debug, config):
    params = dict(t=t, scan=scan, tol=tol, output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    with guarded(debug):
        opts = SolverOptions(tol=min(params["tol"], 1e-9), verbose=debug)
        cfg = RunConfig("ratio_lp", t=params["t"], solver=opts.to_dict(),
                        output=params["output"], extra={"scan": params["scan"]})
        fh = open_output(cfg.output)
        lp = solve_ratio_lp(cfg.t, opts)
        body = {"ratio_lp": lp.to_dict()}
        rows = [("t", lp.t), ("F(t)", lp.F_t), ("F(t')", lp.F_tprime),
                ("alpha", lp.alpha), ("beta", lp.beta), ("gamma", lp.gamma),
                ("r", lp.value)]
        if params["scan"]:
            body["scan_F"] = scan_F()
            rows += [("min F", body["scan_F"]["min"]),
                     ("argmin F", body["scan_F"]["argmin"]),
                     ("F decreasing on (0, 4/5]", body["scan_F"]["monotone"])]
        write_output(fh, body, cfg, debug)
        print_table(rows)

def main():
    ratio_lp()

if __name__ == "__main__":
    main()
