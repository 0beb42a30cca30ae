#! /usr/bin/env python
import sys

import click

from qmc_relax.CLI import EXIT_VALIDATION
from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config,
    open_output, write_output
)
from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Analysis.acceptance import SUITES, run_suite

@click.command(
    name="verify",
    help="Run verification suites; exits non-zero when any check fails."
)
@click.option("-q", "--quick", default=False, is_flag=True,
              help="Reduced sample counts and instances")
@common_options
@click.argument("suites", nargs=-1, type=click.Choice(["all"] + list(SUITES)))
def verify(suites, quick, seed, tol, max_iter, scaling, output, debug, config):
    params = dict(suites=suites, quick=quick, seed=seed, tol=tol,
                  max_iter=max_iter, output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    names = list(params["suites"])
    if not names or "all" in names:
        names = list(SUITES)
    with guarded(debug):
        opts = SolverOptions(tol=params["tol"], max_iter=params["max_iter"])
        cfg = RunConfig("verify", solver=opts.to_dict(), seed=params["seed"],
                        output=params["output"],
                        extra={"suites": names, "quick": params["quick"]})
        fh = open_output(cfg.output)
        reports = []
        for name in names:
            print(f"Suite {name}:")
            report = run_suite(name, params["quick"], params["seed"], opts, True)
            reports.append(report)
            print(f"Suite {name}: {'passed' if report.passed else 'FAILED'}")
        write_output(fh, {"suites": [r.to_dict() for r in reports]}, cfg, debug)
    if not all(r.passed for r in reports):
        sys.exit(EXIT_VALIDATION)

def main():
    verify()

if __name__ == "__main__":
    main()
