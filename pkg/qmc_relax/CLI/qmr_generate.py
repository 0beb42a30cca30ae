#! /usr/bin/env python
import click

from qmc_relax.CLI.common import (
    RunConfig, common_options, guarded, load_config, merge_config, generate,
    open_output, write_output, print_table, fail
)
from qmc_relax.Graphs.graph import save_instance
from qmc_relax.Graphs.edgelist import save_edgelist

FAMILIES = ["square", "kagome", "ss", "er"]

def generator_params(family, L, periodic, cx, cy, j, jd, n, p, sigma, seed):
    if family == "square":
        params = {"L": L, "periodic": periodic}
    elif family == "kagome":
        params = {"cx": cx, "cy": cy, "periodic": periodic}
    elif family == "ss":
        params = {"L": L, "j": j, "jd": jd}
    else:
        params = {"n": n, "p": p, "seed": seed}
    if sigma:
        params["sigma"] = sigma
        params["disorder_seed"] = seed
    missing = [k for k, v in params.items() if v is None]
    if missing:
        fail(f"Generator {family} needs the options: {', '.join(missing)}")
    return params

@click.command(
    name="generate",
    help="Generate a lattice or random instance."
)
@click.option("-L", "--L", "L", default=None, type=int,
              help="Side length (square, ss)")
@click.option("--periodic/--open", default=True,
              help="Periodic boundary conditions (square, kagome)")
@click.option("--cx", default=None, type=int, help="Kagome cells along a1")
@click.option("--cy", default=None, type=int, help="Kagome cells along a2")
@click.option("-j", "--j", "j", default=None, type=float,
              help="Grid coupling J (ss)")
@click.option("--jd", default=1.0, type=float, help="Diagonal coupling J_D (ss)")
@click.option("-n", "--n", "n", default=None, type=int, help="Vertices (er)")
@click.option("-p", "--p", "p", default=None, type=float,
              help="Edge probability (er)")
@click.option("--sigma", default=0.0, type=float,
              help="Relative bond disorder applied after generation")
@click.option("-f", "--format", "fmt", default="json",
              type=click.Choice(["json", "edgelist"]), help="Output format")
@common_options
@click.argument("family", type=click.Choice(FAMILIES), required=False)
def generate_cmd(family, L, periodic, cx, cy, j, jd, n, p, sigma, fmt, seed,
                 tol, max_iter, scaling, output, debug, config):
    params = dict(family=family, L=L, periodic=periodic, cx=cx, cy=cy, j=j,
                  jd=jd, n=n, p=p, sigma=sigma, fmt=fmt, seed=seed,
                  output=output)
    if config:
        params = merge_config(click.get_current_context(), params,
                              load_config(config))
    if params["family"] is None:
        fail("Generator family not supplied")
    with guarded(debug):
        gen = generator_params(params["family"], params["L"], params["periodic"],
                               params["cx"], params["cy"], params["j"],
                               params["jd"], params["n"], params["p"],
                               params["sigma"], params["seed"])
        cfg = RunConfig("generate", {"generator": params["family"], "params": gen},
                        seed=params["seed"], output=params["output"],
                        extra={"fmt": params["fmt"]})
        g = generate(params["family"], gen)
        g.meta["config"] = cfg.to_dict()
        if cfg.output and params["fmt"] == "edgelist":
            save_edgelist(g, cfg.output)
        elif cfg.output:
            save_instance(g, cfg.output)
        print_table([("instance", g.name), ("vertices", g.n),
                     ("edges", g.num_edges()), ("total weight", g.total_weight())])
        if debug and cfg.output:
            print(f"Instance written: {cfg.output}")

def main():
    generate_cmd()

if __name__ == "__main__":
    main()
