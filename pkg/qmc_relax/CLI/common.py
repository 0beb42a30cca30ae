import sys
import json
import os.path
from contextlib import contextmanager
from datetime import datetime

import click
from click.core import ParameterSource

from qmc_relax.CLI import (
    QMR_FILE_FORMAT_VERSION, EXIT_USAGE, EXIT_VALIDATION, EXIT_NUMERICAL
)
from qmc_relax.Graphs.graph import GraphError, load_instance
from qmc_relax.Graphs.edgelist import load_edgelist
from qmc_relax.Graphs.lattices import gen_square, gen_kagome, gen_shastry_sutherland
from qmc_relax.Graphs.erdosrenyi import gen_erdos_renyi
from qmc_relax.Graphs.disorder import apply_disorder
from qmc_relax.Models.scaling import ModelError
from qmc_relax.Models.relaxsolution import RelaxationSolveError
from qmc_relax.Conic.cones import ConicError
from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Symmetry.permutations import SymmetryError
from qmc_relax.Exact.hamiltonian import ExactError
from qmc_relax.Rounding.hypergeometric import RoundingError
from qmc_relax.Analysis.sweepresult import AnalysisError

class ConfigError(Exception):
    pass

class RunConfig:
    """Every option of one command run; round trips through JSON."""
    FIELDS = ("command", "instance", "relaxation", "triples", "quads",
              "scaling", "solver", "t", "samples", "seed", "output", "extra")

    def __init__(self, command, instance=None, relaxation=None, triples="all",
                 quads="two-edge", scaling="varbench", solver=None, t=0.771,
                 samples=100, seed=0, output=None, extra=None):
        self.command = command
        self.instance = instance
        self.relaxation = relaxation
        self.triples = triples
        self.quads = quads
        self.scaling = scaling
        self.solver = solver if solver is not None else SolverOptions().to_dict()
        self.t = t
        self.samples = samples
        self.seed = seed
        self.output = output
        self.extra = dict(extra) if extra is not None else {}

    def solver_options(self):
        return SolverOptions.from_dict(self.solver)

    def to_dict(self):
        return {f: getattr(self, f) for f in self.FIELDS}

    @staticmethod
    def from_dict(d):
        unknown = [k for k in d if k not in RunConfig.FIELDS]
        if unknown:
            raise ConfigError(f"Unknown config keys: {unknown}")
        if "command" not in d:
            raise ConfigError("Config has no command")
        return RunConfig(**d)

    def __eq__(self, other):
        return isinstance(other, RunConfig) and self.to_dict() == other.to_dict()


def fail(message, code=EXIT_USAGE):
    print(message)
    sys.exit(code)

def error_code(e):
    """Exit code of a library exception (None when it is not one of ours)."""
    if isinstance(e, RelaxationSolveError):
        return EXIT_NUMERICAL
    if isinstance(e, ExactError):
        if str(e).startswith("dimension cap"):
            return EXIT_VALIDATION
        return EXIT_NUMERICAL
    if isinstance(e, RoundingError):
        if str(e).startswith("not-PSD"):
            return EXIT_NUMERICAL
        return EXIT_VALIDATION
    if isinstance(e, (GraphError, ModelError, ConicError, SymmetryError,
                      AnalysisError)):
        return EXIT_VALIDATION
    return None

@contextmanager
def guarded(debug=False):
    """Turn library errors into a message and an exit code."""
    try:
        yield
    except (GraphError, ModelError, ConicError, SymmetryError, ExactError,
            RoundingError, AnalysisError, RelaxationSolveError) as e:
        if debug:
            print(f"{type(e).__name__}: {e}")
        fail(f"Error: {e}", error_code(e))

def read_json(path, what="input"):
    try:
        fh = open(path, "r")
    except (FileNotFoundError, IsADirectoryError):
        fail(f"{what} file cannot be found: {str(path)}")
    try:
        with fh:
            d = json.load(fh)
    except Exception as e:
        fail(f"{what} file cannot be parsed: {str(path)}, reason: {e}")
    return d

def read_versioned(path, what="result"):
    d = read_json(path, what)
    version_err_msg = (
        f"Version of file: {path} does not match current version:"
        f" {QMR_FILE_FORMAT_VERSION}.  Please recompute it."
    )
    if not isinstance(d, dict) or d.get("version") != QMR_FILE_FORMAT_VERSION:
        fail(version_err_msg)
    return d

def load_config(path):
    d = read_json(path, "config")
    try:
        return RunConfig.from_dict(d.get("config", d))
    except ConfigError as e:
        fail(f"Config file {path} is not usable: {e}")

def merge_config(ctx, params, cfg):
    """Replace options left at their defaults by the values of cfg."""
    mapping = {"relaxation": "relaxation", "triples": "triples",
               "quads": "quads", "scaling": "scaling", "t": "t",
               "samples": "samples", "seed": "seed", "output": "output"}
    solver_keys = {"tol": "tol", "max_iter": "max_iter", "method": "method"}
    for name in params:
        if ctx.get_parameter_source(name) != ParameterSource.DEFAULT:
            continue
        if name in mapping and getattr(cfg, mapping[name]) is not None:
            params[name] = getattr(cfg, mapping[name])
        elif name in solver_keys and solver_keys[name] in cfg.solver:
            params[name] = cfg.solver[solver_keys[name]]
        elif name in cfg.extra:
            params[name] = cfg.extra[name]
    if params.get("instance") is None and cfg.instance is not None:
        params["instance"] = cfg.instance
    return params

def _number(text):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    return text

def parse_generator_spec(text):
    """'square:L=4,periodic=true' -> ('square', {'L': 4, 'periodic': True})."""
    family, _, rest = text.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise GraphError(f"invalid-parameter: bad generator option '{item}'")
        params[key.strip()] = _number(value.strip())
    return family.strip().lower(), params

def generate(family, params):
    """Build an instance from a generator family and its parameters."""
    p = dict(params)
    sigma = p.pop("sigma", 0.0)
    disorder_seed = p.pop("disorder_seed", p.get("seed", 0))
    try:
        if family == "square":
            g = gen_square(p["L"], p.get("periodic", True))
        elif family == "kagome":
            g = gen_kagome(p["cx"], p["cy"], p.get("periodic", True))
        elif family == "ss":
            g = gen_shastry_sutherland(p["L"], p.get("j", p.get("J", 1.0)),
                                       p.get("jd", p.get("J_D", 1.0)))
        elif family == "er":
            g = gen_erdos_renyi(p["n"], p["p"], p.get("seed", 0))
        else:
            raise GraphError(f"invalid-parameter: unknown generator family '{family}'")
    except KeyError as e:
        raise GraphError(f"invalid-parameter: generator {family} needs {e}")
    if sigma:
        g = apply_disorder(g, sigma, disorder_seed)
    return g

def load_graph(instance):
    """An instance from a JSON/edge-list file, a generator spec string or a
    dict {"generator": family, "params": {...}}."""
    if isinstance(instance, dict):
        if "file" in instance:
            return load_graph(instance["file"])
        return generate(instance["generator"], instance.get("params", {}))
    if instance is None:
        fail("Instance not supplied")
    if os.path.exists(instance):
        try:
            if instance.endswith(".json"):
                return load_instance(instance)
            return load_edgelist(instance)
        except OSError as e:
            fail(f"Instance file cannot be read: {instance}, reason: {e}")
    if ":" in instance:
        return generate(*parse_generator_spec(instance))
    fail(f"Instance file cannot be found: {instance}")

def instance_source(instance):
    if isinstance(instance, dict):
        return instance
    if instance is not None and not os.path.exists(instance) and ":" in instance:
        family, params = parse_generator_spec(instance)
        return {"generator": family, "params": params}
    return {"file": os.path.abspath(instance) if instance else None}

def open_output(output):
    # open the output before the (long) processing so a bad path fails early
    if not output:
        return None
    try:
        return open(output, "w")
    except (FileNotFoundError, IsADirectoryError, PermissionError):
        fail(f"Could not write output file: {output}")

def write_output(fh, body, cfg, debug=False):
    """Wrap body with version, date and config; write it or print it."""
    doc = {"version": QMR_FILE_FORMAT_VERSION,
           "date": datetime.now().isoformat(),
           "config": cfg.to_dict()}
    doc.update(body)
    if fh is not None:
        json.dump(doc, fh, indent=1)
        fh.close()
        if debug:
            print(f"Output file written: {cfg.output}")
    return doc

def print_table(rows, header=None):
    if header:
        print(header)
    width = max([len(str(k)) for k, _ in rows], default=0)
    for k, v in rows:
        if isinstance(v, float):
            v = f"{v:.10g}"
        print(f"    {str(k):<{width}} : {v}")

def common_options(func):
    """Options shared by every command."""
    options = [
        click.option("-s", "--seed", default=0, type=int,
                     help="Seed of every random draw"),
        click.option("--tol", default=1e-8, type=float,
                     help="Solver tolerance"),
        click.option("--max-iter", "max_iter", default=200, type=int,
                     help="Solver iteration limit"),
        click.option("--scaling", default="varbench",
                     type=click.Choice(["varbench", "qmc", "qmc_min", "qmc_max"],
                                       case_sensitive=False),
                     help="Energy scaling of printed results"),
        click.option("-o", "--output", default=None, type=str,
                     help="Output file name"),
        click.option("-D", "--debug", default=False, is_flag=True,
                     help="Provide debug info"),
        click.option("-C", "--config", default=None, type=str,
                     help="Re-run the configuration stored in a result file"),
    ]
    for option in reversed(options):
        func = option(func)
    return func
