import json
import unittest

from click.testing import CliRunner

from qmc_relax.CLI import QMR_FILE_FORMAT_VERSION, EXIT_USAGE, EXIT_VALIDATION
from qmc_relax.CLI.common import (
    RunConfig, ConfigError, parse_generator_spec, load_graph
)
from qmc_relax.CLI.qmr_generate import generate_cmd
from qmc_relax.CLI.qmr_solve import solve
from qmc_relax.CLI.qmr_exact import exact
from qmc_relax.CLI.qmr_round import round_cmd
from qmc_relax.CLI.qmr_ratio_lp import ratio_lp
from qmc_relax.CLI.qmr_sweep import parse_grid
from qmc_relax.CLI.qmr_verify import verify
from qmc_relax.Graphs.graph import load_instance

def read(path):
    with open(path) as fh:
        return json.load(fh)

class commonTest(unittest.TestCase):
    def test_generator_spec(self):
        family, params = parse_generator_spec("square:L=4,periodic=false")
        assert(family == "square")
        assert(params == {"L": 4, "periodic": False})
        g = load_graph("er:n=5,p=1.0,seed=3")
        assert(g.num_edges() == 10)

    def test_config_round_trip(self):
        cfg = RunConfig("solve", {"generator": "square", "params": {"L": 4}},
                        "SOC", seed=3, extra={"method": "IPM"})
        assert(RunConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg)
        with self.assertRaises(ConfigError):
            RunConfig.from_dict({"command": "solve", "colour": "red"})
        with self.assertRaises(ConfigError):
            RunConfig.from_dict({"relaxation": "SOC"})

    def test_parse_grid(self):
        assert(parse_grid("0.3:0.5:0.1") == [0.3, 0.4, 0.5])
        assert(parse_grid("0.4,0.6") == [0.4, 0.6])


class commandsTest(unittest.TestCase):
    """The command line tools, run through click's test runner."""
    def setUp(self):
        self.runner = CliRunner()

    def test_generate(self):
        with self.runner.isolated_filesystem():
            r = self.runner.invoke(generate_cmd, ["square", "-L", "3", "-o", "sq.json"])
            assert(r.exit_code == 0), r.output
            g = load_instance("sq.json")
            assert(g.n == 9 and g.num_edges() == 18)
            assert(g.meta["config"]["command"] == "generate")
            r = self.runner.invoke(generate_cmd, ["ss", "-L", "4", "-j", "0.4",
                                                  "-f", "edgelist", "-o", "ss.txt"])
            assert(r.exit_code == 0), r.output
            assert("40" in r.output)

    def test_generate_errors(self):
        r = self.runner.invoke(generate_cmd, ["kagome", "--cx", "1", "--cy", "1"])
        assert(r.exit_code == EXIT_VALIDATION)
        r = self.runner.invoke(generate_cmd, ["square"])
        assert(r.exit_code == EXIT_USAGE)

    def test_solve_round_exact(self):
        with self.runner.isolated_filesystem():
            r = self.runner.invoke(generate_cmd, ["er", "-n", "4", "-p", "1",
                                                  "-s", "7", "-o", "k4.json"])
            assert(r.exit_code == 0), r.output
            r = self.runner.invoke(solve, ["k4.json", "-r", "soc-p1", "--tol", "1e-7",
                                           "-o", "res.json"])
            assert(r.exit_code == 0), r.output
            doc = read("res.json")
            assert(doc["version"] == QMR_FILE_FORMAT_VERSION)
            assert(abs(doc["objective"]["varbench"] + 6.0) < 1e-5)
            assert(doc["config"]["relaxation"] == "SOC_P1")
            assert(len(doc["M"]) == 4)

            r = self.runner.invoke(round_cmd, ["res.json", "-n", "20", "-o", "rnd.json"])
            assert(r.exit_code == 0), r.output
            rnd = read("rnd.json")["rounding"]
            assert(rnd["samples"] == 20)
            assert(rnd["guarantee_ratio"] >= 0.526)

            r = self.runner.invoke(exact, ["k4.json", "-o", "ed.json"])
            assert(r.exit_code == 0), r.output
            assert(abs(read("ed.json")["energy"]["varbench"] + 6.0) < 1e-8)

    def test_rerun_config(self):
        with self.runner.isolated_filesystem():
            r = self.runner.invoke(solve, ["er:n=5,p=1.0,seed=1", "--tol", "1e-7",
                                           "-o", "a.json"])
            assert(r.exit_code == 0), r.output
            r = self.runner.invoke(solve, ["-C", "a.json", "-o", "b.json"])
            assert(r.exit_code == 0), r.output
            a, b = read("a.json"), read("b.json")
            for key in ("instance", "relaxation", "triples", "solver", "seed"):
                assert(a["config"][key] == b["config"][key])
            assert(abs(a["objective"]["varbench"] - b["objective"]["varbench"]) < 1e-9)

    def test_solve_errors(self):
        r = self.runner.invoke(solve, ["no_such_file.json"])
        assert(r.exit_code == EXIT_USAGE)
        with self.runner.isolated_filesystem():
            self.runner.invoke(solve, ["er:n=3,p=1.0", "-o", "soc.json"])
            # rounding needs the moment matrix of a SOC+P1 result
            r = self.runner.invoke(round_cmd, ["soc.json"])
            assert(r.exit_code == EXIT_VALIDATION)
            with open("old.json", "w") as fh:
                json.dump({"version": -1}, fh)
            r = self.runner.invoke(round_cmd, ["old.json"])
            assert(r.exit_code == EXIT_USAGE)

    def test_exact_cap(self):
        r = self.runner.invoke(exact, ["er:n=13,p=0.5,seed=2", "-m", "DENSE"])
        assert(r.exit_code == EXIT_VALIDATION)

    def test_ratio_lp(self):
        with self.runner.isolated_filesystem():
            r = self.runner.invoke(ratio_lp, ["-t", "0.771", "--scan", "-o", "lp.json"])
            assert(r.exit_code == 0), r.output
            doc = read("lp.json")
            assert(0.498 <= doc["ratio_lp"]["r"] <= doc["ratio_lp"]["F_t"] + 1e-9)
            assert(doc["scan_F"]["min"] >= 0.498)
        r = self.runner.invoke(ratio_lp, ["-t", "0.5"])
        assert(r.exit_code == EXIT_VALIDATION)

    def test_verify(self):
        r = self.runner.invoke(verify, ["-q", "threshold", "symmetry"])
        assert(r.exit_code == 0), r.output
        assert("Suite threshold: passed" in r.output)


if __name__ == "__main__":
    unittest.main()
