"""End-to-end checks of the lpa command-line tool.

Usage: test_cli.py <path to lpa binary> <source root>
"""

import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

LPA = ""
ROOT = Path()


def run(*args):
    return subprocess.run([LPA, *args], capture_output=True, text=True, cwd=ROOT, timeout=600)


def report(*args, code=0):
    proc = run(*args, "--json")
    assert proc.returncode == code, (args, proc.returncode, proc.stderr)
    return json.loads(proc.stdout)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        schema = json.loads((ROOT / "schema" / "report.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        cls.validator = jsonschema.Draft202012Validator(schema)

    def valid(self, rep):
        errors = sorted(self.validator.iter_errors(rep), key=str)
        self.assertEqual(errors, [], errors[:1])
        self.assertEqual(json.loads(json.dumps(rep)), rep)
        return rep

    def verdicts(self, rep):
        return {d["property"]: d["verdict"] for d in rep["result"]["decisions"]}

    def test_decide(self):
        loop = self.valid(report("decide", "data/loop.graph", "--field", "qi-conj"))
        self.assertEqual(self.verdicts(loop)["BaerStar"], "yes")

        toeplitz = self.valid(report("decide", "data/toeplitz.graph"))
        baer = next(d for d in toeplitz["result"]["decisions"] if d["property"] == "Baer")
        self.assertEqual(baer["verdict"], "no")
        self.assertEqual(baer["certificate"]["kind"], "cycle-with-exit")
        self.assertEqual(baer["certificate"]["exit_edge"], "e")

        qi_id = self.valid(report("decide", "data/loop.graph", "--field", "qi-id"))
        self.assertEqual(self.verdicts(qi_id)["BaerStar"], "not-applicable")

        only = self.valid(report("decide", "data/loop.graph", "--property", "baer-star"))
        self.assertEqual(list(self.verdicts(only)), ["BaerStar"])

    def test_expect(self):
        self.assertEqual(run("decide", "data/loop.graph", "--property", "baer-star", "--expect", "yes").returncode, 0)
        self.assertEqual(run("decide", "data/arrow_to_loop.graph", "--property", "baer-star", "--expect", "yes").returncode, 1)
        rep = self.valid(report("decide", "data/toeplitz.graph", "--property", "baer", "--expect", "yes", code=1))
        self.assertFalse(rep["result"]["expect"]["met"])

    def test_usage_and_parse_errors(self):
        with tempfile.NamedTemporaryFile("w", suffix=".graph", delete=False) as f:
            f.write("u;\ne: u -> w;\n")
        self.assertEqual(run("decide", f.name).returncode, 2)
        self.assertEqual(run("decide", "no/such/file.graph").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("decide", "data/loop.graph", "--field", "reals").returncode, 2)
        self.assertEqual(run("eval", "data/line.graph", "w").returncode, 2)
        self.assertEqual(run("snf", "1, 2; 3").returncode, 2)

    def test_decompose(self):
        line3 = self.valid(report("decompose", "gallery:line(3)"))
        (summand,) = line3["result"]["summands"]
        self.assertEqual((summand["kind"], summand["size"], summand["shifts"]), ("sink", 3, [0, 1, 2]))

        loop = self.valid(report("decompose", "data/loop.graph"))
        (summand,) = loop["result"]["summands"]
        self.assertEqual((summand["kind"], summand["algebra"]), ("cycle", "M_1(K[x,x^-1])"))

        refused = run("decompose", "data/toeplitz.graph")
        self.assertEqual(refused.returncode, 2)
        self.assertIn("no structure decomposition", refused.stderr)

    def test_eval(self):
        self.assertEqual(run("eval", "data/rose2.graph", "a*.a").stdout.splitlines()[0], "v")
        rep = self.valid(report("eval", "data/rose2.graph", "a.a*"))
        self.assertNotEqual(rep["result"]["normal_form"]["text"], "v")
        self.assertTrue(rep["result"]["projection"])
        self.assertEqual(run("eval", "data/line.graph", "e.e*").stdout.splitlines()[0], "u")
        self.assertEqual(run("normalform", "data/line.graph", "e.e*").stdout.splitlines()[0], "u")

    def test_embed(self):
        rep = self.valid(report("embed", "data/arrow_to_loop.graph", "v + e* + f e*"))
        (image,) = rep["result"]["images"]
        self.assertEqual(image["matrix"], [["1", "1 + x"], ["0", "0"]])
        self.assertIsNone(rep["result"]["graded"])
        line = self.valid(report("embed", "data/line.graph", "e"))
        self.assertEqual(line["result"]["images"][0]["matrix"], [["0", "0"], ["1", "0"]])
        self.assertTrue(line["result"]["graded"])

    def test_annihilate(self):
        rep = self.valid(report("annihilate", "data/line.graph", "u + i e", "--field", "qi-id"))
        self.assertIsNone(rep["result"]["projection_generator"])
        self.assertIsNotNone(rep["result"]["idempotent_generator"])
        conj = self.valid(report("annihilate", "data/line.graph", "u + i e"))
        self.assertIsNotNone(conj["result"]["projection_generator"])
        oracle = self.valid(report("annihilate", "data/line.graph", "--oracle", "--field", "qi-id", "--cases", "1000"))
        self.assertFalse(oracle["result"]["oracle"]["pass"])
        self.assertEqual(run("annihilate", "data/loop.graph", "v").returncode, 2)

    def test_snf(self):
        rep = self.valid(report("snf", "1, 1 + x; 0, 0"))
        self.assertFalse(rep["result"]["projection_generator"])
        self.assertEqual(rep["result"]["rank"], 1)
        unit = self.valid(report("snf", "3 + x + x^-1"))
        self.assertEqual(unit["result"]["diagonal"], ["1 + 3x + x^2"])

    def test_gallery(self):
        names = self.valid(report("gallery"))["result"]["names"]
        self.assertIn("loop", names)
        one = self.valid(report("gallery", "line(3)"))
        self.assertEqual((one["result"]["vertices"], one["result"]["edges"]), (3, 2))

    def test_verify(self):
        rep = self.valid(report("verify", "--scale", "0.1"))
        self.assertTrue(rep["result"]["all_ok"])
        self.assertTrue(all(s["status"] == "PASS" for s in rep["result"]["suites"]))

        qi_id = self.valid(report("verify", "--scale", "0.1", "--field", "qi-id"))
        status = {s["name"]: s["status"] for s in qi_id["result"]["suites"]}
        self.assertEqual(status["oracle-acyclic"], "EXPECTED-FAIL")
        self.assertTrue(qi_id["result"]["all_ok"])

        self.assertEqual(run("verify", "--degree-window", "3,-3").returncode, 2)

    def test_determinism(self):
        args = ("verify", "--scale", "0.1", "--seed", "42", "--json")
        first, second = run(*args), run(*args)
        self.assertEqual(first.returncode, 0)
        self.assertEqual(first.stdout, second.stdout)
        self.assertEqual(json.loads(first.stdout)["seed"], 42)
        a = report("decide", "data/loop.graph")
        b = report("decide", "gallery:loop")
        self.assertEqual(a["input_digest"], b["input_digest"])
        self.assertNotEqual(a["input_digest"], report("decide", "data/toeplitz.graph")["input_digest"])

    def test_timing_is_opt_in(self):
        self.assertNotIn("timing_ms", report("gallery"))
        self.assertIn("timing_ms", self.valid(report("gallery", "--timing")))


if __name__ == "__main__":
    LPA, ROOT = sys.argv[1], Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1])
