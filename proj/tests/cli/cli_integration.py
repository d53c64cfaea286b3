"""End-to-end checks of the rigidity CLI: schema, exit codes, cache, determinism.

usage: cli_integration.py <path to rigidity binary> <path to result.schema.json>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = None
SCHEMA = None


def run(*args, env_extra=None, cache_env=None):
    env = dict(os.environ)
    env.pop("RIGIDITY_CACHE_DIR", None)
    if cache_env is not None:
        env["RIGIDITY_CACHE_DIR"] = cache_env
    if env_extra:
        env.update(env_extra)
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=env, timeout=300)
    return p


def run_json(*args, expect=0, **kw):
    p = run(*args, **kw)
    assert p.returncode == expect, f"{args}: exit {p.returncode}, stderr {p.stderr!r}"
    doc = json.loads(p.stdout)
    jsonschema.validate(doc, SCHEMA)
    return doc, p


def stable(doc):
    return json.dumps(doc["payload"], ensure_ascii=False)


def floats_in(x):
    if isinstance(x, float):
        return True
    if isinstance(x, dict):
        return any(floats_in(v) for v in x.values())
    if isinstance(x, list):
        return any(floats_in(v) for v in x)
    return False


QUERIES = [
    ("root-system", "A2"),
    ("root-system", "A1xA3"),
    ("root-system", "G2"),
    ("grading", "E8", "--lambda", "1,0,0,0,0,0,0,0"),
    ("grading", "A3", "--marked", "2"),
    ("grading", "B3", "--lambda", "0,1,0"),
    ("decompose", "A2", "--lambda", "1,1"),
    ("decompose", "A1xA2", "--lambda", "1,1,0"),
    ("h1", "A1", "--lambda", "2"),
    ("h1", "C3", "--lambda", "0,0,1"),
    ("certify", "A2", "--lambda", "1,1", "--p", "0"),
    ("certify", "F4", "--lambda", "0,0,0,1", "--p", "-1"),
    ("oracle", "A1", "--lambda", "2", "--dmax", "3"),
    ("oracle", "A2", "--rep", "adjoint", "--dmax", "1"),
]


class SchemaAndContent(unittest.TestCase):
    def test_every_subcommand_validates(self):
        for q in QUERIES:
            with self.subTest(q=q):
                doc, _ = run_json(*q)
                self.assertFalse(floats_in(doc["payload"]), "float in payload")
                self.assertEqual(doc["query"]["subcommand"], q[0])

    def test_paper_tables_validates_and_fails_on_known_rows(self):
        doc, p = run_json("paper-tables", expect=1)
        bad = sorted(e["label"] for t in doc["payload"]["tables"] for e in t["entries"] if not e["match"])
        expected = sorted(
            [f"A{n} Z(σ_1.2ω_1+ω_{{n-1}})" for n in (3, 4, 5)]
            + [f"A{n} i={i}" for n in (2, 3, 4) for i in (2, 3, 4, 5)]
        )
        self.assertEqual(bad, expected)
        self.assertEqual(doc["payload"]["mismatches"], len(expected))

    def test_conic_h1(self):
        doc, _ = run_json("h1", "A1", "--lambda", "2")
        comps = doc["payload"]["components"]
        self.assertEqual(len(comps), 1)
        self.assertEqual(comps[0]["reflected_weight"], [-6])
        self.assertEqual(comps[0]["degree"], "3")

    def test_adjoint_a2_verdicts(self):
        doc, _ = run_json("certify", "A2", "--lambda", "1,1", "--p", "0", expect=0)
        self.assertTrue(doc["payload"]["rigid"])
        doc, _ = run_json("certify", "A2", "--lambda", "1,1", "--p", "-1", expect=2)
        obs = doc["payload"]["obstructions"]
        self.assertFalse(doc["payload"]["rigid"])
        self.assertEqual(len(obs), 2)
        self.assertTrue(all(o["degree"] == "1" for o in obs))

    def test_oracle_agrees(self):
        doc, _ = run_json("oracle", "A2", "--rep", "adjoint", "--dmax", "1")
        self.assertTrue(doc["payload"]["agrees"])

    def test_text_format(self):
        p = run("certify", "A2", "--lambda", "1,1", "--p", "0", "--format", "text")
        self.assertEqual(p.returncode, 0)
        self.assertIn("rigid", p.stdout)


class Errors(unittest.TestCase):
    def check_error(self, *args):
        p = run(*args)
        self.assertEqual(p.returncode, 1, p.stderr)
        self.assertEqual(p.stdout, "")
        lines = p.stderr.strip().splitlines()
        self.assertEqual(len(lines), 1, p.stderr)
        return lines[0]

    def test_unknown_subcommand(self):
        self.assertIn("bogus", self.check_error("bogus", "A2"))

    def test_unknown_diagram(self):
        self.check_error("certify", "H3", "--lambda", "1,0,0")
        self.check_error("root-system", "A0")

    def test_lambda_length(self):
        self.assertIn("rank", self.check_error("certify", "A2", "--lambda", "1"))

    def test_marked_out_of_range(self):
        self.assertIn("out of range", self.check_error("grading", "A2", "--marked", "3"))

    def test_marked_must_match_support(self):
        self.check_error("h1", "A2", "--lambda", "1,0", "--marked", "1,2")

    def test_bad_p_and_dmax(self):
        self.check_error("certify", "A2", "--lambda", "1,1", "--p", "-2")
        self.check_error("oracle", "A1", "--lambda", "2", "--dmax", "0")

    def test_malformed_lambda(self):
        self.check_error("decompose", "A2", "--lambda", "1,,1")
        self.check_error("decompose", "A2", "--lambda", "1,-1")


class Cache(unittest.TestCase):
    def test_second_run_hits_with_identical_payload(self):
        with tempfile.TemporaryDirectory() as d:
            a, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            b, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            c, _ = run_json("decompose", "A2", "--lambda", "1,1")
            self.assertFalse(a["cache_hit"])
            self.assertTrue(b["cache_hit"])
            self.assertFalse(c["cache_hit"])
            self.assertEqual(stable(a), stable(b))
            self.assertEqual(stable(a), stable(c))

    def test_env_var_and_flag_precedence(self):
        with tempfile.TemporaryDirectory() as d1, tempfile.TemporaryDirectory() as d2:
            run_json("decompose", "A2", "--lambda", "1,1", cache_env=d1)
            self.assertTrue(os.listdir(d1))
            doc, _ = run_json("decompose", "A2", "--lambda", "1,1", cache_env=d1)
            self.assertTrue(doc["cache_hit"])
            doc, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d2, cache_env=d1)
            self.assertFalse(doc["cache_hit"])
            self.assertTrue(os.listdir(d2))

    def test_truncated_entry_is_recomputed_with_warning(self):
        with tempfile.TemporaryDirectory() as d:
            clean, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            files = [f for f in os.listdir(d) if f.startswith("wt-")]
            self.assertTrue(files)
            for f in files:
                path = os.path.join(d, f)
                with open(path, "rb") as fh:
                    data = fh.read()
                with open(path, "wb") as fh:
                    fh.write(data[: len(data) // 2])
            doc, p = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            self.assertFalse(doc["cache_hit"])
            self.assertTrue(any("corrupt" in w for w in doc["warnings"]))
            self.assertIn("warning", p.stderr)
            self.assertEqual(stable(doc), stable(clean))
            again, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            self.assertTrue(again["cache_hit"])

    def test_wrong_multiplicity_is_not_trusted(self):
        with tempfile.TemporaryDirectory() as d:
            clean, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            for f in os.listdir(d):
                path = os.path.join(d, f)
                with open(path) as fh:
                    lines = fh.read().splitlines()
                # bump the multiplicity of the zero weight
                for i, line in enumerate(lines):
                    if line.startswith("0,0 "):
                        lines[i] = "0,0 3"
                with open(path, "w") as fh:
                    fh.write("\n".join(lines) + "\n")
            doc, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            self.assertFalse(doc["cache_hit"])
            self.assertTrue(doc["warnings"])
            self.assertEqual(stable(doc), stable(clean))

    def test_unwritable_dir_warns_and_proceeds(self):
        with tempfile.TemporaryDirectory() as d:
            blocker = os.path.join(d, "file")
            with open(blocker, "w") as fh:
                fh.write("x")
            doc, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", os.path.join(blocker, "sub"))
            self.assertFalse(doc["cache_hit"])
            self.assertTrue(doc["warnings"])

    def test_keys_include_diagram(self):
        with tempfile.TemporaryDirectory() as d:
            run_json("decompose", "A1xA1", "--lambda", "1,1", "--cache-dir", d)
            before = set(os.listdir(d))
            doc, _ = run_json("decompose", "A2", "--lambda", "1,1", "--cache-dir", d)
            self.assertFalse(doc["cache_hit"])
            self.assertTrue(set(os.listdir(d)) - before)


class Determinism(unittest.TestCase):
    def test_repeated_runs_are_byte_identical(self):
        for q in QUERIES[:10]:
            with self.subTest(q=q):
                a = run(*q)
                b = run(*q)
                strip = lambda s: [l for l in s.splitlines() if '"elapsed_us"' not in l]
                self.assertEqual(strip(a.stdout), strip(b.stdout))


if __name__ == "__main__":
    CLI, SCHEMA_PATH = sys.argv[1], sys.argv[2]
    with open(SCHEMA_PATH) as fh:
        SCHEMA = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(SCHEMA)
    unittest.main(argv=[sys.argv[0], "-v"])
