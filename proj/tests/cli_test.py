"""End-to-end checks of the tourlink command line.

usage: cli_test.py <tourlink binary> <source dir>
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BIN = None
SRC = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("TOURLINK_DATA_DIR", None)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


class Usage(unittest.TestCase):
    def test_missing_subcommand(self):
        r = run()
        self.assertEqual(r.returncode, 2)
        self.assertIn("Usage", r.stderr)
        self.assertEqual(r.stdout, "")

    def test_unknown_target(self):
        r = run("verify", "k9-knotless")
        self.assertEqual(r.returncode, 2)
        self.assertIn("Usage", r.stderr)

    def test_bad_flag_values(self):
        for args in (["enumerate", "--n", "9"], ["verify", "k7-linkless", "--jobs", "0"],
                     ["gap-table", "--format", "csv"], ["build", "nope"], ["export", "il8", "--format", "svg"]):
            with self.subTest(args=args):
                self.assertEqual(run(*args).returncode, 2)

    def test_unknown_subject(self):
        r = run("validate", "no-such-thing")
        self.assertEqual(r.returncode, 2)
        self.assertIn("error", r.stderr)

    def test_malformed_file(self):
        with tempfile.TemporaryDirectory() as d:
            bad = Path(d) / "bad.json"
            bad.write_text('{"n": 3, "arcs": [[1, 2]]}')
            r = run("validate", str(bad), "--as", "il8")
            self.assertEqual(r.returncode, 2)


class Verify(unittest.TestCase):
    def test_reports(self):
        schema = json.loads((SRC / "data/schema/verify_report.schema.json").read_text())
        with tempfile.TemporaryDirectory() as d:
            for target, classes in (("k7-linkless", 456), ("k7-knotless", 456), ("k8-knotless", 6880)):
                with self.subTest(target=target):
                    outs = []
                    for jobs in ("1", "4", "4"):
                        path = Path(d) / f"{target}-{len(outs)}.json"
                        r = run("verify", target, "--jobs", jobs, "--report", str(path))
                        self.assertEqual(r.returncode, 0, r.stderr)
                        outs.append(path.read_bytes())
                    self.assertEqual(outs[0], outs[1])
                    self.assertEqual(outs[1], outs[2])
                    report = json.loads(outs[0])
                    jsonschema.validate(report, schema)
                    self.assertEqual(report["classes"], classes)
                    self.assertEqual(report["unexplained_leftovers"], 0)
                    self.assertTrue(report["success"])

    def test_markdown_and_timing(self):
        r = run("verify", "k7-knotless", "--format", "md")
        self.assertEqual(r.returncode, 0)
        self.assertIn("| classes | 456 |", r.stdout)
        r = run("verify", "k7-knotless", "--timing")
        self.assertIn("elapsed_ms", json.loads(r.stdout))

    def test_data_dir_override(self):
        with tempfile.TemporaryDirectory() as d:
            shutil.copytree(SRC / "data" / "catalogues", Path(d) / "catalogues")
            same = run("verify", "k7-linkless", env={"TOURLINK_DATA_DIR": d})
            self.assertEqual(same.returncode, 0)
            self.assertEqual(same.stdout, run("verify", "k7-linkless").stdout)
            missing = run("verify", "k7-linkless", env={"TOURLINK_DATA_DIR": str(Path(d) / "absent")})
            self.assertEqual(missing.returncode, 2)
            self.assertIn("cannot open catalogue", missing.stderr)


class Constructions(unittest.TestCase):
    def test_golden_builds(self):
        for name in ("il8", "tprime8"):
            with self.subTest(name=name), tempfile.TemporaryDirectory() as d:
                out = Path(d) / f"{name}.json"
                r = run("build", name, "--out", str(out))
                self.assertEqual(r.returncode, 0)
                self.assertEqual(out.read_text(), (SRC / "tests/golden" / f"{name}.json").read_text())

    def test_validate_names_and_files(self):
        self.assertEqual(run("validate", "linkknot107").returncode, 0)
        self.assertEqual(run("validate", "nlinked", "--n", "3").returncode, 0)
        golden = str(SRC / "tests/golden/il8.json")
        r = run("validate", golden, "--json")
        self.assertEqual(r.returncode, 0)
        self.assertTrue(json.loads(r.stdout)["ok"])
        with tempfile.TemporaryDirectory() as d:
            flat = Path(d) / "flat.json"
            flat.write_text(json.dumps({"n": 8, "arcs": [[i, j] for j in range(1, 9) for i in range(1, j)]}))
            self.assertEqual(run("validate", str(flat), "--as", "il8").returncode, 1)
            self.assertEqual(run("validate", str(flat)).returncode, 2)

    def test_build_sizes(self):
        for name, n in (("ik12", 12), ("l3-23", 23), ("tprime14", 14), ("dlp14", 14)):
            with self.subTest(name=name):
                r = run("build", name)
                self.assertEqual(json.loads(r.stdout)["n"], n)
        self.assertEqual(json.loads(run("build", "nlinked", "--n", "4").stdout)["n"], 200)

    def test_dot_export(self):
        r = run("export", "tprime8", "--format", "dot")
        self.assertEqual(r.returncode, 0)
        self.assertTrue(r.stdout.startswith('digraph "tprime8"'))
        self.assertEqual(r.stdout.count("->"), 28)


class Tables(unittest.TestCase):
    def test_enumerate(self):
        r = run("enumerate", "--n", "5")
        lines = r.stdout.strip().split("\n")
        self.assertEqual(len(lines), 12)
        self.assertEqual([json.loads(l)["index"] for l in lines], list(range(12)))
        self.assertEqual(r.stdout, run("enumerate", "--n", "5", "--jobs", "3").stdout)

    def test_gap_table(self):
        r = run("gap-table", "--max-n", "5")
        self.assertEqual(r.returncode, 0)
        self.assertIn("| 2 | = 6 | = 8 | = 2 |", r.stdout)
        rows = json.loads(run("gap-table", "--max-n", "6", "--format", "json").stdout)
        self.assertEqual([row["cg_upper"] for row in rows], [2, 13, 54, 139, 630])

    def test_gf2_demo(self):
        a = run("gf2-demo", "--n", "4", "--seed", "7")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, run("gf2-demo", "--n", "4", "--seed", "7").stdout)
        self.assertIn("M is 25x25", a.stdout)
        linked = int(a.stdout.split("linked targets = ")[1].split()[0])
        self.assertGreaterEqual(linked, 3)


if __name__ == "__main__":
    BIN = sys.argv[1]
    SRC = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0]], verbosity=1)
