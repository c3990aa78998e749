"""End-to-end checks of the patchwork command line: exit codes and documents."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN = None
DATA = None


def run(*args, stdin=None, env=None):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, env=env, timeout=600)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = cls.tmp.name
        for name, extra in [("ellipse", []), ("harnack6", ["--degree", "6"]), ("gudkov", [])]:
            preset = "harnack" if name.startswith("harnack") else name
            r = run("preset", preset, *extra)
            assert r.returncode == 0, r.stderr
            with open(os.path.join(cls.dir, name + ".json"), "w") as f:
                f.write(r.stdout)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def test_build_from_stdin(self):
        preset = run("preset", "harnack", "--degree", "6").stdout
        r = run("build", "-", stdin=preset)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        self.assertEqual(doc["v"], 1)
        self.assertEqual(doc["components"], 11)
        self.assertEqual(doc["code"], "9 ∪ 1⟨1⟩")

    def test_build_with_svg(self):
        svg = self.path("e.svg")
        r = run("build", self.path("ellipse.json"), "--svg", svg)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["code"], "1")
        with open(svg) as f:
            self.assertIn("<svg", f.read())

    def test_build_is_deterministic(self):
        a = run("build", self.path("gudkov.json")).stdout
        b = run("build", self.path("gudkov.json")).stdout
        self.assertEqual(a, b)
        self.assertEqual(json.loads(a)["code"], "5 ∪ 1⟨5⟩")

    def test_invalid_triangulation_exits_1(self):
        doc = json.loads(run("preset", "harnack", "--degree", "3").stdout)
        doc["triangles"].pop()
        r = run("build", "-", stdin=json.dumps(doc))
        self.assertEqual(r.returncode, 1)
        self.assertFalse(json.loads(r.stdout)["valid"])

    def test_convexify_pinwheel_exits_2(self):
        r = run("convexify", os.path.join(DATA, "pinwheel.json"))
        self.assertEqual(r.returncode, 2)
        doc = json.loads(r.stdout)
        self.assertEqual(doc["status"], "infeasible")
        self.assertTrue(doc["certificate_verified"])
        for e in doc["certificate"]:
            self.assertIsInstance(e["multiplier"], str)

    def test_convexify_writes_heights(self):
        doc = json.loads(run("preset", "harnack", "--degree", "4").stdout)
        del doc["heights"]
        src = self.path("noheights.json")
        with open(src, "w") as f:
            json.dump(doc, f)
        out = self.path("withheights.json")
        r = run("convexify", src, "--heights", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        with open(out) as f:
            lifted = json.load(f)
        self.assertEqual(len(lifted["heights"]), len(lifted["vertices"]))
        self.assertEqual(run("convexify", out).returncode, 0)

    def test_bad_input_exits_1(self):
        r = run("build", self.path("missing.json"))
        self.assertEqual(r.returncode, 1)
        err = json.loads(r.stderr)
        self.assertEqual(err["code"], "invalid-input")
        self.assertIn("violations", err)
        self.assertEqual(run("build", "-", stdin="{oops").returncode, 1)
        self.assertEqual(run("preset", "nosuch").returncode, 1)
        self.assertEqual(run("frobnicate").returncode, 1)

    def test_verify_ellipse(self):
        r = run("verify", self.path("ellipse.json"), "--grid", "64", "--t-steps", "4")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        self.assertTrue(doc["stabilized"])
        self.assertEqual(doc["code"], doc["combinatorial_code"])

    def test_verify_without_enough_steps_exits_3(self):
        r = run("verify", self.path("harnack6.json"), "--grid", "64", "--t-steps", "1")
        self.assertEqual(r.returncode, 3)
        self.assertFalse(json.loads(r.stdout)["stabilized"])

    def test_chart(self):
        r = run("chart", "x^2 + y^2 - 1", "--projective")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["topology"]["code"], "1")
        r = run("chart", "8x^3 - x^2 + 4y^2", "--adjoin", "-1,0")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["chart"]["adjoined"], [[-1, 0]])
        self.assertEqual(run("chart", "x^2 + y^2 - 1", "--affine", "--projective").returncode, 1)
        self.assertEqual(run("chart", "x^2 - 2x*y + y^2").returncode, 1)

    def test_log_level(self):
        env = dict(os.environ, PATCHWORK_LOG="info")
        r = run("build", self.path("ellipse.json"), env=env)
        self.assertEqual(r.returncode, 0)
        self.assertIn("code 1", r.stderr)
        quiet = run("build", self.path("ellipse.json"))
        self.assertEqual(quiet.stderr, "")


if __name__ == "__main__":
    BIN, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
