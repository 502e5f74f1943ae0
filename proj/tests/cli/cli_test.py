# Copyright 2026 The extmatch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes, certificates and file outputs of the extmatch command-line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


class CliTest(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def write(self, name, doc):
        with open(self.path(name), "w") as f:
            json.dump(doc, f)
        return self.path(name)

    def example(self, name, *flags):
        out = self.path(name + ".json")
        code, _, err = run("example", name, "--out", out, *flags)
        self.assertEqual(code, 0, err)
        return out

    def test_pairwise_certificate_names_the_blocking_pair(self):
        game = self.example("ex5")
        matching = self.write("a1.json", {"matches": [["m1", "w1"], ["m2", "w2"]]})
        code, out, _ = run("check", game, matching, "--concept", "pairwise")
        self.assertEqual(code, 1)
        cert = json.loads(out)
        self.assertFalse(cert["stable"])
        self.assertEqual(sorted(cert["coalition"]), ["m1", "w2"])
        self.assertEqual(cert["internal"], [["m1", "w2"]])

    def test_empty_matching_pairwise_stable_in_example_four(self):
        game = self.example("ex4")
        matching = self.write("none.json", {"matches": []})
        code, out, _ = run("check", game, matching, "--concept", "pairwise")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["stable"])

    def test_empty_game(self):
        game = self.write("g.json", {"mode": "many-to-many", "men": [], "women": []})
        matching = self.write("none.json", {"matches": []})
        self.assertEqual(run("check", game, matching)[0], 0)

    def test_certificate_replays(self):
        game = self.example("ex3")
        matching = self.write("none.json", {"matches": []})
        cert = self.path("cert.json")
        code, _, _ = run("check", game, matching, "--attitude", "pessimistic", "--out", cert)
        self.assertEqual(code, 1)
        code, out, _ = run("check", game, matching, "--attitude", "pessimistic",
                           "--replay", cert)
        self.assertEqual(code, 1, out)

    def test_usage_and_input_errors(self):
        game = self.example("ex1")
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("check", game)[0], 2)
        self.assertEqual(run("check", game, self.path("missing.json"))[0], 2)
        bad = self.write("bad.json", {"matches": [["w1", "m"]]})
        self.assertEqual(run("check", game, bad)[0], 2)
        none = self.write("none.json", {"matches": []})
        self.assertEqual(run("check", game, none, "--attitude", "hopeful")[0], 2)
        self.assertEqual(run("solve", game, "--algorithm", "gs-neutral")[0], 2)
        self.assertEqual(run("--help")[0], 0)

    def test_size_guard(self):
        game = self.path("big.json")
        self.assertEqual(run("random", "--seed", "1", "--men", "5", "--women", "5",
                             "--out", game)[0], 0)
        none = self.write("none.json", {"matches": []})
        self.assertEqual(run("check", game, none)[0], 3)
        self.assertIn(run("check", game, none, "--max-agents", "10")[0], (0, 1))

    def test_solvers(self):
        single = self.write("one.json", {
            "mode": "one-to-one", "men": ["m"], "women": ["w"],
            "externalities": [{"match": ["m", "w"], "agent": "m", "value": 1},
                              {"match": ["m", "w"], "agent": "w", "value": 1}]})
        code, out, _ = run("solve", single, "--algorithm", "gs-neutral")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["matches"], [["m", "w"]])
        self.assertEqual(run("solve", self.example("ex1"), "--algorithm", "fpt-optimistic")[0], 4)
        two = self.path("two.json")
        run("random", "--seed", "3", "--mode", "one-to-one", "--min", "0", "--max", "4",
            "--out", two)
        code, out, _ = run("solve", two, "--algorithm", "restricted-pessimistic")
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)["estimates"]), 8)

    def test_stable_set_and_audit(self):
        game = self.example("ex1")
        code, out, _ = run("stable-set", game)
        self.assertEqual(code, 4)
        self.assertEqual(json.loads(out)["count"], 0)
        code, out, _ = run("inclusion-audit", game)
        report = json.loads(out)
        self.assertEqual(code, 0)
        self.assertTrue(report["holds"])
        self.assertEqual(report["optimistic"], [])
        self.assertEqual(report["neutral"], [])

    def test_reduce_writes_game_and_witness(self):
        game = self.path("g.json")
        witness = self.path("w.json")
        code, _, err = run("reduce", "knapsack", "--items", "1:1", "--budget", "1", "--goal",
                           "1", "--variant", "nonempty", "--game-out", game,
                           "--matching-out", witness)
        self.assertEqual(code, 0, err)
        with open(witness) as f:
            self.assertEqual(json.load(f)["matches"], [["x1", "y1"]])
        self.assertEqual(run("check", game, witness)[0], 0)

    def test_classify_edges(self):
        code, out, _ = run("classify-edges", self.example("ex1"))
        self.assertEqual(code, 0)
        self.assertEqual([e["class"] for e in json.loads(out)["edges"]], ["R", "R"])

    def test_random_is_deterministic(self):
        first = run("random", "--seed", "7")
        second = run("random", "--seed", "7")
        self.assertEqual(first, second)
        self.assertEqual(first[0], 0)


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    unittest.main()
