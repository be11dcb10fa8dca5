#!/usr/bin/env python
"""Test the pllab command line front end."""

import json
import filecmp
import unittest
import os.path as op

from pbcommand.pb_io.report import load_report_from_json

from pllab.PlLabRunner import main
from test_setpath import OUT_DIR


def _run(name, *args):
    """Run pllab with --out in OUT_DIR, return (exit code, out file)."""
    out_fn = op.join(OUT_DIR, "test_PlLabRunner_" + name)
    return main(["pllab"] + list(args) + ["--out", out_fn]), out_fn


def _load(fn):
    with open(fn) as reader:
        return json.load(reader)


class TestPlLabRunner(unittest.TestCase):
    """Test pllab.PlLabRunner"""

    def test_measure(self):
        """measure --n 3 emits exact p/q weights."""
        rc, fn = _run("measure.json", "measure", "--n", "3", "--format", "json")
        self.assertEqual(rc, 0)
        self.assertEqual(_load(fn), {"n": 3, "weights": {"[3]": "1/6", "[2,1]": "2/3",
                                                          "[1,1,1]": "1/6"}})

    def test_measure_csv(self):
        """CSV output quotes partition strings."""
        rc, fn = _run("measure.csv", "measure", "--n", "3", "--format", "csv")
        self.assertEqual(rc, 0)
        with open(fn) as reader:
            self.assertEqual(reader.read(),
                             'partition,weight\n[3],1/6\n"[2,1]",2/3\n"[1,1,1]",1/6\n')

    def test_tp_check(self):
        """tp-check --coeffs exp --order 3 --window 8."""
        rc, fn = _run("tp.json", "tp-check", "--coeffs", "exp", "--order", "3",
                      "--window", "8")
        self.assertEqual(rc, 0)
        obj = _load(fn)
        self.assertEqual(obj["verdict"], "TotallyPositive-up-to-order")
        self.assertIsNone(obj["witness"])

    def test_exit_codes(self):
        """Validation errors exit 1, exceeded caps exit 2."""
        rc, fn = _run("sample0.json", "sample", "--n", "0")
        self.assertEqual(rc, 1)
        self.assertFalse(op.exists(fn))
        self.assertEqual(_run("cap.json", "measure", "--n", "61")[0], 2)
        self.assertEqual(_run("cap2.json", "measure", "--n", "5", "--cap-enumeration", "4")[0], 2)
        self.assertEqual(_run("unknown.json", "frobnicate")[0], 1)
        self.assertEqual(main(["pllab"]), 1)

    def test_sample_reproducible(self):
        """Identical seeds give byte-identical output."""
        rc1, fn1 = _run("sample1.json", "sample", "--n", "20", "--trials", "3",
                        "--seed", "5", "--with-tableau")
        rc2, fn2 = _run("sample2.json", "sample", "--n", "20", "--trials", "3",
                        "--seed", "5", "--with-tableau")
        self.assertEqual((rc1, rc2), (0, 0))
        self.assertTrue(filecmp.cmp(fn1, fn2, shallow=False))
        samples = _load(fn1)["samples"]
        self.assertEqual(len(samples), 3)
        self.assertEqual(sum(samples[0]["shape"]), 20)

    def test_transfer(self):
        """transfer --tableau-json [[1,3],[2]]."""
        rc, fn = _run("transfer.json", "transfer", "--tableau-json", "[[1,3],[2]]")
        self.assertEqual(rc, 0)
        self.assertEqual(_load(fn), {"tableau": [[1, 2]], "shape": [2]})

    def test_posets(self):
        """numberings and density."""
        rc, fn = _run("numberings.json", "numberings", "--poset", "z2", "--n", "3")
        self.assertEqual(rc, 0)
        self.assertEqual(_load(fn)["count"], 4)
        rc, fn = _run("density.json", "density", "--ideal", "rows=0",
                      "--numbering", "[[0,0],[0,1],[1,0]]")
        self.assertEqual(rc, 0)
        self.assertEqual(_load(fn)["density"], "2/3")

    def test_series(self):
        """thoma and chargf coefficients."""
        rc, fn = _run("thoma.json", "thoma", "--gamma", "1", "--N", "3")
        self.assertEqual(rc, 0)
        self.assertEqual(_load(fn)["coefficients"], ["1/1", "1/1", "1/2", "1/6"])
        rc, fn = _run("chargf.json", "chargf", "--chi", "1,0,0", "--N", "4")
        self.assertEqual(rc, 0)
        self.assertEqual(_load(fn)["coefficients"], ["1/1", "1/1", "1/2", "1/6", "1/24"])

    def test_plgraph(self):
        """Pascal's graph is not a Plancherel graph."""
        rc, fn = _run("plgraph.json", "plgraph", "--graph", "pascal", "--up-to", "4")
        self.assertEqual(rc, 0)
        obj = _load(fn)
        self.assertFalse(obj["holds"])
        self.assertEqual(obj["witness"]["vertex"], "(2,0)")
        self.assertEqual(obj["witness"]["expected"], "3/10")

    def test_plgraph_at_level_cap(self):
        """--up-to equal to the level cap runs; one past it exits 2."""
        rc, fn = _run("plgraph_cap.json", "plgraph", "--up-to", "20")
        self.assertEqual(rc, 0)
        self.assertTrue(_load(fn)["holds"])
        rc, _fn = _run("plgraph_over_cap.json", "plgraph", "--up-to", "21")
        self.assertEqual(rc, 2)
        rc, _fn = _run("plgraph_low_cap.json", "plgraph", "--up-to", "6", "--cap-level", "6")
        self.assertEqual(rc, 0)

    def test_first_row_report(self):
        """--report writes a pbcommand report."""
        report_fn = op.join(OUT_DIR, "test_PlLabRunner_first_row_report.json")
        rc, fn = _run("first_row.json", "first-row", "--n", "50", "--trials", "10",
                      "--report", report_fn)
        self.assertEqual(rc, 0)
        self.assertEqual(len(_load(fn)["per_trial"]), 10)
        attrs = dict((a.id, a.value) for a in load_report_from_json(report_fn).attributes)
        self.assertEqual(attrs["n"], 50)

    def test_selftest(self):
        """selftest --json lists every identity."""
        rc, fn = _run("selftest.json", "selftest", "--json")
        self.assertEqual(rc, 0)
        obj = _load(fn)
        self.assertEqual(obj["num_failed"], 0)
        self.assertEqual(len(obj["results"]), 5)


if __name__ == "__main__":
    unittest.main()
