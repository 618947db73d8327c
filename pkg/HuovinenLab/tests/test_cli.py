# -*- coding: utf-8 -*-

"""
GNU General Public License v3.0 (GPL v3)
Copyright (c) 2020-2021 WardPearce
Permission is hereby granted, free of charge, to any person obtaining a
copy of this software and associated documentation files (the "Software"),
to deal in the Software without restriction, including without limitation
the rights to use, copy, modify, merge, publish, distribute, sublicense,
and/or sell copies of the Software, and to permit persons to whom the
Software is furnished to do so, subject to the following conditions:
The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.
THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
DEALINGS IN THE SOFTWARE.
"""


import json
import unittest
import numpy as np

from os import path
from tempfile import TemporaryDirectory

from .base import TestBase
from .test_stopping import PARAMS

from ..cli import (
    ExperimentConfig, RunManifest, main, read_csv, read_manifest,
    read_report, write_csv
)
from ..cli.models import config_hash
from ..cli.writers import ALPHA_HEADER, CHECK_HEADER, read_graph
from ..exceptions import InvalidConfig, InvalidMeasure, StageFailure
from ..measure import read_measure


def segment_config(directory: str) -> dict:
    return {
        "source": {
            "kind": "segment",
            "parameters": {"half_length": 6.0, "spacing": 0.05}
        },
        "k": 3,
        "stop": {
            "delta": PARAMS.delta,
            "epsilon": PARAMS.epsilon,
            "alpha": PARAMS.alpha,
            "theta": PARAMS.theta,
            "t_grid_size": PARAMS.t_grid_size,
            "t_max": PARAMS.t_max
        },
        "grids": {"knot_step": 1.0 / 64, "knot_extent": 4.0},
        "output": {"directory": directory}
    }


class TestCli(TestBase, unittest.TestCase):
    def setUp(self) -> None:
        super().setUp()

        self.directory = TemporaryDirectory()
        self.tmp = self.directory.name

    def tearDown(self) -> None:
        self.directory.cleanup()

    def run_directory(self, name: str) -> str:
        return path.join(self.tmp, name)

    def generate(self, name: str, *options: str) -> str:
        directory = self.run_directory(name)
        self.assertEqual(main(list(options) + ["-o", directory]), 0)
        return path.join(directory, "measure.txt")

    def test_gen_segment(self) -> None:
        measure = self.generate("segment", "gen", "segment",
                                "--spacing", "1e-3")

        self.assertEqual(len(read_measure(measure)), 2001)
        self.assertIn("measure.txt",
                      read_manifest(path.dirname(measure))["outputs"])

    def test_gen_cantor(self) -> None:
        measure = self.generate("cantor", "gen", "cantor", "--level", "4")
        self.assertEqual(len(read_measure(measure)), 256, "4^4 atoms")

    def test_gen_deterministic(self) -> None:
        contents = []
        for name, seed in (("first", "7"), ("second", "7"), ("third", "8")):
            measure = self.generate(name, "gen", "perturbed-line",
                                    "--spacing", "0.01", "--seed", seed)
            with open(measure, "rb") as file:
                contents.append(file.read())

        self.assertEqual(contents[0], contents[1], "Same seed, same bytes")
        self.assertNotEqual(contents[0], contents[2])

    def test_gen_errors(self) -> None:
        directory = self.run_directory("errors")

        self.assertEqual(main(["gen", "cantor", "--level", "20",
                               "-o", directory]), 2)
        self.assertEqual(main(["gen", "segment", "--param", "spacing",
                               "-o", directory]), 2)
        self.assertEqual(main(["gen", "segment", "--param", "colour=red",
                               "-o", directory]), 2)

    def test_config(self) -> None:
        data = segment_config(self.tmp)
        config = ExperimentConfig(data)

        self.assertEqual(config.stop.k, 3)
        self.assertEqual(config.graph_settings.knot_step, 1.0 / 64)
        self.assertEqual(config.base.radius, 1.0)
        self.assertEqual(len(config.measure()), 241)

        reordered = dict(reversed(list(data.items())))
        self.assertEqual(ExperimentConfig(reordered).hash, config.hash)
        self.assertEqual(config_hash({"a": 1, "b": [1, {"c": 2}]}),
                         config_hash({"b": [1, {"c": 2}], "a": 1}))

        with self.assertRaises(InvalidConfig) as context:
            ExperimentConfig({**data, "k": 4})
        self.assertIn("k", context.exception.messages)

        with self.assertRaises(InvalidConfig) as context:
            ExperimentConfig({**data, "stop": {**data["stop"],
                                               "epsilon": 0.5}})
        self.assertIn("stop", context.exception.messages,
                      "Parameter hierarchy")

        with self.assertRaises(InvalidConfig) as context:
            ExperimentConfig({**data, "source": {"kind": "file"}})
        self.assertIn("source", context.exception.messages)

    def test_invalid_config_exit(self) -> None:
        pathway = self.run_directory("config.json")
        with open(pathway, "w") as file:
            json.dump({"source": {"kind": "segment"}}, file)

        self.assertEqual(main(["construct", "--config", pathway,
                               "-o", self.run_directory("run")]), 2)

    def test_csv_round_trip(self) -> None:
        pathway = self.run_directory("table.csv")
        rows = [(1.0 / 3, True, None, "a;b=c", 7), (np.float64(1e-300),
                                                    False, "", "x,y", -1)]

        self.assertEqual(write_csv(pathway, ("v", "b", "n", "s", "i"),
                                   rows), 2)

        header, parsed = read_csv(pathway)
        self.assertEqual(header, ["v", "b", "n", "s", "i"])
        self.assertEqual(float(parsed[0][0]), 1.0 / 3, "Exact float text")
        self.assertEqual(float(parsed[1][0]), 1e-300)
        self.assertEqual([row[1] for row in parsed], ["1", "0"])
        self.assertEqual(parsed[0][2:], ["", "a;b=c", "7"])
        self.assertEqual(parsed[1][3], "x,y")

    def test_alpha(self) -> None:
        measure = self.generate("segment", "gen", "segment",
                                "--half-length", "10", "--spacing", "0.02")
        directory = self.run_directory("alpha")

        self.assertEqual(main(["alpha", measure, "--scales", "2",
                               "--ratio", "2", "-o", directory]), 0)

        header, rows = read_csv(path.join(directory, "alpha.csv"))
        self.assertEqual(tuple(header), ALPHA_HEADER)
        self.assertEqual(len(rows), 2)
        self.assertEqual([float(row[2]) for row in rows], [1.0, 2.0])
        for row in rows:
            self.assertEqual(row[7], "optimal")
            self.assertLessEqual(float(row[3]), 5 * 0.02)

        with open(path.join(directory, "alpha.svg")) as file:
            self.assertTrue(file.read().startswith("<svg"))

        self.assertEqual(main(["alpha", measure, "--kind", "pair",
                               "-o", directory]), 2, "Pair needs a model")

    def test_transform(self) -> None:
        measure = self.generate("segment", "gen", "segment",
                                "--half-length", "5", "--spacing", "0.02")
        directory = self.run_directory("transform")

        self.assertEqual(main([
            "transform", measure, "--point", "0", "0.5", "--r-min", "0.1",
            "--r-max", "1", "--count", "3", "--maximal", "-o", directory
        ]), 0)

        _, rows = read_csv(path.join(directory, "transform.csv"))
        self.assertEqual(len(rows), 3)
        for row in rows:
            self.assertLessEqual(abs(float(row[3])), 1e-10,
                                 "Symmetric about the point's abscissa")

        _, maximal = read_csv(path.join(directory, "maximal.csv"))
        self.assertEqual(len(maximal), 1)
        self.assertGreater(float(maximal[0][2]), 0.0)

    def test_verify_kernel_series(self) -> None:
        directory = self.run_directory("verify")

        self.assertEqual(main(["verify", "kernel-series", "-o",
                               directory]), 0)

        header, rows = read_csv(path.join(directory, "kernel-series.csv"))
        self.assertEqual(tuple(header), CHECK_HEADER)
        self.assertIn("c-k1", [row[0] for row in rows])
        self.assertTrue(all(row[4] == "1" for row in rows))

        _, series = read_csv(path.join(directory, "series.csv"))
        self.assertIn(["3", "3", "-7", "1"], series)
        self.assertIn(["3", "5", "11", "1"], series)

    def verify(self, suite: str, *options: str) -> list:
        directory = self.run_directory(suite)
        code = main(["verify", suite] + list(options) + ["-o", directory])

        header, rows = read_csv(path.join(directory, suite + ".csv"))
        self.assertEqual(tuple(header), CHECK_HEADER)
        failed = [row[0] for row in rows if row[4] != "1"]
        self.assertEqual(failed, [], "Failed checks of " + suite)
        self.assertEqual(code, 0)
        return rows

    def test_verify_lemmas(self) -> None:
        rows = self.verify("lemmas-3-4", "--count", "2")

        self.assertEqual(len(rows), 8, "Four checks per instance")

    def test_verify_modified_density(self) -> None:
        rows = self.verify("modified-density")

        self.assertEqual([row[0] for row in rows],
                         ["vertex-escape", "segment-identity"])
        self.assertTrue(all(row[1] == "1" for row in rows),
                        "Both searches find a witness")

    def test_verify_graph_pipeline(self) -> None:
        names = [row[0] for row in self.verify("graph-pipeline")]

        for name in ("z-mass", "graph-lipschitz", "graph-closeness",
                     "unrectifiable-z-mass", "cantor-profile"):
            self.assertIn(name, names)

    def test_verify_analysis(self) -> None:
        names = [row[0] for row in self.verify("analysis")]

        self.assertIn("sigma-growth-violations", names)
        self.assertIn("calibration-ratio", names)

    def test_verify_empty_measure(self) -> None:
        pathway = self.run_directory("empty.txt")
        with open(pathway, "w") as file:
            file.write("# nothing\nx y w\n")

        directory = self.run_directory("verify")
        self.assertEqual(main(["verify", "graph-pipeline", "--measure",
                               pathway, "-o", directory]), 0)

        _, rows = read_csv(path.join(directory, "graph-pipeline.csv"))
        self.assertEqual(rows, [], "Clean no-op")

    def test_stage_failure(self) -> None:
        manifest = RunManifest(self.run_directory("stages"), "test")

        with self.assertRaises(StageFailure) as context:
            with manifest.stage("load"):
                raise InvalidMeasure("bad atoms")

        self.assertEqual(context.exception.stage, "load")
        self.assertIn("InvalidMeasure", context.exception.witness)
        self.assertEqual([name for name, _ in manifest.stages], ["load"])

    def test_construct_and_report(self) -> None:
        directory = self.run_directory("construct")
        pathway = self.run_directory("config.json")
        with open(pathway, "w") as file:
            json.dump(segment_config(directory), file)

        self.assertEqual(main(["construct", "--config", pathway,
                               "--skip-assumptions"]), 0)

        report = read_report(path.join(directory, "construct.txt"))
        total = sum(float(report[key])
                    for key in ("mass_Z", "mass_F1", "mass_F2"))
        self.assertGreaterEqual(float(report["mass_Z"]), 0.9 * total)
        self.assertLessEqual(float(report["graph_lipschitz"]), 0.01,
                             "Flat up to the normalizing rotation")

        manifest = read_manifest(directory)
        self.assertEqual(manifest["config_hash"],
                         ExperimentConfig(segment_config(directory)).hash)
        self.assertIn("graph.csv", manifest["outputs"])
        graph = read_graph(path.join(directory, "graph.csv"))
        self.assertEqual(graph.knots[0], -4.0)
        self.assertLessEqual(float(np.max(np.abs(graph.values))), 0.1)
        self.assertEqual(
            [name for name, _ in manifest["stages"]],
            ["load", "normalize", "region", "partition", "whitney",
             "graph", "write"]
        )

        self.assertEqual(main(["report", directory]), 0)
        with open(path.join(directory, "index.html")) as file:
            index = file.read()
        self.assertIn("construct.svg", index)
        self.assertIn("mass_Z", index)
