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


import logging
import numpy as np

from argparse import Namespace
from os import listdir, path

from .models import ExperimentConfig, RunManifest, read_manifest
from .plots import PARTITION_COLORS, Overlay, alpha_overlay
from .suites import SERIES_ORDERS, run_suite
from .writers import (
    ALPHA_HEADER, SERIES_HEADER, TRANSFORM_HEADER, alpha_row, read_report,
    series_rows, transform_row, write_checks, write_csv, write_graph,
    write_report
)

from ..analysis import analyze
from ..exceptions import AtomLimitExceeded, InvalidGenerator
from ..measure import (
    Ball, DiscreteMeasure, generate, read_measure, write_measure
)
from ..operator import (
    default_radii, kernel_series, maximal_transform, transform_sweep
)
from ..settings import TransportSettings
from ..stopping import (
    Construction, construct, height_report, main_lemma_assumptions,
    normalize_measure
)
from ..templates import render
from ..transport import (
    STATUS_GUARD, AlphaResult, alpha_line, alpha_pair, alpha_spike
)


logger = logging.getLogger("HuovinenLab")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def parse_value(raw: str):
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            continue
    return raw


def generator_parameters(args: Namespace) -> dict:
    """Shorthand options and --param KEY=VALUE pairs of gen.

    Raises
    ------
    InvalidGenerator
    """

    parameters = {}
    for name in ("spacing", "level", "half_length", "angle", "amplitude",
                 "profile", "m"):
        value = getattr(args, name, None)
        if value is not None:
            parameters[name] = value

    for pair in args.param or []:
        if "=" not in pair:
            raise InvalidGenerator(
                "Expected KEY=VALUE, got {}".format(pair)
            )
        key, value = pair.split("=", 1)
        parameters[key.strip().replace("-", "_")] = parse_value(value)

    return parameters


def cmd_gen(args: Namespace) -> int:
    manifest = RunManifest(args.output, "gen")
    parameters = generator_parameters(args)

    with manifest.stage("generate"):
        mu = generate(args.kind, seed=args.seed, **dict(parameters))

    comment = "{} seed={} {}".format(args.kind, args.seed, " ".join(
        "{}={}".format(key, parameters[key]) for key in sorted(parameters)
    ))
    with manifest.stage("write"):
        write_measure(mu, manifest.output(args.name), comment.strip())

    logger.info("Generated {} atoms".format(len(mu)))
    manifest.write()
    return EXIT_OK


def _alpha(mu: DiscreteMeasure, ball: Ball, kind: str, k: int,
           model: DiscreteMeasure, settings: TransportSettings
           ) -> AlphaResult:
    try:
        if kind == "line":
            return alpha_line(mu, ball, settings=settings)
        if kind == "spike":
            return alpha_spike(mu, ball, k, settings)
        return alpha_pair(mu, model, ball, settings)
    except AtomLimitExceeded as error:
        logger.warning("LP guard at {}: {}".format(ball.api_schema, error))
        return AlphaResult(float("nan"), status=STATUS_GUARD, ball=ball,
                           atoms=len(mu))


def cmd_alpha(args: Namespace) -> int:
    manifest = RunManifest(args.output, "alpha")
    settings = TransportSettings()

    with manifest.stage("load"):
        mu = read_measure(args.measure)
        model = read_measure(args.model) if args.model else None

    if args.kind == "pair" and model is None:
        raise InvalidGenerator("Pair coefficients need --model")

    center = complex(*args.center)
    balls = [Ball(center, args.radius * args.ratio ** n)
             for n in range(args.scales)]

    with manifest.stage("alpha"):
        results = []
        for ball in balls:
            result = _alpha(mu, ball, args.kind, args.k, model, settings)
            result.ball = ball
            results.append(result)

    with manifest.stage("write"):
        write_csv(manifest.output("alpha.csv"), ALPHA_HEADER,
                  (alpha_row(result) for result in results))

        if args.svg:
            alpha_overlay(
                mu, balls, [result.witness for result in results],
                "{} coefficients".format(args.kind)
            ).write(manifest.output("alpha.svg"))

    manifest.write()
    return EXIT_OK


def cmd_transform(args: Namespace) -> int:
    manifest = RunManifest(args.output, "transform")

    with manifest.stage("load"):
        mu = read_measure(args.measure)

    points = [complex(x, y) for x, y in args.point] or [0j]
    if args.r_min and args.r_max:
        radii = np.geomspace(args.r_min, args.r_max, args.count)
    else:
        radii = default_radii(mu, points[0])

    with manifest.stage("transform"):
        rows = [
            transform_row(point, radius, value)
            for point, radius, value in transform_sweep(
                mu, points, radii, args.k, args.upper, not args.hard
            )
        ]

        if args.maximal:
            maximal = [
                (point.real, point.imag,
                 maximal_transform(mu, point, args.k, radii))
                for point in points
            ]

    with manifest.stage("write"):
        write_csv(manifest.output("transform.csv"), TRANSFORM_HEADER, rows)
        if args.maximal:
            write_csv(manifest.output("maximal.csv"), ("x", "y", "value"),
                      maximal)

    manifest.write()
    return EXIT_OK


def _load_config(args: Namespace) -> ExperimentConfig:
    config = ExperimentConfig.from_file(args.config)
    if args.output is None:
        args.output = config.output["directory"]
    return config


def run_construction(args: Namespace, config: ExperimentConfig,
                     manifest: RunManifest) -> Construction:
    """Load, normalize, check assumptions and construct, writing every
    artefact of the construction.
    """

    settings = TransportSettings()

    with manifest.stage("load"):
        mu = read_measure(args.measure) if args.measure \
            else config.measure()

    with manifest.stage("normalize"):
        mu, transform = normalize_measure(mu, config.base, settings)

    if not args.skip_assumptions:
        with manifest.stage("assumptions"):
            checks = main_lemma_assumptions(mu, config.stop,
                                            norm_bound=args.norm_bound,
                                            settings=settings)
        write_checks(manifest.output("assumptions.csv"), checks)

    construction = construct(mu, config.stop,
                             graph_settings=config.graph_settings,
                             settings=settings, domain=config.domain,
                             stage=manifest.stage)

    with manifest.stage("write"):
        write_graph(manifest.output("graph.csv"), construction.graph)
        write_csv(manifest.output("whitney.csv"),
                  tuple(construction.cover.pieces[0].api_schema)
                  if len(construction.cover) else ("left",),
                  (tuple(piece.api_schema.values())
                   for piece in construction.cover))
        write_report(manifest.output("construct.txt"), {
            **config.api_schema,
            **{"normalize_" + key: value for key, value in transform.items()},
            **construction.region.api_schema,
            **height_report(construction.region),
            **construction.partition.api_schema,
            **{"whitney_" + key: value
               for key, value in construction.cover.api_schema.items()},
            **{"graph_" + key: value
               for key, value in construction.graph.api_schema.items()},
            **construction.report.api_schema
        })

        if config.output["emit_svg"]:
            construction_overlay(construction).write(
                manifest.output("construct.svg")
            )

    return construction


def construction_overlay(construction: Construction) -> Overlay:
    """Atoms by partition class, fitted Whitney balls and the graph on
    2 B0.
    """

    region = construction.region
    partition = construction.partition

    overlay = Overlay(Ball(0, 2.0), "construction")
    overlay.add_atoms(region.mu)
    for name, indices in (("Z", partition.z), ("F1", partition.f1),
                          ("F2", partition.f2)):
        overlay.add_atoms(region.mu, indices, PARTITION_COLORS[name])
    for piece in construction.cover.included:
        if piece.ball is not None:
            overlay.add_ball(piece.ball)
    overlay.add_graph(construction.graph)

    return overlay


def cmd_construct(args: Namespace) -> int:
    config = _load_config(args)
    manifest = RunManifest(args.output, "construct", config.hash)

    run_construction(args, config, manifest)

    manifest.write()
    return EXIT_OK


def cmd_analyze(args: Namespace) -> int:
    config = _load_config(args)
    manifest = RunManifest(args.output, "analyze", config.hash)

    construction = run_construction(args, config, manifest)

    with manifest.stage("analysis"):
        report = analyze(construction.region, construction.partition,
                         construction.graph, config.window)

    with manifest.stage("write"):
        write_report(manifest.output("analysis.txt"), report.api_schema)
        write_checks(manifest.output("analysis-checks.csv"),
                     report.all_checks)
        write_csv(manifest.output("g.csv"), ("t", "g"),
                  zip(report.grid, report.g))

    manifest.write()
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_verify(args: Namespace) -> int:
    manifest = RunManifest(args.output, "verify")
    settings = TransportSettings()

    mu = None
    if args.measure:
        with manifest.stage("load"):
            mu = read_measure(args.measure)

    with manifest.stage(args.suite):
        checks, passed = run_suite(args.suite, mu, args.count, settings,
                                   args.seed)

    write_checks(manifest.output("{}.csv".format(args.suite)), checks)
    if args.suite == "kernel-series":
        write_csv(manifest.output("series.csv"), SERIES_HEADER,
                  (row for k in SERIES_ORDERS
                   for row in series_rows(kernel_series(k))))

    failed = sum(not check.passed for check in checks)
    logger.info("{}: {} checks, {} failed".format(args.suite, len(checks),
                                                  failed))
    for check in checks:
        logger.info("{:<28} {:>12.4g} <= {:<12.4g} {}".format(
            check.name, check.lhs, check.rhs,
            "pass" if check.passed else "FAIL"
        ))

    manifest.write()
    return EXIT_OK if passed else EXIT_FAILED


def cmd_report(args: Namespace) -> int:
    directory = args.directory
    manifest = read_manifest(directory)

    names = sorted(listdir(directory))
    reports = [
        (name, read_report(path.join(directory, name)))
        for name in names if name.endswith(".txt")
    ]

    pathway = path.join(directory, "index.html")
    with open(pathway, "w") as file:
        file.write(render("index.html", {
            "title": "{} run".format(manifest["command"]),
            "manifest": manifest,
            "reports": reports,
            "tables": [name for name in names if name.endswith(".csv")],
            "images": [name for name in names if name.endswith(".svg")]
        }))

    logger.info("Wrote {}".format(pathway))
    return EXIT_OK
