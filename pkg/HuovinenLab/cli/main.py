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


import argparse
import logging
import os

from dotenv import load_dotenv
from typing import List

from .commands import (
    EXIT_ERROR, cmd_alpha, cmd_analyze, cmd_construct, cmd_gen, cmd_report,
    cmd_transform, cmd_verify
)

from ..constants import GENERATOR_KINDS, GRAPH_PROFILES, VERIFY_SUITES
from ..exceptions import HuovinenLabException
from ..resources import Config


logger = logging.getLogger("HuovinenLab")


def load_environment() -> None:
    """.env and process overrides of Config.
    """

    load_dotenv()

    n_max = os.getenv("HUOVINENLAB_N_MAX")
    if n_max:
        Config.n_max = int(n_max)

    solver = os.getenv("HUOVINENLAB_SOLVER")
    if solver:
        Config.solver = solver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="huovinenlab",
        description="Transport coefficients, Huovinen transforms and "
                    "stopping time graphs of planar measures."
    )
    parser.add_argument("--log-level", default="INFO",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    commands = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default=None,
                        help="Run directory, by default Config.output_dir.")
    common.add_argument("--seed", type=int, default=0)

    gen = commands.add_parser("gen", parents=[common],
                              help="Write a generated measure file.")
    gen.add_argument("kind", choices=GENERATOR_KINDS)
    gen.add_argument("--spacing", type=float)
    gen.add_argument("--level", type=int)
    gen.add_argument("--half-length", type=float)
    gen.add_argument("--angle", type=float)
    gen.add_argument("--amplitude", type=float)
    gen.add_argument("--profile", choices=GRAPH_PROFILES)
    gen.add_argument("--m", type=int)
    gen.add_argument("--param", action="append", metavar="KEY=VALUE")
    gen.add_argument("--name", default="measure.txt")
    gen.set_defaults(handler=cmd_gen)

    alpha = commands.add_parser("alpha", parents=[common],
                                help="Multiscale transport coefficients.")
    alpha.add_argument("measure")
    alpha.add_argument("--center", type=float, nargs=2, default=(0.0, 0.0),
                       metavar=("X", "Y"))
    alpha.add_argument("--radius", type=float, default=1.0)
    alpha.add_argument("--kind", choices=("line", "spike", "pair"),
                       default="line")
    alpha.add_argument("--model", help="Measure file of the pair model.")
    alpha.add_argument("--k", type=int, default=3)
    alpha.add_argument("--scales", type=int, default=1)
    alpha.add_argument("--ratio", type=float, default=0.5,
                       help="Radius factor between successive scales.")
    alpha.add_argument("--no-svg", dest="svg", action="store_false")
    alpha.set_defaults(handler=cmd_alpha)

    transform = commands.add_parser("transform", parents=[common],
                                    help="Truncated transform sweeps.")
    transform.add_argument("measure")
    transform.add_argument("--point", type=float, nargs=2, action="append",
                           default=[], metavar=("X", "Y"))
    transform.add_argument("--k", type=int, default=3)
    transform.add_argument("--r-min", type=float)
    transform.add_argument("--r-max", type=float)
    transform.add_argument("--count", type=int, default=16)
    transform.add_argument("--upper", type=float,
                           help="Outer truncation radius of a band.")
    transform.add_argument("--hard", action="store_true",
                           help="Indicator instead of smooth truncation.")
    transform.add_argument("--maximal", action="store_true")
    transform.set_defaults(handler=cmd_transform)

    for name, handler, summary in (
            ("construct", cmd_construct, "Stopping region and graph."),
            ("analyze", cmd_analyze, "Construction plus graph analysis.")):
        command = commands.add_parser(name, parents=[common], help=summary)
        command.add_argument("--config", required=True)
        command.add_argument("--measure",
                             help="Overrides the config's source.")
        command.add_argument("--norm-bound", type=float,
                             help="M of the operator norm assumption.")
        command.add_argument("--skip-assumptions", action="store_true")
        command.set_defaults(handler=handler)

    verify = commands.add_parser("verify", parents=[common],
                                 help="Run a check suite.")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--measure",
                        help="Replaces the corpus of measure suites.")
    verify.add_argument("--count", type=int,
                        help="Randomized instance count.")
    verify.set_defaults(handler=cmd_verify)

    report = commands.add_parser("report", help="Index a run directory.")
    report.add_argument("directory")
    report.set_defaults(handler=cmd_report)

    return parser


def main(argv: List[str] = None) -> int:
    """Command line entry point.

    Returns
    -------
    int
        0 ok, 1 failed checks, 2 error.
    """

    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(message)s"
    )
    load_environment()

    if args.command not in ("construct", "analyze", "report") \
            and args.output is None:
        args.output = Config.output_dir

    try:
        return args.handler(args)
    except HuovinenLabException as error:
        logger.error(str(error))
        return EXIT_ERROR
    except OSError as error:
        logger.error("I/O failure: {}".format(error))
        return EXIT_ERROR
