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


import hashlib
import json
import logging
import msgpack
import numpy as np
import scipy

from contextlib import contextmanager
from os import path, makedirs
from time import perf_counter
from typing import Any, Dict, Iterator, List, Tuple

from .. import __version__
from ..exceptions import (
    HuovinenLabException, InvalidConfig, StageFailure
)
from ..measure.generators import generate
from ..measure.io import read_measure
from ..measure.models import Ball, DiscreteMeasure
from ..schemas import load_config
from ..settings import GraphSettings, StopParams


logger = logging.getLogger("HuovinenLab")

MANIFEST_FILE = "manifest.msgpack"


def canonical(value: Any) -> Any:
    """Recursively key-sorted copy, so packing is order independent.
    """

    if isinstance(value, dict):
        return {key: canonical(value[key]) for key in sorted(value)}
    if isinstance(value, (list, tuple)):
        return [canonical(item) for item in value]
    return value


def config_hash(data: dict) -> str:
    return hashlib.sha256(
        msgpack.packb(canonical(data), use_bin_type=True)
    ).hexdigest()


class ExperimentConfig:
    def __init__(self, data: dict) -> None:
        """Validated experiment config.

        Parameters
        ----------
        data : dict
            Raw config, as read from JSON.

        Raises
        ------
        InvalidConfig
            Including parameter hierarchy failures of the stop block.
        """

        loaded = load_config(data)

        self.source = loaded["source"]
        self.k = loaded["k"]
        self.seed = loaded["seed"]
        self.grids = loaded["grids"]
        self.output = loaded["output"]

        try:
            self.stop = StopParams(k=self.k, **loaded["stop"])
            self.graph_settings = GraphSettings(
                knot_step=self.grids["knot_step"],
                knot_extent=self.grids["knot_extent"],
                whitney_levels=self.grids["whitney_levels"]
            )
        except InvalidConfig:
            raise
        except HuovinenLabException as error:
            raise InvalidConfig(messages={"stop": [str(error)]})

        self.hash = config_hash(loaded)

    @classmethod
    def from_file(cls, pathway: str) -> "ExperimentConfig":
        try:
            with open(pathway, "r") as file:
                data = json.load(file)
        except (OSError, ValueError) as error:
            raise InvalidConfig("Can't read config: {}".format(error))

        if not isinstance(data, dict):
            raise InvalidConfig("Config must be a JSON object")

        return cls(data)

    @property
    def base(self) -> Ball:
        x, y, r = self.grids["base"]
        return Ball(complex(x, y), r)

    @property
    def domain(self) -> Tuple[float, float]:
        return tuple(self.grids["domain"])

    @property
    def window(self) -> float:
        return self.grids["window"]

    def measure(self) -> DiscreteMeasure:
        """Reads or generates the source measure.
        """

        if self.source["kind"] == "file":
            return read_measure(self.source["path"])

        return generate(self.source["kind"], seed=self.seed,
                        **dict(self.source["parameters"]))

    @property
    def api_schema(self) -> dict:
        return {
            "source": self.source["kind"],
            "k": self.k,
            "seed": self.seed,
            "hash": self.hash,
            **{"stop_" + key: value
               for key, value in self.stop.api_schema.items()},
            **{"grids_" + key: value
               for key, value in self.graph_settings.api_schema.items()}
        }


class RunManifest:
    def __init__(self, directory: str, command: str,
                 config: str = None) -> None:
        """Record of one CLI run, written last.

        Parameters
        ----------
        directory : str
            Created if missing.
        command : str
        config : str, optional
            Config hash, by default none.
        """

        self.directory = directory
        self.command = command
        self.config = config
        self.versions = {
            "HuovinenLab": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "msgpack": ".".join(str(part) for part in msgpack.version)
        }
        self.stages: List[Tuple[str, float]] = []
        self.outputs: List[str] = []

        if not path.exists(directory):
            makedirs(directory)

    def output(self, name: str) -> str:
        """Registers an output file and returns its path.
        """

        if name not in self.outputs:
            self.outputs.append(name)
        return path.join(self.directory, name)

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        """Times a stage and turns package errors into StageFailure.

        Raises
        ------
        StageFailure
        """

        start = perf_counter()
        try:
            yield
        except StageFailure:
            raise
        except HuovinenLabException as error:
            raise StageFailure(stage=name, witness="{}: {}".format(
                type(error).__name__, error
            ))
        finally:
            elapsed = perf_counter() - start
            self.stages.append((name, elapsed))
            logger.info("Stage {} took {:.3f}s".format(name, elapsed))

    @property
    def api_schema(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "config_hash": self.config,
            "versions": self.versions,
            "stages": [[name, seconds] for name, seconds in self.stages],
            "outputs": sorted(self.outputs)
        }

    def write(self) -> str:
        pathway = path.join(self.directory, MANIFEST_FILE)
        with open(pathway, "wb") as file:
            file.write(msgpack.packb(self.api_schema, use_bin_type=True))
        return pathway


def read_manifest(directory: str) -> Dict[str, Any]:
    with open(path.join(directory, MANIFEST_FILE), "rb") as file:
        return msgpack.unpackb(file.read(), raw=False)
