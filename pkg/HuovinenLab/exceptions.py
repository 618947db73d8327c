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


class HuovinenLabException(Exception):
    """Base Exception for HuovinenLab.
    """

    def __init__(self, msg="HuovinenLab Exception", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidMeasure(HuovinenLabException):
    """Raised when atom weights are not strictly positive and finite.
    """

    def __init__(self, msg="Invalid measure", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidBall(HuovinenLabException):
    """Raised when a ball radius isn't positive.
    """

    def __init__(self, msg="Ball radius must be positive", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidSpacing(HuovinenLabException):
    """Raised when a quadrature spacing is non-positive or too coarse.
    """

    def __init__(self, msg="Invalid quadrature spacing", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidGenerator(HuovinenLabException):
    """Raised when the generator kind or its parameters are unknown.
    """

    def __init__(self, msg="Invalid generator", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class GenerationTooDeep(HuovinenLabException):
    """Raised when a Cantor generation exceeds the atom-count guard.
    """

    def __init__(self, msg="Cantor generation too deep", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class AtomLimitExceeded(HuovinenLabException):
    """Raised when a linear program would exceed N_max atoms.
    """

    def __init__(self, msg="Atom count exceeds N_max", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class SolverFailure(HuovinenLabException):
    """Raised when the LP solver returns no usable solution.
    """

    def __init__(self, msg="Linear program failed", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class EmptyCone(HuovinenLabException):
    """Raised when a cone constrained search has no admissible angle.
    """

    def __init__(self, msg="Cone aperture must be positive",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidKernelOrder(HuovinenLabException):
    """Raised when k isn't an odd positive integer.
    """

    def __init__(self, msg="Kernel order must be odd and positive",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class ZeroPoint(HuovinenLabException):
    """Raised when a kernel is evaluated at the origin.
    """

    def __init__(self, msg="Kernel undefined at 0", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class SeriesOrderTooLarge(HuovinenLabException):
    """Raised when a kernel series order is invalid or beyond the guard.
    """

    def __init__(self, msg="Series order outside supported range",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class SlopeTooLarge(HuovinenLabException):
    """Raised when a graph is too steep for the requested computation.
    """

    def __init__(self, msg="Graph slope too large", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class StepTooCoarse(HuovinenLabException):
    """Raised when a quadrature step can't meet the requested tolerance.
    """

    def __init__(self, msg="Step too coarse for tolerance",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class ResolutionTooCoarse(HuovinenLabException):
    """Raised when sampled D can't resolve its Whitney intervals.
    """

    def __init__(self, msg="Sampling resolution too coarse",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidParameterHierarchy(HuovinenLabException):
    """Raised when eps <= theta^4 <= alpha^8 <= delta^16 fails.
    """

    def __init__(self, msg="Stop parameters violate the hierarchy",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class InvalidConfig(HuovinenLabException):
    """Raised when an experiment config fails validation.

    Parameters
    ----------
    messages : dict, optional
        Field diagnostics from marshmallow.
    """

    def __init__(self, msg="Invalid experiment config", messages=None,
                 *args, **kwargs):
        self.messages = messages or {}
        if self.messages:
            msg = "{}: {}".format(msg, self.messages)
        super().__init__(msg, *args, **kwargs)


class MeasureFileError(HuovinenLabException):
    """Raised when a measure file can't be parsed.

    Parameters
    ----------
    line : int, optional
        1-based line number of the offending row.
    """

    def __init__(self, msg="Malformed measure file", line=None,
                 *args, **kwargs):
        self.line = line
        if line is not None:
            msg = "{} (line {})".format(msg, line)
        super().__init__(msg, *args, **kwargs)


class StageFailure(HuovinenLabException):
    """Raised when a pipeline stage fails.

    Parameters
    ----------
    stage : str
    witness : Any, optional
        Whatever input triggered the failure.
    """

    def __init__(self, msg="Stage failed", stage="", witness=None,
                 *args, **kwargs):
        self.stage = stage
        self.witness = witness
        msg = "{} [{}]".format(msg, stage)
        if witness is not None:
            msg = "{}: {}".format(msg, witness)
        super().__init__(msg, *args, **kwargs)


class DegenerateWindow(HuovinenLabException):
    """Raised when a smoothing window has zero width.
    """

    def __init__(self, msg="Smoothing window is degenerate (D = 0)",
                 *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class NotConverged(HuovinenLabException):
    """Raised in strict mode when grid refinement changes an estimate.
    """

    def __init__(self, msg="Estimate did not converge", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)
