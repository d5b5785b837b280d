"""Coefficients of the energy model and their key=value file format."""

import math
import numbers
import os
from dataclasses import asdict, dataclass, fields

from ..tactics import TacticKind


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ParameterSet:
    """
    Coefficients of the energy model

    Attributes
    ----------
    r_eye, r_net, r_lad, r_inv, r_red : float
        Weight of a chain taking part in an eye, net, ladder, invasion or
        reduction, when it lies between two other chains.

    r_sl : float
        Weight of a single empty point between two chains.

    r_none : float
        Weight of a chain with no tactic pattern.

    mu : float
        Magnitude of the external field.

    d_max : int
        Chains further apart than `d_max` (Manhattan distance) do not
        interact.

    Notes
    -----
    Construction enforces
    `r_eye > r_net > r_lad > r_inv > r_red > r_sl >= r_none > 0`,
    `r_eye > 1`, `mu > 0` and `d_max >= 1`.
    """

    r_eye: float = 8.0
    r_net: float = 5.0
    r_lad: float = 4.0
    r_inv: float = 3.0
    r_red: float = 2.0
    r_sl: float = 1.0
    r_none: float = 1.0
    mu: float = 1.0
    d_max: int = 6

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, numbers.Real):
                raise ParameterError(f"{f.name} must be a number; got {v!r}")
            if not math.isfinite(v):
                raise ParameterError(f"{f.name} must be finite; got {v!r}")
        if not isinstance(self.d_max, numbers.Integral):
            raise ParameterError(f"d_max must be an integer; got {self.d_max!r}")
        order = ("r_eye", "r_net", "r_lad", "r_inv", "r_red", "r_sl")
        for hi, lo in zip(order[:-1], order[1:]):
            if not getattr(self, hi) > getattr(self, lo):
                raise ParameterError(f"Need {hi} > {lo}")
        if not self.r_sl >= self.r_none > 0:
            raise ParameterError("Need r_sl >= r_none > 0")
        if not self.r_eye > 1:
            raise ParameterError("Need r_eye > 1")
        if not self.mu > 0:
            raise ParameterError("Need mu > 0")
        if self.d_max < 1:
            raise ParameterError("Need d_max >= 1")

    def coefficient(self, kind):
        """The r coefficient of a `TacticKind`."""
        return {
            TacticKind.EYE: self.r_eye,
            TacticKind.NET: self.r_net,
            TacticKind.LADDER: self.r_lad,
            TacticKind.INVASION: self.r_inv,
            TacticKind.REDUCTION: self.r_red,
        }.get(TacticKind(kind), self.r_none)

    def as_dict(self):
        return asdict(self)


KEYS = tuple(f.name for f in fields(ParameterSet))


def parse_params(text):
    """
    Build a `ParameterSet` from key=value lines

    Blank lines and `#` comments are ignored.  Keys missing from `text` keep
    their default values.
    """
    values = dict()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not raw:
            raise ParameterError(f"line {lineno}: expected key=value")
        if key not in KEYS:
            raise ParameterError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ParameterError(f"line {lineno}: {key} given twice")
        try:
            values[key] = int(raw) if key == "d_max" else float(raw)
        except ValueError:
            raise ParameterError(f"line {lineno}: bad value {raw!r}") from None
    return ParameterSet(**values)


def load_params(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_params(f.read())


def dump_params(params):
    """Text that `parse_params` reads back to `params`."""
    return "".join(f"{k} = {v!r}\n" for k, v in params.as_dict().items())


def _process_params(params):
    # Accept None (defaults), a ParameterSet, a mapping or a path
    if params is None:
        return ParameterSet()
    if isinstance(params, ParameterSet):
        return params
    if isinstance(params, dict):
        unknown = set(params) - set(KEYS)
        if unknown:
            raise ParameterError(f"Unknown parameters {sorted(unknown)}")
        return ParameterSet(**params)
    if isinstance(params, (str, os.PathLike)):
        return load_params(params)
    raise TypeError(
        "params must be None, a ParameterSet, a dict or a path to a"
        f" key=value file; got {type(params)}"
    )
