"""Semi-module strata of Kisin varieties.

Thin wrapper over the C++ core. ``run`` takes the same instance keys as
the ``kisin`` executable and returns the parsed JSON report (or the DOT
text for ``graph`` with ``out="dot"``).
"""

import json

from . import _core

__all__ = [
    "KisinError",
    "InvalidInput",
    "PreconditionError",
    "TheoremViolation",
    "run",
    "dominance_leq",
    "schema_version",
]

schema_version = _core.schema_version


class KisinError(RuntimeError):
    exit_code = 1

    def __init__(self, message, exit_code=None):
        super().__init__(message)
        if exit_code is not None:
            self.exit_code = exit_code


class InvalidInput(KisinError, ValueError):
    exit_code = 2


class PreconditionError(KisinError):
    exit_code = 3


class TheoremViolation(KisinError):
    exit_code = 4


_ERRORS = {cls.exit_code: cls for cls in (InvalidInput, PreconditionError, TheoremViolation)}


def run(command, config=None, **keys):
    """Run ``command`` on ``config`` updated with ``keys``."""
    config = dict(config or {})
    merged = dict(config.get("instance", config))
    merged.update(keys)
    code, output, error = _core.run(command, json.dumps(merged))
    if code != 0:
        raise _ERRORS.get(code, KisinError)(error, code)
    if merged.get("out") == "dot":
        return output
    return json.loads(output)


def dominance_leq(nu, mu):
    """Dominance order on dominant cocharacters given as lists of blocks."""
    return _core.dominance_leq(nu, mu)
