"""Exact computations on flag groupoids of SL(r+1).

Every call takes and returns plain JSON-compatible data: rationals are
"p/q" strings, matrices lists of rows, Weyl elements 1-based words.
"""
import json

from . import _core

__all__ = ["CommandFailed", "factor", "chart", "groupoid", "leaf", "verify", "leaf_dim", "reduced_word", "suite_names"]

leaf_dim = _core.leaf_dim
reduced_word = _core.reduced_word
suite_names = _core.suite_names


class CommandFailed(Exception):
    def __init__(self, code, report):
        super().__init__(report.get("message") or report.get("error") or report)
        self.code = code
        self.report = report


def _call(command, op="", data=None, *, check=True, **kw):
    code, out = _core.run(command, op, input=json.dumps(data or {}), **kw)
    out = json.loads(out)
    if check and code != 0:
        raise CommandFailed(code, out)
    return out


def factor(matrix, mode="gauss"):
    return _call("factor", data={"matrix": matrix}, mode=mode)


def chart(op, data):
    return _call("chart", op, data)


def groupoid(op, data=None, model="gamma", cross=False, **kw):
    return _call("groupoid", op, data, model=model, cross=cross, **kw)


def leaf(op, data, model="gamma"):
    return _call("leaf", op, data, model=model)


def verify(suite, rank=2, n=1, samples=20, seed=1):
    """Run a suite; returns the report, whose "ok" field says whether it passed."""
    return _call("verify", suite, check=False, rank=rank, n=n, samples=samples, seed=seed)
