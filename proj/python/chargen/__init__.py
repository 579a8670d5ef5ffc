"""Exact A3 characters, dimensions and weight multiplicities."""

from fractions import Fraction

from . import _core
from ._core import ChargenError, character_x, character_z, verify_pde

__all__ = [
    "ChargenError",
    "character_x",
    "character_z",
    "criterion",
    "dim",
    "eigenvalue",
    "expand",
    "kostant",
    "multiplicity",
    "run_cli",
    "verify_pde",
]


def eigenvalue(m):
    return Fraction(_core.eigenvalue(list(m)))


def dim(m, algebra="a3"):
    return int(_core.dim(list(m), algebra))


def multiplicity(m, n, method="kostant"):
    return int(_core.multiplicity(list(m), list(n), method))


def kostant(k1, k2, k3):
    return int(_core.kostant(k1, k2, k3))


def expand(which, caps):
    """Nonzero coefficients of a generating function as {exponent: text}."""
    return {tuple(e): c for e, c in _core.expand(which, list(caps))}


def criterion(id, level="quick"):
    return _core.criterion(id, level)


def run_cli(*args):
    """Runs the command-line interface in-process: (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
