"""Polynomial-exponential solution families of the Klein-Gordon equation."""

import json

from ._core import (
    DegenerateK0,
    DimensionMismatch,
    NonRationalRoot,
    OrderMismatch,
    SpecError,
    adjudicate_radicand,
    atilde,
    char_residual,
    crosscheck,
    exp_components,
    nil_exp,
    nil_mul,
    partition_count,
    partition_oracle,
    render_atilde,
    render_resolvent,
    solve_chain,
)
from . import _core

__version__ = "0.1.0"


def generate(spec, order=None, branch=None, mode=None):
    """Family document (dict) for a problem spec given as a dict or JSON string."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(_core._generate_json(text, order, branch, mode))


def verify(doc, tol=1e-10, numeric=False, points=20, h=1e-3, seed=42, numeric_tol=1e-6):
    """List of verification reports for a family document."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return json.loads(_core._verify_json(text, tol, numeric, points, h, seed, numeric_tol))
