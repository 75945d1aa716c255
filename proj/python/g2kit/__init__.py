"""Strict Lie 2-algebra actions on Lie algebroids.

Bundles are JSON documents with "schema": "g2kit/1". Functions here accept a
bundle as a dict, a JSON string or a path, and return reports as dicts.
"""

import json
import os

from . import _core
from ._core import InputError, ValidationError, SCHEMA

__all__ = [
    "InputError",
    "ValidationError",
    "SCHEMA",
    "load_bundle",
    "check_lie2",
    "check_algebroid",
    "check_action",
    "derive_brackets",
    "to_crossed_module",
    "from_crossed_module",
    "catalog_action",
    "action_names",
    "integration_names",
    "integrate",
    "verify_2groupoid",
    "psi",
    "run",
]


def _text(bundle):
    if isinstance(bundle, dict):
        return json.dumps(bundle)
    if isinstance(bundle, (str, os.PathLike)) and os.path.exists(bundle):
        with open(bundle) as f:
            return f.read()
    return bundle


def load_bundle(bundle):
    """Parse and validate the shape of a bundle; returns its canonical dict."""
    return json.loads(_core.normalize_bundle(_text(bundle)))


def check_lie2(bundle):
    return json.loads(_core.check_lie2(_text(bundle)))


def check_algebroid(bundle):
    return json.loads(_core.check_algebroid(_text(bundle)))


def check_action(bundle):
    return json.loads(_core.check_action(_text(bundle)))


def derive_brackets(bundle):
    return json.loads(_core.derive_brackets(_text(bundle)))


def to_crossed_module(bundle):
    return json.loads(_core.to_crossed_module(_text(bundle)))


def from_crossed_module(bundle):
    return json.loads(_core.from_crossed_module(_text(bundle)))


def catalog_action(name):
    return json.loads(_core.catalog_action(name))


def action_names():
    return _core.action_names()


def integration_names():
    return _core.integration_names()


def integrate(example, samples=100, seed=1, tol=1e-9, psi_only=False):
    return json.loads(_core.integrate(example, samples, seed, tol, psi_only))


def verify_2groupoid(example, samples=100, seed=1, tol=1e-9):
    return json.loads(_core.verify_2groupoid(example, samples, seed, tol))


def psi(example, w, v, x, a):
    """Psi((w, exp v), a_x) -> (x', a') as numpy arrays."""
    return _core.psi(example, w, v, x, a)


def run(*args):
    """Run a command line, e.g. run("check", "lie2", path); returns (code, out, err)."""
    return _core.run([str(a) for a in args])
