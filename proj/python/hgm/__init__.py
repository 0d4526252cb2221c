"""Hadamard weighted geometric means of nonnegative matrices: spectral radius,
norm and numerical-radius inequalities."""

import json as _json

from ._core import (
    ConvergenceError,
    counterexample,
    cyclic_factor_B,
    cyclic_product_P,
    hadamard_mean,
    hadamard_power,
    hadamard_product,
    kernel_matrix,
    numerical_radius,
    operator_norm,
    spectral_radius,
    spectral_radius_oracle,
    suite_names,
    weighted_geometric_mean,
)
from . import _core


def check(suite, matrices, alpha=None, beta=None, weights=None, rel_tol=1e-7, abs_tol=1e-12):
    """Run one suite on explicit matrices; returns the report as a dict."""
    return _json.loads(_core.check_json(suite, matrices, alpha, beta, weights, rel_tol, abs_tol))


def verify(suite="all", trials=100, seed=1, threads=0):
    """Seeded random sweep; returns a list of suite reports."""
    doc = _json.loads(_core.verify_json(suite, trials, seed, threads))
    return doc if isinstance(doc, list) else [doc]


__all__ = [
    "ConvergenceError",
    "check",
    "counterexample",
    "cyclic_factor_B",
    "cyclic_product_P",
    "hadamard_mean",
    "hadamard_power",
    "hadamard_product",
    "kernel_matrix",
    "numerical_radius",
    "operator_norm",
    "spectral_radius",
    "spectral_radius_oracle",
    "suite_names",
    "verify",
    "weighted_geometric_mean",
]
