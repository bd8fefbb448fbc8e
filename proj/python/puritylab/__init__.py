"""Purity, flatness and injectivity checks over finite local algebras.

Reports come back as plain dicts in the same canonical shape the
``purity-lab`` command line writes.
"""

import json

from . import _core
from ._core import (
    Algebra,
    Error,
    Module,
    auslander_bridger_dual,
    direct_sum,
    free_module,
    linear_dual,
    query_kinds,
    residue_field,
    suite_names,
    suite_summary,
    warfield_module,
)

__all__ = [
    "Algebra",
    "Error",
    "Module",
    "auslander_bridger_dual",
    "check",
    "check_module",
    "direct_sum",
    "free_module",
    "linear_dual",
    "query_kinds",
    "replay",
    "residue_field",
    "run_suite",
    "run_workspace",
    "suite_names",
    "suite_summary",
    "warfield_module",
]


def run_suite(name, **settings):
    """Run a named suite; settings are threads, budget, up_to, seed, end_budget, oracle, timing."""
    return json.loads(_core.run_suite(name, **settings))


def run_workspace(text, **settings):
    """Run every [[check]] of a workspace given as text."""
    return json.loads(_core.run_workspace(text, **settings))


def check(text, kind, target, n="1", m="1", **settings):
    # n and m accept integers or "inf".
    return json.loads(_core.check(text, kind, target, str(n), str(m), **settings))


def check_module(module, kind, n="1", m="1", **settings):
    return json.loads(module.check(kind, str(n), str(m), **settings))


def replay(text, report):
    """Map claim id to whether its witness reproduces the failure."""
    if not isinstance(report, str):
        report = json.dumps(report)
    return dict(_core.replay(text, report))
