"""Shared state between the acceptance module and conftest hooks."""

import functools
import importlib

LINES: list[str] = []

# randomized property suites backing criterion 8: (module, test, randomized)
PROPERTY_SUITES = [
    ("test_connections", "test_connection_is_an_equivalence_on_random_sets", True),
    ("test_connections", "test_connection_is_an_equivalence_with_torsion", True),
    ("test_connections", "test_search_agrees_with_brute_force_on_random_sets", True),
    ("test_connections", "test_search_agrees_with_brute_force_on_catalog_supports", False),
    ("test_ideals", "test_closure_is_extensive_idempotent_monotone", True),
    ("test_ideals", "test_graded_ideals_split_along_the_partition", True),
    ("test_ideals", "test_ann_inside_ann_lie", True),
    ("test_ideals", "test_literal_j_vanishes_on_skew_3lie", False),
    ("test_ideals", "test_literal_j_vanishes_on_skew_3lie_in_any_basis", True),
    ("test_algebra", "test_left_lift_always_satisfies_identity", True),
]
SUITE_NAMES = {name for _, name, _ in PROPERTY_SUITES}

COUNTS: dict[str, int] = {}
OUTCOMES: dict[str, bool] = {}
ELAPSED: dict[str, float] = {}
SESSION = {"duration": 0.0}


def record(number: int, ok: bool, detail: str) -> None:
    LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def instrument(fn, name: str):
    """Count the examples hypothesis feeds to ``fn``; idempotent."""
    h = getattr(fn, "hypothesis", None)
    if h is None or getattr(h.inner_test, "_counted", False):
        return
    inner = h.inner_test

    @functools.wraps(inner)
    def counted(*args, **kwargs):
        COUNTS[name] = COUNTS.get(name, 0) + 1
        return inner(*args, **kwargs)

    counted._counted = True
    h.inner_test = counted


def load_suite(module: str, name: str):
    fn = getattr(importlib.import_module(module), name)
    instrument(fn, name)
    return fn
