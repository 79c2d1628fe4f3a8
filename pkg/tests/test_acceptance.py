"""Acceptance suite: one pass/fail line per criterion.

Run directly (python tests/test_acceptance.py) or through pytest, which
prints the same lines in its terminal summary."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_checks import CRITERIA  # noqa: E402

TITLES = [
    "dimension law",
    "Hopf axioms",
    "Galois soundness and completeness",
    "Galois branch structure by type",
    "cohomology oracle equivalence",
    "polynomial identity for psi",
    "psi normalization",
    "Gamma law vs cotensor algebra",
    "biGalois values",
    "example fixtures",
    "closed forms for cyclic and decomposable data",
]

RESULTS = {}


def line(k, ok, detail):
    return f"criterion {k:2d} [{TITLES[k - 1]}]: {'PASS' if ok else 'FAIL'} ({detail})"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(k):
    ok, detail = CRITERIA[k - 1]()
    RESULTS[k] = line(k, ok, detail)
    print(RESULTS[k])
    assert ok, RESULTS[k]


if __name__ == "__main__":
    failed = 0
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(line(k, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
