import json
import os

import pytest

DATA = os.path.join(os.path.dirname(__file__), "data", "oracles.json")


@pytest.fixture(scope="session")
def oracles():
    """Frozen mpmath references written by ``tests/make_oracles.py``."""
    with open(DATA) as fh:
        return json.load(fh)


def rel_err(value, ref):
    ref = float(ref)
    return abs(value - ref) / abs(ref) if ref != 0 else abs(value)
