from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from twotrees import all_labeled_two_trees


@pytest.fixture(scope="session")
def corpus():
    """All distinct labeled 2-trees with a fixed base, keyed by n."""
    return {n: all_labeled_two_trees(n) for n in range(3, 9)}
