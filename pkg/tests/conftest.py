import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cases import bench1, bench2  # noqa: E402


@pytest.fixture
def g_bench1():
    return bench1()


@pytest.fixture
def g_bench2():
    return bench2()
