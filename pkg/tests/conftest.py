import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from lbounds.bound.params import select_params
from lbounds.characters.character import enumerate_primitive


@pytest.fixture(scope="session")
def example_params():
    """q=25252, T=1, 偶特征, 参数表 k=7 的参数"""
    return select_params(25252, 1, 0, regime="table", k=7)


@pytest.fixture(scope="session")
def chi3():
    return enumerate_primitive(3)[0]


@pytest.fixture(scope="session")
def chi4():
    return enumerate_primitive(4)[0]


@pytest.fixture(scope="session")
def chi5_quartic():
    return next(chi for chi in enumerate_primitive(5) if not chi.is_real)
