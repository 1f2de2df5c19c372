from __future__ import annotations

import pytest
from hypothesis import settings

from hopfpar.fields import RationalField
from hopfpar.groups import cyclic_group
from hopfpar.hopf import group_algebra, rank_one_nilpotent8, rank_one_nonnilpotent8
from hopfpar.hpar import build_apar, build_hpar, kpar_group

settings.register_profile("ci", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("ci")

TRUNCATION = 3


@pytest.fixture(scope="session")
def QQ():
    return RationalField()


@pytest.fixture(scope="session")
def H_nil(QQ):
    return rank_one_nilpotent8(QQ)


@pytest.fixture(scope="session")
def H_non(QQ):
    return rank_one_nonnilpotent8(QQ)


@pytest.fixture(scope="session")
def apar_nil(H_nil):
    return build_apar(H_nil, TRUNCATION)


@pytest.fixture(scope="session")
def apar_non(H_non):
    return build_apar(H_non, TRUNCATION)


@pytest.fixture(scope="session")
def hpar_nil(H_nil):
    return build_hpar(H_nil, TRUNCATION)


@pytest.fixture(scope="session")
def hpar_non(H_non):
    return build_hpar(H_non, TRUNCATION)


@pytest.fixture(scope="session")
def kpar_z4(QQ):
    return kpar_group(cyclic_group(4), QQ)


@pytest.fixture(scope="session")
def kpar_z2(QQ):
    return kpar_group(cyclic_group(2), QQ)


@pytest.fixture(scope="session")
def KZ4(QQ):
    return group_algebra(cyclic_group(4), QQ)


@pytest.fixture(scope="session")
def KZ2(QQ):
    return group_algebra(cyclic_group(2), QQ)
