import pytest
from faker import Faker

from mzv_utilities.index_core import raise_last
from mzv_utilities.logger import logger

SEED = 20201015


@pytest.fixture
def fake():
    """A Faker seeded the same way for every test, so random indices repeat"""
    faker = Faker()
    faker.seed_instance(SEED)
    return faker


@pytest.fixture
def random_index(fake):
    """Factory for random indices of a given weight (admissible on request)"""

    def make(weight, admissible=False):
        if admissible:
            # P maps indices of weight w - 1 onto admissible ones of weight w
            return raise_last(make(weight - 1))
        parts = []
        remaining = weight
        while remaining:
            c = fake.pyint(min_value=1, max_value=remaining)
            parts.append(c)
            remaining -= c
        return tuple(parts)

    return make


@pytest.fixture(autouse=True)
def no_file_logging(monkeypatch):
    """Keep file handlers added by a test from leaking into the next one"""
    monkeypatch.setattr(logger, "handlers", list(logger.handlers))
