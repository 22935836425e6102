import pathlib

import numpy as np
import pytest

from ebd.gf2 import (build_extended_hamming_parity_check,
                     build_hamming_parity_check, derive_generator)

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def hamming74():
    return build_hamming_parity_check(3)


@pytest.fixture(scope="session")
def hamming15():
    return build_hamming_parity_check(4)


@pytest.fixture(scope="session")
def exham84():
    return build_extended_hamming_parity_check(3)


@pytest.fixture(scope="session")
def exham16():
    return build_extended_hamming_parity_check(4)


@pytest.fixture(scope="session")
def gen74(hamming74):
    return derive_generator(hamming74)


@pytest.fixture(scope="session")
def fig1_lambda():
    return np.loadtxt(DATA_DIR / "fig1_lambda.txt")


def random_lambda(rng, n):
    """Reliability-vector stand-in for property tests."""
    return rng.normal(0.0, 1.0, size=n) * 2.0 + rng.normal(0, 0.2, size=n)
