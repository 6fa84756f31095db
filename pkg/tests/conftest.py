import cmath
import math

import numpy as np
import pytest

from schlichtlab import (
    hayman_index,
    invert_to_sigma,
    log_data,
    make_schlicht,
    standard_corpus,
)

TRANSFORM_W = 0.3 * cmath.exp(1j * math.pi / 4.0)


def transform_alpha(w: complex) -> float:
    """Closed-form growth index of the Koebe transform at w.

    Derived from the rational form of the composite: the double pole sits
    at z* = (1-w)/(1-conj(w)) and the residue calculus collapses to
    (1 - |w|^2)/|1 - w^2|.
    """
    return (1.0 - abs(w) ** 2) / abs(1.0 - w * w)


def transform_theta(w: complex) -> float:
    return cmath.phase((1.0 - w) / (1.0 - w.conjugate()))


@pytest.fixture(scope="session")
def corpus130():
    return standard_corpus(130)


@pytest.fixture(scope="session")
def ledgers130(corpus130):
    return {f.label(): log_data(f) for f in corpus130}


@pytest.fixture(scope="session")
def transform262():
    return make_schlicht("koebe_transform", {"w": TRANSFORM_W}, order=262)


@pytest.fixture(scope="session")
def transform_sigma260(transform262):
    return invert_to_sigma(transform262, 260)


@pytest.fixture(scope="session")
def transform_estimate(transform262):
    return hayman_index(transform262)
