# conftest.py
"""Shared test helpers: seeded random draws for the property batteries."""

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260816)


def random_complex(rng, n, re_lo=-3.0, re_hi=3.0, im_lo=-3.0, im_hi=3.0):
    """n complex draws in the given rectangle."""
    return rng.uniform(re_lo, re_hi, n) + 1j * rng.uniform(im_lo, im_hi, n)


def random_disk(rng, n, radius=0.9):
    """n complex draws uniform over the disk |z| <= radius."""
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    th = rng.uniform(0.0, 2.0 * np.pi, n)
    return r * np.exp(1j * th)
