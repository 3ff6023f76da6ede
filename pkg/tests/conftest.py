"""Shared helpers: seeded random codes over F_p and over F_p + vF_p."""

import numpy as np

from fpvcodes import FpLinearCode, FpMatrix, PrimeModulus, RLinearCode, RMatrix


def random_fp_matrix(rng, p: int, rows: int, n: int) -> FpMatrix:
    data = rng.integers(0, p, size=(rows, n))
    return FpMatrix.from_rows(data.tolist(), PrimeModulus(p), ncols=n)


def random_fp_code(rng, p: int, n: int, rows=None) -> FpLinearCode:
    if rows is None:
        rows = int(rng.integers(0, n + 2))
    return FpLinearCode(random_fp_matrix(rng, p, rows, n))


def random_rmatrix(rng, p: int, rows: int, n: int) -> RMatrix:
    pm = PrimeModulus(p)
    a = rng.integers(0, p, size=(rows, n))
    b = rng.integers(0, p, size=(rows, n))
    return RMatrix.from_planes(
        FpMatrix.from_rows(a.tolist(), pm), FpMatrix.from_rows(b.tolist(), pm)
    )


def random_rcode(rng, p: int, n: int, rows=None) -> RLinearCode:
    if rows is None:
        rows = int(rng.integers(1, n + 2))
    return RLinearCode.from_generator(random_rmatrix(rng, p, rows, n))


def make_rng(seed: int = 0xC0DE5) -> np.random.Generator:
    return np.random.default_rng(seed)
