"""Exact arithmetic in prime fields F_p, for p < 2**16."""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

MAX_MODULUS = 1 << 16


class ModulusMismatch(ValueError):
    """Raised when two operands live over different moduli."""


def is_prime(n: int) -> bool:
    """Trial-division primality test (sufficient for n < 2**16)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class PrimeModulus:
    """A validated prime modulus p with 2 <= p < 2**16."""

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"modulus must be an int, got {type(self.p).__name__}")
        if self.p >= MAX_MODULUS:
            raise ValueError(f"modulus {self.p} out of range (need p < 2**16)")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"PrimeModulus({self.p})"


@functools.lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    """invt[x] = x**-1 mod p for 1 <= x < p; invt[0] is an unused 0 sentinel."""
    invt = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        invt[x] = pow(x, p - 2, p)
    invt.setflags(write=False)
    return invt


def _check_same_modulus(a, b):
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"mixed moduli: {a.modulus.p} vs {b.modulus.p}")


@dataclass(frozen=True)
class FpScalar:
    """An element of F_p, stored as its least non-negative residue."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.modulus.p)

    def __add__(self, other: "FpScalar") -> "FpScalar":
        _check_same_modulus(self, other)
        return FpScalar(self.value + other.value, self.modulus)

    def __sub__(self, other: "FpScalar") -> "FpScalar":
        _check_same_modulus(self, other)
        return FpScalar(self.value - other.value, self.modulus)

    def __mul__(self, other: "FpScalar") -> "FpScalar":
        _check_same_modulus(self, other)
        return FpScalar(self.value * other.value, self.modulus)

    def __neg__(self) -> "FpScalar":
        return FpScalar(-self.value, self.modulus)

    def inv(self) -> "FpScalar":
        """Multiplicative inverse; raises ZeroDivisionError at 0."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus.p}")
        return FpScalar(pow(self.value, self.modulus.p - 2, self.modulus.p), self.modulus)

    def __truediv__(self, other: "FpScalar") -> "FpScalar":
        return self * other.inv()

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FpScalar({self.value} mod {self.modulus.p})"


def sqrt_of_minus_one(modulus: PrimeModulus) -> FpScalar | None:
    """The smallest non-negative x with x*x = -1 in F_p.

    Returns None exactly when no such x exists, i.e. when p = 3 (mod 4).
    For p = 2 the answer is 1, since -1 = 1 there.
    """
    p = modulus.p
    target = (p - 1) % p
    for x in range(p):
        if (x * x) % p == target:
            return FpScalar(x, modulus)
    return None
