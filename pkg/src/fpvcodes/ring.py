"""Arithmetic in the ring R = F_p + vF_p, where v**2 = v.

An element is a + v*b with a, b in F_p.  Evaluating at v = 0 and at v = 1
gives the two projections a and a + b; together they form a ring
isomorphism R -> F_p x F_p (the Gray map), because v and 1 - v are
orthogonal idempotents summing to 1.  Almost every question about R
splits into two independent questions over F_p through this map.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .primefield import FpScalar, ModulusMismatch, PrimeModulus


@dataclass(frozen=True)
class RScalar:
    """a + v*b in F_p + vF_p, components stored as least residues."""

    a: int
    b: int
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        object.__setattr__(self, "a", int(self.a) % p)
        object.__setattr__(self, "b", int(self.b) % p)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> "RScalar":
        return cls(0, 0, modulus)

    @classmethod
    def one(cls, modulus: PrimeModulus) -> "RScalar":
        return cls(1, 0, modulus)

    @classmethod
    def v(cls, modulus: PrimeModulus) -> "RScalar":
        return cls(0, 1, modulus)

    @classmethod
    def one_minus_v(cls, modulus: PrimeModulus) -> "RScalar":
        return cls(1, -1, modulus)

    # ------------------------------------------------------------------
    # ring operations

    def _check(self, other: "RScalar"):
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"mixed moduli: {self.modulus.p} vs {other.modulus.p}")

    def __add__(self, other: "RScalar") -> "RScalar":
        self._check(other)
        return RScalar(self.a + other.a, self.b + other.b, self.modulus)

    def __sub__(self, other: "RScalar") -> "RScalar":
        self._check(other)
        return RScalar(self.a - other.a, self.b - other.b, self.modulus)

    def __neg__(self) -> "RScalar":
        return RScalar(-self.a, -self.b, self.modulus)

    def __mul__(self, other: "RScalar") -> "RScalar":
        # (a1 + v b1)(a2 + v b2) = a1 a2 + v(a1 b2 + b1 a2 + b1 b2), using v*v = v
        self._check(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return RScalar(a1 * a2, a1 * b2 + b1 * a2 + b1 * b2, self.modulus)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # ------------------------------------------------------------------
    # projections and the Gray map

    def at_v0(self) -> FpScalar:
        """Image under v -> 0 (reduction mod the ideal generated by v)."""
        return FpScalar(self.a, self.modulus)

    def at_v1(self) -> FpScalar:
        """Image under v -> 1 (reduction mod the ideal generated by 1 - v)."""
        return FpScalar(self.a + self.b, self.modulus)

    def gray(self) -> tuple[FpScalar, FpScalar]:
        """The pair (value at v=0, value at v=1); a ring isomorphism."""
        return (self.at_v0(), self.at_v1())

    def is_unit(self) -> bool:
        """Units are exactly the elements with both Gray coordinates nonzero."""
        p = self.modulus.p
        return self.a != 0 and (self.a + self.b) % p != 0

    def inv(self) -> "RScalar":
        """Multiplicative inverse; raises ZeroDivisionError on non-units."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit")
        return crt_assemble(self.at_v0().inv(), self.at_v1().inv())

    def __repr__(self) -> str:
        return f"RScalar({self.a}+{self.b}v mod {self.modulus.p})"


def crt_assemble(at0: FpScalar, at1: FpScalar) -> RScalar:
    """The unique x in R with x(v=0) = at0 and x(v=1) = at1.

    Inverse of the Gray map: x = at0 + v*(at1 - at0).
    """
    if at0.modulus != at1.modulus:
        raise ModulusMismatch(f"mixed moduli: {at0.modulus.p} vs {at1.modulus.p}")
    return RScalar(at0.value, at1.value - at0.value, at0.modulus)


# ----------------------------------------------------------------------
# plain-text tokens

_PLAIN = re.compile(r"^[+-]?\d+$")
_PAIR = re.compile(r"^([+-]?\d+):([+-]?\d+)$")
_V_ONLY = re.compile(r"^([+-]?\d*)v$")
_A_PLUS_BV = re.compile(r"^([+-]?\d+)([+-])(\d*)v$")


def parse_scalar_token(token: str, modulus: PrimeModulus) -> RScalar:
    """Parse one ring element token.

    The canonical form is "a:b" (two decimal residues).  For convenience
    the input forms "a", "v", "bv", "a+bv" and "a-bv" are also accepted.
    Raises ValueError on anything else.
    """
    m = _PAIR.match(token)
    if m:
        return RScalar(int(m.group(1)), int(m.group(2)), modulus)
    if _PLAIN.match(token):
        return RScalar(int(token), 0, modulus)
    m = _V_ONLY.match(token)
    if m:
        digits = m.group(1)
        if digits in ("", "+"):
            b = 1
        elif digits == "-":
            b = -1
        else:
            b = int(digits)
        return RScalar(0, b, modulus)
    m = _A_PLUS_BV.match(token)
    if m:
        a = int(m.group(1))
        b = int(m.group(3)) if m.group(3) else 1
        if m.group(2) == "-":
            b = -b
        return RScalar(a, b, modulus)
    raise ValueError(f"cannot parse ring element {token!r} (expected forms: a:b, a, v, bv, a+bv)")


def render_scalar_token(x: RScalar) -> str:
    """Canonical token for a ring element: 'a:b' with least residues."""
    return f"{x.a}:{x.b}"
