"""Exact matrices over F_p and over R = F_p + vF_p, plus column permutations.

FpMatrix wraps a read-only int64 numpy array of least residues.  RMatrix
stores a (rows, cols, 2) array whose last axis holds the (a, b) pair of
a + v*b.  Both types are immutable: every operation returns a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import rref_mod
from .primefield import FpScalar, ModulusMismatch, PrimeModulus, inverse_table
from .ring import RScalar


@dataclass(frozen=True)
class Permutation:
    """A column order.  Applying to M gives M'[:, j] = M[:, images[j]]."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for new, old in enumerate(self.images):
            inv[old] = new
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.images))


def _leading_columns(arr: np.ndarray) -> tuple[int, ...]:
    """Column index of the first nonzero entry of each row (rows must be nonzero)."""
    return tuple(int(np.nonzero(row)[0][0]) for row in arr)


class FpMatrix:
    """An immutable matrix over F_p."""

    __slots__ = ("data", "modulus")

    def __init__(self, data, modulus: PrimeModulus, *, _trusted: bool = False):
        arr = np.array(data, dtype=np.int64, copy=True, order="C")
        if arr.ndim != 2:
            raise ValueError(f"need a 2-d array, got shape {arr.shape}")
        if not _trusted:
            arr %= modulus.p
        arr.setflags(write=False)
        self.data = arr
        self.modulus = modulus

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_rows(cls, rows, modulus: PrimeModulus, ncols: int | None = None) -> "FpMatrix":
        """Build from an iterable of rows of ints or FpScalars.

        ncols disambiguates the width when rows is empty.
        """
        converted = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, FpScalar):
                    if x.modulus != modulus:
                        raise ModulusMismatch(f"mixed moduli: {x.modulus.p} vs {modulus.p}")
                    out.append(x.value)
                else:
                    out.append(int(x))
            converted.append(out)
        if not converted:
            if ncols is None:
                raise ValueError("ncols is required for an empty row list")
            return cls(np.zeros((0, ncols), np.int64), modulus, _trusted=True)
        return cls(converted, modulus)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, modulus: PrimeModulus) -> "FpMatrix":
        return cls(np.zeros((nrows, ncols), np.int64), modulus, _trusted=True)

    @classmethod
    def identity(cls, n: int, modulus: PrimeModulus) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), modulus, _trusted=True)

    # ------------------------------------------------------------------
    # basic queries

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def is_zero(self) -> bool:
        return not self.data.any()

    def row(self, i: int) -> np.ndarray:
        return self.data[i].copy()

    def entry(self, i: int, j: int) -> FpScalar:
        return FpScalar(int(self.data[i, j]), self.modulus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix({self.data.tolist()}, p={self.modulus.p})"

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: "FpMatrix"):
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"mixed moduli: {self.modulus.p} vs {other.modulus.p}")

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix((self.data + other.data) % self.modulus.p, self.modulus, _trusted=True)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix((self.data - other.data) % self.modulus.p, self.modulus, _trusted=True)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix((-self.data) % self.modulus.p, self.modulus, _trusted=True)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        prod = (self.data @ other.data) % self.modulus.p
        return FpMatrix(prod, self.modulus, _trusted=True)

    def scaled(self, c) -> "FpMatrix":
        c = c.value if isinstance(c, FpScalar) else int(c)
        return FpMatrix((self.data * c) % self.modulus.p, self.modulus, _trusted=True)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.data.T.copy(), self.modulus, _trusted=True)

    @property
    def T(self) -> "FpMatrix":
        return self.transpose()

    # ------------------------------------------------------------------
    # structure

    def take_columns(self, cols) -> "FpMatrix":
        return FpMatrix(self.data[:, list(cols)], self.modulus, _trusted=True)

    def permute_columns(self, perm: Permutation) -> "FpMatrix":
        if len(perm) != self.ncols:
            raise ValueError(f"permutation of length {len(perm)} on {self.ncols} columns")
        return FpMatrix(self.data[:, list(perm.images)], self.modulus, _trusted=True)

    def rref(self) -> tuple["FpMatrix", int]:
        """Row-reduced echelon form with zero rows dropped, and the rank."""
        reduced, pivots = self.rref_pivots()
        return reduced, len(pivots)

    def rref_pivots(self) -> tuple["FpMatrix", tuple[int, ...]]:
        """RREF (zero rows dropped) plus the tuple of pivot columns."""
        work = np.ascontiguousarray(self.data).copy()
        cap = min(self.nrows, self.ncols)
        pivots = np.zeros(cap, dtype=np.int64)
        rank = int(rref_mod(work, self.modulus.p, inverse_table(self.modulus.p), pivots))
        out = FpMatrix(work[:rank], self.modulus, _trusted=True)
        return out, tuple(int(c) for c in pivots[:rank])

    def kernel_basis(self) -> "FpMatrix":
        """Canonical RREF basis of {x : self @ x == 0}, as rows.

        The raw free-column basis read off the RREF need not itself be
        row-reduced, so it is reduced once more for a canonical answer.
        """
        reduced, pivots = self.rref_pivots()
        n = self.ncols
        pivset = set(pivots)
        free = [j for j in range(n) if j not in pivset]
        rows = np.zeros((len(free), n), np.int64)
        p = self.modulus.p
        for idx, f in enumerate(free):
            rows[idx, f] = 1
            for i, pc in enumerate(pivots):
                rows[idx, pc] = (-reduced.data[i, f]) % p
        basis, rank = FpMatrix(rows, self.modulus, _trusted=True).rref()
        assert rank == len(free)
        return basis

    def solve_row(self, target) -> np.ndarray:
        """The unique x with x @ self == target, for square invertible self."""
        k = self.nrows
        if self.ncols != k:
            raise ValueError(f"solve_row needs a square matrix, got {self.shape}")
        rhs = np.asarray(target, dtype=np.int64).reshape(k, 1) % self.modulus.p
        aug = np.concatenate([self.data.T, rhs], axis=1)
        reduced, pivots = FpMatrix(aug, self.modulus, _trusted=True).rref_pivots()
        if pivots != tuple(range(k)):
            raise ValueError("matrix is singular")
        return reduced.data[:, k].copy()


class RMatrix:
    """An immutable matrix over R = F_p + vF_p, stored as (a, b) planes."""

    __slots__ = ("data", "modulus")

    def __init__(self, data, modulus: PrimeModulus, *, _trusted: bool = False):
        arr = np.array(data, dtype=np.int64, copy=True, order="C")
        if arr.ndim != 3 or arr.shape[2] != 2:
            raise ValueError(f"need a (rows, cols, 2) array, got shape {arr.shape}")
        if not _trusted:
            arr %= modulus.p
        arr.setflags(write=False)
        self.data = arr
        self.modulus = modulus

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_planes(cls, a: FpMatrix, b: FpMatrix) -> "RMatrix":
        """Matrix with entries a[i,j] + v*b[i,j]."""
        if a.modulus != b.modulus:
            raise ModulusMismatch(f"mixed moduli: {a.modulus.p} vs {b.modulus.p}")
        if a.shape != b.shape:
            raise ValueError(f"plane shapes differ: {a.shape} vs {b.shape}")
        return cls(np.stack([a.data, b.data], axis=-1), a.modulus, _trusted=True)

    @classmethod
    def from_evaluations(cls, at0: FpMatrix, at1: FpMatrix) -> "RMatrix":
        """The unique R-matrix whose v=0 image is at0 and v=1 image is at1."""
        if at0.modulus != at1.modulus:
            raise ModulusMismatch(f"mixed moduli: {at0.modulus.p} vs {at1.modulus.p}")
        if at0.shape != at1.shape:
            raise ValueError(f"shapes differ: {at0.shape} vs {at1.shape}")
        b = (at1.data - at0.data) % at0.modulus.p
        return cls(np.stack([at0.data, b], axis=-1), at0.modulus, _trusted=True)

    @classmethod
    def from_rows(cls, rows, modulus: PrimeModulus, ncols: int | None = None) -> "RMatrix":
        """Build from rows of RScalars or (a, b) pairs."""
        converted = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, RScalar):
                    if x.modulus != modulus:
                        raise ModulusMismatch(f"mixed moduli: {x.modulus.p} vs {modulus.p}")
                    out.append((x.a, x.b))
                else:
                    a, b = x
                    out.append((int(a), int(b)))
            converted.append(out)
        if not converted:
            if ncols is None:
                raise ValueError("ncols is required for an empty row list")
            return cls(np.zeros((0, ncols, 2), np.int64), modulus, _trusted=True)
        return cls(converted, modulus)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, modulus: PrimeModulus) -> "RMatrix":
        return cls(np.zeros((nrows, ncols, 2), np.int64), modulus, _trusted=True)

    @classmethod
    def identity(cls, n: int, modulus: PrimeModulus) -> "RMatrix":
        arr = np.zeros((n, n, 2), np.int64)
        arr[np.arange(n), np.arange(n), 0] = 1
        return cls(arr, modulus, _trusted=True)

    # ------------------------------------------------------------------
    # basic queries

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[:2]

    def is_zero(self) -> bool:
        return not self.data.any()

    def entry(self, i: int, j: int) -> RScalar:
        return RScalar(int(self.data[i, j, 0]), int(self.data[i, j, 1]), self.modulus)

    def a_plane(self) -> FpMatrix:
        return FpMatrix(self.data[:, :, 0], self.modulus, _trusted=True)

    def b_plane(self) -> FpMatrix:
        return FpMatrix(self.data[:, :, 1], self.modulus, _trusted=True)

    def at_v0(self) -> FpMatrix:
        """Entrywise image under v -> 0."""
        return self.a_plane()

    def at_v1(self) -> FpMatrix:
        """Entrywise image under v -> 1."""
        s = (self.data[:, :, 0] + self.data[:, :, 1]) % self.modulus.p
        return FpMatrix(s, self.modulus, _trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"RMatrix({self.data.tolist()}, p={self.modulus.p})"

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: "RMatrix"):
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"mixed moduli: {self.modulus.p} vs {other.modulus.p}")

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._check(other)
        return RMatrix((self.data + other.data) % self.modulus.p, self.modulus, _trusted=True)

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        self._check(other)
        return RMatrix((self.data - other.data) % self.modulus.p, self.modulus, _trusted=True)

    def __neg__(self) -> "RMatrix":
        return RMatrix((-self.data) % self.modulus.p, self.modulus, _trusted=True)

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        # Componentwise on planes: (A_a + v A_b)(B_a + v B_b)
        #   = A_a B_a + v (A_a B_b + A_b B_a + A_b B_b)
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        p = self.modulus.p
        aa, ab = self.data[:, :, 0], self.data[:, :, 1]
        ba, bb = other.data[:, :, 0], other.data[:, :, 1]
        ra = (aa @ ba) % p
        rb = (aa @ bb + ab @ ba + ab @ bb) % p
        return RMatrix(np.stack([ra, rb], axis=-1), self.modulus, _trusted=True)

    def scaled(self, c: RScalar) -> "RMatrix":
        """Entrywise multiplication by a ring scalar."""
        if c.modulus != self.modulus:
            raise ModulusMismatch(f"mixed moduli: {c.modulus.p} vs {self.modulus.p}")
        p = self.modulus.p
        a, b = self.data[:, :, 0], self.data[:, :, 1]
        ra = (c.a * a) % p
        rb = (c.a * b + c.b * a + c.b * b) % p
        return RMatrix(np.stack([ra, rb], axis=-1), self.modulus, _trusted=True)

    def transpose(self) -> "RMatrix":
        return RMatrix(self.data.transpose(1, 0, 2).copy(), self.modulus, _trusted=True)

    @property
    def T(self) -> "RMatrix":
        return self.transpose()

    # ------------------------------------------------------------------
    # structure

    def permute_columns(self, perm: Permutation) -> "RMatrix":
        if len(perm) != self.ncols:
            raise ValueError(f"permutation of length {len(perm)} on {self.ncols} columns")
        return RMatrix(self.data[:, list(perm.images), :], self.modulus, _trusted=True)

    def stacked_with(self, other: "RMatrix") -> "RMatrix":
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError(f"column counts differ: {self.ncols} vs {other.ncols}")
        return RMatrix(np.concatenate([self.data, other.data]), self.modulus, _trusted=True)
