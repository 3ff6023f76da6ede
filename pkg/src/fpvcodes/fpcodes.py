"""Linear codes over F_p: canonical bases, duals, enumeration, census.

A code is stored by the row-reduced echelon basis of its row space, which
is unique, so code equality is matrix equality.  The census enumerates
every self-dual code of a given small length by walking all RREF pivot
profiles and all fillings of their free positions; it is the ground-truth
oracle behind the counting and existence results.
"""

from __future__ import annotations

import itertools

import numpy as np

from ._kernels import batch_self_gram_zero
from .linalg import FpMatrix, _leading_columns
from .primefield import ModulusMismatch, PrimeModulus, sqrt_of_minus_one

CODEWORD_BUDGET = 10**7
SUBSPACE_BUDGET = 10**6

_ENUM_CHUNK = 1 << 14


class BudgetExceeded(RuntimeError):
    """An enumeration was refused because it would exceed its budget."""


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


class FpLinearCode:
    """A linear code over F_p, held by its canonical RREF basis."""

    __slots__ = ("n", "modulus", "basis", "pivots")

    def __init__(self, generator: FpMatrix):
        basis, pivots = generator.rref_pivots()
        self.n = generator.ncols
        self.modulus = generator.modulus
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_generator(cls, generator: FpMatrix) -> "FpLinearCode":
        return cls(generator)

    @classmethod
    def _from_rref(cls, arr: np.ndarray, pivots, modulus: PrimeModulus, n: int) -> "FpLinearCode":
        """Trusted constructor: arr must already be an RREF basis without zero rows."""
        self = cls.__new__(cls)
        self.n = n
        self.modulus = modulus
        self.basis = FpMatrix(arr, modulus, _trusted=True)
        self.pivots = tuple(int(c) for c in pivots)
        return self

    @classmethod
    def zero(cls, n: int, modulus: PrimeModulus) -> "FpLinearCode":
        return cls._from_rref(np.zeros((0, n), np.int64), (), modulus, n)

    @classmethod
    def full(cls, n: int, modulus: PrimeModulus) -> "FpLinearCode":
        return cls._from_rref(np.eye(n, dtype=np.int64), tuple(range(n)), modulus, n)

    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def size(self) -> int:
        return self.modulus.p**self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpLinearCode):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        return f"FpLinearCode(n={self.n}, p={self.modulus.p}, dim={self.dim})"

    def contains(self, vector) -> bool:
        """Membership by reduction against the RREF basis."""
        v = np.asarray(vector, dtype=np.int64).reshape(self.n) % self.modulus.p
        p = self.modulus.p
        for i, pc in enumerate(self.pivots):
            if v[pc]:
                v = (v - v[pc] * self.basis.data[i]) % p
        return not v.any()

    def __contains__(self, vector) -> bool:
        return self.contains(vector)

    # ------------------------------------------------------------------
    # duality

    def dual(self) -> "FpLinearCode":
        """The code of all vectors orthogonal to this one."""
        kernel = self.basis.kernel_basis()
        return FpLinearCode._from_rref(
            kernel.data, _leading_columns(kernel.data), self.modulus, self.n
        )

    def is_self_orthogonal(self) -> bool:
        return (self.basis @ self.basis.T).is_zero()

    def is_self_dual(self) -> bool:
        return 2 * self.dim == self.n and self.is_self_orthogonal()

    # ------------------------------------------------------------------
    # enumeration

    def codeword_matrix(self, budget: int = CODEWORD_BUDGET) -> np.ndarray:
        """All p**dim codewords, one per row, in coefficient-lexicographic order.

        The coefficient of the first basis row is the most significant digit.
        """
        p = self.modulus.p
        count = self.size
        if count > budget:
            raise BudgetExceeded(f"{count} codewords exceeds budget {budget}")
        k = self.dim
        out = np.zeros((count, self.n), np.int64)
        if k == 0:
            return out
        idx = np.arange(count)
        coeffs = np.empty((count, k), np.int64)
        for r in range(k):
            coeffs[:, r] = (idx // p ** (k - 1 - r)) % p
        out = (coeffs @ self.basis.data) % p
        return out

    def codewords(self, budget: int = CODEWORD_BUDGET):
        """Iterate the codewords in the same order as codeword_matrix."""
        p = self.modulus.p
        if self.size > budget:
            raise BudgetExceeded(f"{self.size} codewords exceeds budget {budget}")
        for coeffs in itertools.product(range(p), repeat=self.dim):
            yield (np.array(coeffs, np.int64) @ self.basis.data) % p


# ----------------------------------------------------------------------
# seeded constructions


def exists_self_dual_fp(modulus: PrimeModulus, n: int) -> bool:
    """Whether a self-dual code of length n over F_p exists.

    For p = 2 or p = 1 (mod 4) the condition is n even; for p = 3 (mod 4)
    it is n divisible by 4.
    """
    p = modulus.p
    if n < 0:
        raise ValueError(f"negative length {n}")
    if p == 2 or p % 4 == 1:
        return n % 2 == 0
    return n % 4 == 0


def seed_self_dual(modulus: PrimeModulus, n: int) -> FpLinearCode:
    """A concrete self-dual code of length n over F_p.

    For p = 2 or p = 1 (mod 4), uses n/2 blocks (1, c) with c*c = -1.
    For p = 3 (mod 4), uses n/4 blocks ((1,0,a,b),(0,1,-b,a)) with the
    lexicographically smallest (a, b) satisfying a*a + b*b = -1.
    Raises ValueError when no self-dual code of length n exists.
    """
    p = modulus.p
    if not exists_self_dual_fp(modulus, n):
        if n % 2:
            raise ValueError(f"no self-dual code of odd length {n} exists over F_{p}")
        raise ValueError(
            f"no self-dual code of length {n} exists over F_{p}: "
            f"for p = 3 (mod 4) the length must be divisible by 4"
        )
    if p == 2 or p % 4 == 1:
        c = sqrt_of_minus_one(modulus)
        assert c is not None
        rows = np.zeros((n // 2, n), np.int64)
        for i in range(n // 2):
            rows[i, 2 * i] = 1
            rows[i, 2 * i + 1] = c.value
    else:
        pair = None
        for a in range(p):
            for b in range(p):
                if (a * a + b * b) % p == p - 1:
                    pair = (a, b)
                    break
            if pair:
                break
        assert pair is not None
        a, b = pair
        rows = np.zeros((n // 2, n), np.int64)
        for t in range(n // 4):
            r, c0 = 2 * t, 4 * t
            rows[r, c0], rows[r, c0 + 2], rows[r, c0 + 3] = 1, a, b
            rows[r + 1, c0 + 1], rows[r + 1, c0 + 2], rows[r + 1, c0 + 3] = 1, (p - b) % p, a
    code = FpLinearCode(FpMatrix(rows, modulus))
    assert code.is_self_dual()
    return code


# ----------------------------------------------------------------------
# census


def _rref_profile_batches(p: int, n: int, k: int, chunk: int = _ENUM_CHUNK):
    """Yield (pivots, gens) covering every RREF basis matrix of each profile.

    gens has shape (m, k, n); each slice is a distinct full-rank RREF matrix
    with the given pivot columns.  Together over all profiles these are in
    bijection with the k-dimensional subspaces of F_p^n.  Deterministic
    order: pivot profiles lexicographically, then fillings by ascending
    mixed-radix index (first free position most significant).
    """
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        free = [(i, j) for i in range(k) for j in range(n) if j not in pivset and j > pivots[i]]
        nfree = len(free)
        total = p**nfree
        template = np.zeros((k, n), np.int64)
        for i, c in enumerate(pivots):
            template[i, c] = 1
        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            idx = np.arange(start, stop)
            gens = np.repeat(template[None, :, :], stop - start, axis=0)
            for t, (i, j) in enumerate(free):
                gens[:, i, j] = (idx // p ** (nfree - 1 - t)) % p
            yield pivots, gens


def census_self_dual_fp(
    modulus: PrimeModulus, n: int, budget: int = SUBSPACE_BUDGET
) -> list[FpLinearCode]:
    """Every self-dual code of length n over F_p, deduplicated, stable order.

    Walks all RREF matrices of dimension n/2 and keeps the self-orthogonal
    ones.  Refuses (BudgetExceeded) when the subspace count exceeds budget.
    """
    p = modulus.p
    if n % 2 == 1:
        return []
    k = n // 2
    total = gaussian_binomial(n, k, p)
    if total > budget:
        raise BudgetExceeded(
            f"census of [{n}, {k}] subspaces over F_{p} needs {total} candidates"
            f" > budget {budget}"
        )
    out = []
    for pivots, gens in _rref_profile_batches(p, n, k):
        keep = batch_self_gram_zero(gens, p)
        for g in gens[keep]:
            out.append(FpLinearCode._from_rref(g, pivots, modulus, n))
    return out


def all_subspaces(modulus: PrimeModulus, n: int, budget: int = SUBSPACE_BUDGET) -> list[FpLinearCode]:
    """Every subspace of F_p^n of every dimension, in deterministic order."""
    p = modulus.p
    total = sum(gaussian_binomial(n, k, p) for k in range(n + 1))
    if total > budget:
        raise BudgetExceeded(
            f"enumerating all {total} subspaces of F_{p}^{n} exceeds budget {budget}"
        )
    out = []
    for k in range(n + 1):
        for pivots, gens in _rref_profile_batches(p, n, k):
            for g in gens:
                out.append(FpLinearCode._from_rref(g, pivots, modulus, n))
    return out


# ----------------------------------------------------------------------
# functional aliases matching the operation names used in reports/tests


def code_from_generator(generator: FpMatrix) -> FpLinearCode:
    return FpLinearCode.from_generator(generator)


def dual_fp(code: FpLinearCode) -> FpLinearCode:
    return code.dual()


def is_self_orthogonal_fp(code: FpLinearCode) -> bool:
    return code.is_self_orthogonal()


def is_self_dual_fp(code: FpLinearCode) -> bool:
    return code.is_self_dual()


def enumerate_codewords(code: FpLinearCode, budget: int = CODEWORD_BUDGET):
    """Yield every codeword as a length-n int64 vector."""
    return code.codewords(budget)
