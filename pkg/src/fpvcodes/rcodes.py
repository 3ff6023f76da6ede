"""Linear codes over R = F_p + vF_p: decomposition, standard form, duality.

Because v and 1 - v are orthogonal idempotents, every R-linear code C
splits as C = v*C2 + (1-v)*C1 where C1 is the image of C under v -> 0
and C2 its image under v -> 1, and the two summands meet only in 0.
The pair (C1, C2) determines C completely, so that is what RLinearCode
stores.  All structural operations (duals, membership, sizes) reduce to
the component codes; the brute-force oracles in this module deliberately
avoid that reduction so they can serve as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fpcodes import CODEWORD_BUDGET, BudgetExceeded, FpLinearCode
from .linalg import FpMatrix, Permutation, RMatrix, _leading_columns
from .primefield import ModulusMismatch, PrimeModulus


@dataclass(frozen=True)
class TypeTriple:
    """Block dimensions (k1, k2, k3) of a standard-form generator matrix.

    k1 counts unit pivot rows, k2 the v-rows, k3 the (1-v)-rows; the code
    size is p**(2*k1 + k2 + k3).
    """

    k1: int
    k2: int
    k3: int

    def __iter__(self):
        return iter((self.k1, self.k2, self.k3))


class RLinearCode:
    """An R-submodule of R^n, stored as its component pair (c1, c2)."""

    __slots__ = ("n", "modulus", "c1", "c2")

    def __init__(self, c1: FpLinearCode, c2: FpLinearCode):
        if c1.modulus != c2.modulus:
            raise ModulusMismatch(f"mixed moduli: {c1.modulus.p} vs {c2.modulus.p}")
        if c1.n != c2.n:
            raise ValueError(f"component lengths differ: {c1.n} vs {c2.n}")
        self.n = c1.n
        self.modulus = c1.modulus
        self.c1 = c1
        self.c2 = c2

    @classmethod
    def from_components(cls, c1: FpLinearCode, c2: FpLinearCode) -> "RLinearCode":
        return cls(c1, c2)

    @classmethod
    def from_generator(cls, generator: RMatrix) -> "RLinearCode":
        """The R-row space of generator.

        Since R = F_p x F_p through evaluation at v = 0 and v = 1, and the
        coefficients on the two sides move independently, the row space is
        exactly the set of vectors whose v=0 part lies in the row space of
        the v=0 image and whose v=1 part lies in that of the v=1 image.
        """
        c1 = FpLinearCode(generator.at_v0())
        c2 = FpLinearCode(generator.at_v1())
        return cls(c1, c2)

    @classmethod
    def zero(cls, n: int, modulus: PrimeModulus) -> "RLinearCode":
        return cls(FpLinearCode.zero(n, modulus), FpLinearCode.zero(n, modulus))

    # ------------------------------------------------------------------
    # basic structure

    def components(self) -> tuple[FpLinearCode, FpLinearCode]:
        """(image under v -> 0, image under v -> 1)."""
        return (self.c1, self.c2)

    @property
    def dim_pair(self) -> tuple[int, int]:
        return (self.c1.dim, self.c2.dim)

    @property
    def size(self) -> int:
        return self.modulus.p ** (self.c1.dim + self.c2.dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RLinearCode):
            return NotImplemented
        return self.n == other.n and self.c1 == other.c1 and self.c2 == other.c2

    def __hash__(self) -> int:
        return hash((self.n, self.c1, self.c2))

    def __repr__(self) -> str:
        return (
            f"RLinearCode(n={self.n}, p={self.modulus.p}, "
            f"dims=({self.c1.dim}, {self.c2.dim}))"
        )

    def generator_matrix(self) -> RMatrix:
        """Canonical generator: (1-v)-multiples of the c1 basis, then
        v-multiples of the c2 basis.  (1-v)x has planes (x, -x); v*y has
        planes (0, y)."""
        p = self.modulus.p
        b1 = self.c1.basis.data
        b2 = self.c2.basis.data
        a = np.concatenate([b1, np.zeros_like(b2)])
        b = np.concatenate([(-b1) % p, b2])
        return RMatrix(np.stack([a, b], axis=-1), self.modulus, _trusted=True)

    def contains(self, word) -> bool:
        """Membership: the v=0 part must lie in c1 and the v=1 part in c2."""
        planes = _as_planes(word, self.n)
        p = self.modulus.p
        bar = planes[:, 0] % p
        hat = (planes[:, 0] + planes[:, 1]) % p
        return self.c1.contains(bar) and self.c2.contains(hat)

    def codeword_planes(self, budget: int = CODEWORD_BUDGET) -> np.ndarray:
        """All codewords as an (size, n, 2) array of (a, b) planes.

        Codewords are v*w2 + (1-v)*w1 over all component pairs; order is
        w1 outer, w2 inner, each in coefficient-lexicographic order.
        """
        if self.size > budget:
            raise BudgetExceeded(f"{self.size} codewords exceeds budget {budget}")
        p = self.modulus.p
        w1 = self.c1.codeword_matrix(budget)
        w2 = self.c2.codeword_matrix(budget)
        bar = np.repeat(w1, w2.shape[0], axis=0)
        hat = np.tile(w2, (w1.shape[0], 1))
        return np.stack([bar, (hat - bar) % p], axis=-1)

    def permute_columns(self, perm: Permutation) -> "RLinearCode":
        c1 = FpLinearCode(self.c1.basis.permute_columns(perm))
        c2 = FpLinearCode(self.c2.basis.permute_columns(perm))
        return RLinearCode(c1, c2)

    # ------------------------------------------------------------------
    # duality

    def dual(self) -> "RLinearCode":
        """The dual code; its components are the component duals."""
        return RLinearCode(self.c1.dual(), self.c2.dual())

    def is_self_orthogonal(self) -> bool:
        """Zero inner product between all pairs of generator rows."""
        g = self.generator_matrix()
        return (g @ g.T).is_zero()

    def is_self_dual(self) -> bool:
        """Self-dual iff both component codes are self-dual."""
        return self.c1.is_self_dual() and self.c2.is_self_dual()

    def is_self_dual_via_type(self) -> bool:
        """The standard-form criterion: self-orthogonal, n = 2(k1 + k2),
        and k2 = k3.  Must always agree with is_self_dual."""
        sf = self.standard_form()
        k1, k2, k3 = sf.type_triple
        return self.is_self_orthogonal() and self.n == 2 * (k1 + k2) and k2 == k3

    # ------------------------------------------------------------------
    # Gray image

    def gray_image(self) -> FpLinearCode:
        """The length-2n F_p code {(word at v=0 | word at v=1)}.

        Coordinatewise the evaluation pair is a bijection R -> F_p^2, and
        the two halves move independently, so the image is the direct sum
        of c1 on the first n coordinates and c2 on the last n.
        """
        n = self.n
        b1 = self.c1.basis.data
        b2 = self.c2.basis.data
        top = np.concatenate([b1, np.zeros((b1.shape[0], n), np.int64)], axis=1)
        bot = np.concatenate([np.zeros((b2.shape[0], n), np.int64), b2], axis=1)
        arr = np.concatenate([top, bot])
        pivots = self.c1.pivots + tuple(n + c for c in self.c2.pivots)
        return FpLinearCode._from_rref(arr, pivots, self.modulus, 2 * n)

    # ------------------------------------------------------------------
    # standard form

    def type_triple(self) -> TypeTriple:
        return self.standard_form().type_triple

    def standard_form(self) -> "StandardForm":
        return standard_form(self)

    def parity_check(self) -> tuple[RMatrix, Permutation]:
        """Convenience: the standard form's parity check and permutation."""
        sf = self.standard_form()
        return sf.parity_check(), sf.perm


@dataclass(frozen=True)
class StandardForm:
    """A standard-form generator matrix for a permuted copy of a code.

    matrix generates code.permute_columns(perm); its rows come in three
    bands: k1 rows with a unit pivot block I, k2 rows that are v times an
    F_p matrix with pivot block I, and k3 rows that are (1-v) times one.
    """

    matrix: RMatrix
    type_triple: TypeTriple
    perm: Permutation
    modulus: PrimeModulus
    n: int

    @property
    def rank_total(self) -> int:
        k1, k2, k3 = self.type_triple
        return k1 + k2 + k3

    def row_bands(self) -> tuple[RMatrix, RMatrix, RMatrix]:
        """(unit-pivot rows, v rows, (1-v) rows) of the matrix."""
        k1, k2, k3 = self.type_triple
        d = self.matrix.data
        m = self.modulus
        return (
            RMatrix(d[:k1], m, _trusted=True),
            RMatrix(d[k1 : k1 + k2], m, _trusted=True),
            RMatrix(d[k1 + k2 :], m, _trusted=True),
        )

    def parity_check(self) -> RMatrix:
        """A generator matrix for the dual of the permuted code.

        Satisfies H @ matrix.T == 0, and its row space has size
        p**(2(n-k) + k2 + k3), which by the Frobenius counting identity
        |C| * |C_dual| = p**(2n) pins it to the whole dual.
        """
        return _parity_check(self)

    def blocks(self) -> dict[str, FpMatrix]:
        """Named F_p sub-matrices of the standard form.

        For odd p the unit-pivot rows look like
        (I | (1-v)B1 | vA1 | vD1 + (1-v)D2), the v rows like
        (0 | vI | 0 | vC1), and the (1-v) rows like (0 | 0 | (1-v)I |
        (1-v)C2); keys "B1", "A1", "D1", "D2", "C1", "C2".  For p = 2 the
        bands are (I | A | B | D1 + vD2), (0 | vI | 0 | vC1) and
        (0 | 0 | (1+v)I | (1+v)E); keys "A", "B", "D1", "D2", "C1", "E".
        """
        k1, k2, k3 = self.type_triple
        k = k1 + k2 + k3
        m = self.modulus
        p = m.p
        d = self.matrix.data
        bar = d[:, :, 0]
        hat = (d[:, :, 0] + d[:, :, 1]) % p

        def fp(arr) -> FpMatrix:
            return FpMatrix(np.ascontiguousarray(arr), m, _trusted=True)

        if p == 2:
            return {
                "A": fp(bar[:k1, k1 : k1 + k2]),
                "B": fp(bar[:k1, k1 + k2 : k]),
                "D1": fp(bar[:k1, k:]),
                "D2": fp(d[:k1, k:, 1]),
                "C1": fp(hat[k1 : k1 + k2, k:]),
                "E": fp(bar[k1 + k2 : k, k:]),
            }
        return {
            "B1": fp(bar[:k1, k1 : k1 + k2]),
            "A1": fp(hat[:k1, k1 + k2 : k]),
            "D1": fp(hat[:k1, k:]),
            "D2": fp(bar[:k1, k:]),
            "C1": fp(hat[k1 : k1 + k2, k:]),
            "C2": fp(bar[k1 + k2 : k, k:]),
        }


def _as_planes(word, n: int) -> np.ndarray:
    """Coerce an RMatrix row / (n, 2) array / list of pairs to (n, 2) int64."""
    if isinstance(word, RMatrix):
        if word.nrows != 1:
            raise ValueError(f"expected a single row, got {word.nrows}")
        return word.data[0].copy()
    arr = np.asarray(word, dtype=np.int64)
    if arr.shape != (n, 2):
        raise ValueError(f"expected shape ({n}, 2), got {arr.shape}")
    return arr


def _support(arr: np.ndarray) -> set[int]:
    return set(int(c) for c in np.nonzero(arr.any(axis=0))[0])


def _vanishing_on(code: FpLinearCode, cols: list[int]) -> FpMatrix:
    """RREF basis of the subcode of code vanishing on the given columns."""
    basis = code.basis
    if not cols:
        return basis
    restriction = basis.take_columns(cols)
    # Coefficient vectors t with t @ restriction == 0 form the kernel of
    # restriction.T acting on the right.
    coeffs = restriction.T.kernel_basis()
    sub = coeffs @ basis
    reduced, rank = sub.rref()
    assert rank == coeffs.nrows
    return reduced


def _solve_member(code: FpLinearCode, cols: list[int], values: np.ndarray) -> np.ndarray:
    """The unique codeword taking the given values on cols.

    Requires the restriction of the code to cols to be bijective, i.e.
    len(cols) == dim and the restricted basis square invertible.
    """
    sub = code.basis.take_columns(cols)
    t = sub.solve_row(values)
    return (t @ code.basis.data) % code.modulus.p


def standard_form(code: RLinearCode) -> StandardForm:
    """Deterministic standard form of an R-linear code.

    Stage 1 greedily pairs columns where both residual components are
    simultaneously supported; each such column carries a unit pivot.  Once
    no shared support remains, the leftover subcodes W1 (in c1) and W2
    (in c2) have disjoint supports, which is exactly what the block shape
    needs.  Stage 2 solves for the unit-pivot rows; stage 3 assembles the
    permuted matrix.
    """
    p = code.modulus.p
    n = code.n
    modulus = code.modulus

    # ---- stage 1: pair unit-pivot columns
    j1: list[int] = []
    while True:
        w1 = _vanishing_on(code.c1, j1)
        w2 = _vanishing_on(code.c2, j1)
        shared = _support(w1.data) & _support(w2.data)
        if not shared:
            break
        j1.append(min(shared))
    k1 = len(j1)
    k2 = w2.nrows
    k3 = w1.nrows

    j2 = list(_leading_columns(w2.data))
    j3 = list(_leading_columns(w1.data))
    tail_a = sorted(_support(w2.data) - set(j2))
    tail_b = sorted(_support(w1.data) - set(j3))
    used = set(j1) | set(j2) | set(j3) | set(tail_a) | set(tail_b)
    rest = [c for c in range(n) if c not in used]
    order = j1 + j2 + j3 + tail_a + tail_b + rest
    perm = Permutation(tuple(order))

    # ---- stage 2: unit-pivot rows
    # x_i is the unique c1 word with e_i on j1 and 0 on j3; y_i the unique
    # c2 word with e_i on j1 and 0 on j2.  (The restrictions of c1 to
    # j1 + j3 and of c2 to j1 + j2 are bijective.)
    x_rows = np.zeros((k1, n), np.int64)
    y_rows = np.zeros((k1, n), np.int64)
    for i in range(k1):
        target = np.zeros(k1 + k3, np.int64)
        target[i] = 1
        x_rows[i] = _solve_member(code.c1, j1 + j3, target)
        target = np.zeros(k1 + k2, np.int64)
        target[i] = 1
        y_rows[i] = _solve_member(code.c2, j1 + j2, target)

    if p == 2 and k1 > 0:
        # Characteristic-2 convention: the pivot rows carry plain (not
        # idempotent-multiplied) blocks on the j2 and j3 columns, so the
        # two evaluations must agree there.  Adjust y by the W2 word
        # matching x on j2, then x by the W1 word matching y on j3; the
        # adjustments live on disjoint supports, so neither step disturbs
        # the other.
        if k2 > 0:
            y_rows = (y_rows + x_rows[:, j2] @ w2.data) % p
        if k3 > 0:
            x_rows = (x_rows + y_rows[:, j3] @ w1.data) % p

    # ---- stage 3: assemble in permuted column order
    xp = x_rows[:, order]
    yp = y_rows[:, order]
    w1p = w1.data[:, order]
    w2p = w2.data[:, order]

    a_plane = np.concatenate([xp, np.zeros_like(w2p), w1p])
    b_plane = np.concatenate([(yp - xp) % p, w2p, (-w1p) % p])
    matrix = RMatrix(np.stack([a_plane, b_plane], axis=-1), modulus, _trusted=True)

    assert code.c1.dim == k1 + k3 and code.c2.dim == k1 + k2
    return StandardForm(
        matrix=matrix,
        type_triple=TypeTriple(k1, k2, k3),
        perm=perm,
        modulus=modulus,
        n=n,
    )


def _parity_check(sf: StandardForm) -> RMatrix:
    """Parity check matrix from the standard-form blocks.

    Column blocks are (k1 | k2 | k3 | n-k); every needed block is a slice
    of the standard-form matrix's evaluation planes.
    """
    k1, k2, k3 = sf.type_triple
    k = k1 + k2 + k3
    n = sf.n
    t = n - k
    p = sf.modulus.p
    bar = sf.matrix.data[:, :, 0]
    hat = (sf.matrix.data[:, :, 0] + sf.matrix.data[:, :, 1]) % p

    ha = np.zeros((t + k3 + k2, n), np.int64)
    hb = np.zeros((t + k3 + k2, n), np.int64)

    if p != 2:
        # Pivot-row blocks: on j2 the rows look like (1-v)B1, on j3 like
        # v*A1, on the tail like v*D1 + (1-v)*D2; the v rows carry v*C1
        # and the (1-v) rows carry (1-v)*C2 on the tail.
        b1 = bar[:k1, k1 : k1 + k2]
        a1 = hat[:k1, k1 + k2 : k]
        d2 = bar[:k1, k:]
        d1 = hat[:k1, k:]
        c1blk = hat[k1 : k1 + k2, k:]
        c2blk = bar[k1 + k2 : k, k:]

        e1 = (a1 @ c2blk - d1) % p  # evaluation at v=1 of the top-left block
        e2 = (b1 @ c1blk - d2) % p  # evaluation at v=0
        ha[:t, :k1] = e2.T
        hb[:t, :k1] = (e1.T - e2.T) % p
        ha[:t, k1 : k1 + k2] = (-c1blk.T) % p
        ha[:t, k1 + k2 : k] = (-c2blk.T) % p
        ha[:t, k:] = np.eye(t, dtype=np.int64)

        # k3 rows: v * (-A1.T | 0 | I | 0)
        hb[t : t + k3, :k1] = (-a1.T) % p
        hb[t : t + k3, k1 + k2 : k] = np.eye(k3, dtype=np.int64)

        # k2 rows: (1-v) * (-B1.T | I | 0 | 0)
        block = np.zeros((k2, n), np.int64)
        block[:, :k1] = (-b1.T) % p
        block[:, k1 : k1 + k2] = np.eye(k2, dtype=np.int64)
        ha[t + k3 :] = block
        hb[t + k3 :] = (-block) % p
    else:
        # Characteristic 2: pivot rows carry plain A on j2 and plain B on
        # j3, D1 + v*D2 on the tail; v rows carry v*C1 and (1+v) rows
        # (1+v)*E on the tail.
        a_blk = bar[:k1, k1 : k1 + k2]
        b_blk = bar[:k1, k1 + k2 : k]
        d1 = bar[:k1, k:]
        d2 = sf.matrix.data[:k1, k:, 1]
        c1blk = hat[k1 : k1 + k2, k:]
        e_blk = bar[k1 + k2 : k, k:]

        left = (e_blk.T @ b_blk.T + c1blk.T @ a_blk.T) % 2
        ha[:t, :k1] = (left + d1.T) % 2
        hb[:t, :k1] = d2.T
        ha[:t, k1 : k1 + k2] = c1blk.T
        ha[:t, k1 + k2 : k] = e_blk.T
        ha[:t, k:] = np.eye(t, dtype=np.int64)

        # k3 rows: v * (B.T | 0 | I | 0)
        hb[t : t + k3, :k1] = b_blk.T
        hb[t : t + k3, k1 + k2 : k] = np.eye(k3, dtype=np.int64)

        # k2 rows: (1+v) * (A.T | I | 0 | 0)
        block = np.zeros((k2, n), np.int64)
        block[:, :k1] = a_blk.T
        block[:, k1 : k1 + k2] = np.eye(k2, dtype=np.int64)
        ha[t + k3 :] = block
        hb[t + k3 :] = block

    return RMatrix(np.stack([ha, hb], axis=-1), sf.modulus, _trusted=True)


# ----------------------------------------------------------------------
# brute-force oracles
#
# These deliberately work from enumerated word sets, not from the
# component representation, so they can confirm it independently.


def span_closure_words(generator: RMatrix, budget: int = CODEWORD_BUDGET) -> np.ndarray:
    """Every R-linear combination of the generator rows, deduplicated.

    Returns a (m, 2n) int64 array, each row the (a-part | b-part) of one
    word, sorted lexicographically.  Cost is p**(2*rows) combinations.
    """
    p = generator.modulus.p
    rows = generator.nrows
    n = generator.ncols
    combos = p ** (2 * rows)
    if combos > budget:
        raise BudgetExceeded(f"{combos} coefficient tuples exceeds budget {budget}")
    idx = np.arange(combos)
    ca = np.empty((combos, rows), np.int64)
    cb = np.empty((combos, rows), np.int64)
    for r in range(rows):
        ca[:, r] = (idx // p ** (2 * rows - 1 - 2 * r)) % p
        cb[:, r] = (idx // p ** (2 * rows - 2 - 2 * r)) % p
    ga = generator.data[:, :, 0]
    gb = generator.data[:, :, 1]
    ra = (ca @ ga) % p
    rb = (ca @ gb + cb @ ga + cb @ gb) % p
    words = np.concatenate([ra, rb], axis=1)
    return np.unique(words, axis=0)


def _digit_matrix(count: int, width: int, p: int) -> np.ndarray:
    """Rows are the base-p digit expansions of 0..count-1 (width digits)."""
    idx = np.arange(count)
    out = np.empty((count, width), np.int64)
    for c in range(width):
        out[:, c] = (idx // p ** (width - 1 - c)) % p
    return out


def torsion_codes_oracle(
    code: RLinearCode, budget: int = CODEWORD_BUDGET
) -> tuple[FpLinearCode, FpLinearCode]:
    """Brute-force (image at v=0 of (C:(1-v)), image at v=1 of (C:v)).

    (C:a) = {x : a*x in C}.  Membership is tested against the full word
    set enumerated by R-span closure of the generator matrix, so this is
    an oracle for the component representation, not a consumer of it.
    Expected to equal components() exactly.
    """
    p = code.modulus.p
    n = code.n
    if p**n > budget:
        raise BudgetExceeded(f"{p**n} candidate vectors exceeds budget {budget}")
    words = span_closure_words(code.generator_matrix(), budget)
    wordset = set(row.tobytes() for row in words)

    # v*(r + v*q) depends only on the v=1 value t = r + q: planes (0, t).
    # (1-v)*(r + v*q) depends only on the v=0 value t = r: planes (t, -t).
    t_all = _digit_matrix(p**n, n, p)
    zeros = np.zeros_like(t_all)
    v_mult = np.concatenate([zeros, t_all], axis=1)
    omv_mult = np.concatenate([t_all, (-t_all) % p], axis=1)

    hat_members = [t_all[i] for i in range(t_all.shape[0]) if v_mult[i].tobytes() in wordset]
    bar_members = [t_all[i] for i in range(t_all.shape[0]) if omv_mult[i].tobytes() in wordset]
    hat_code = FpLinearCode(FpMatrix.from_rows(hat_members, code.modulus, ncols=n))
    bar_code = FpLinearCode(FpMatrix.from_rows(bar_members, code.modulus, ncols=n))
    return bar_code, hat_code


def dual_words_bruteforce(code: RLinearCode, budget: int = CODEWORD_BUDGET) -> np.ndarray:
    """All of R^n tested for orthogonality against every codeword.

    Returns the dual word set as a sorted (m, 2n) array in the same
    layout as span_closure_words.  Cost is p**(2n) candidates times
    |C| inner products, evaluated in chunks.
    """
    p = code.modulus.p
    n = code.n
    cand_count = p ** (2 * n)
    if cand_count > budget:
        raise BudgetExceeded(f"{cand_count} candidate vectors exceeds budget {budget}")
    words = code.codeword_planes(budget)
    ca = np.ascontiguousarray(words[:, :, 0].T, dtype=np.float64)
    cb = np.ascontiguousarray(words[:, :, 1].T, dtype=np.float64)
    cab = ca + cb

    kept = []
    chunk = 1 << 14
    word_batch = 32
    for start in range(0, cand_count, chunk):
        stop = min(start + chunk, cand_count)
        digits = _digit_matrix_range(start, stop, 2 * n, p)
        xa = digits[:, 0::2].astype(np.float64)
        xb = digits[:, 1::2].astype(np.float64)
        # a candidate survives only if orthogonal to every single word;
        # testing the words in batches lets candidates that already failed
        # drop out of the remaining (much larger) product work
        alive = np.arange(digits.shape[0])
        for w0 in range(0, ca.shape[1], word_batch):
            if alive.size == 0:
                break
            ya = ca[:, w0 : w0 + word_batch]
            yb = cb[:, w0 : w0 + word_batch]
            yab = cab[:, w0 : w0 + word_batch]
            # inner product planes: a-part xa.ya, v-part xa.yb + xb.(ya+yb)
            prod_a = xa[alive] @ ya
            prod_b = xa[alive] @ yb + xb[alive] @ yab
            ok = ((prod_a % p) == 0).all(axis=1) & ((prod_b % p) == 0).all(axis=1)
            alive = alive[ok]
        if alive.size:
            sel = digits[alive]
            kept.append(np.concatenate([sel[:, 0::2], sel[:, 1::2]], axis=1))
    out = np.concatenate(kept) if kept else np.zeros((0, 2 * n), np.int64)
    return np.unique(out, axis=0)


def _digit_matrix_range(start: int, stop: int, width: int, p: int) -> np.ndarray:
    idx = np.arange(start, stop)
    out = np.empty((stop - start, width), np.int64)
    for c in range(width):
        out[:, c] = (idx // p ** (width - 1 - c)) % p
    return out


def rcode_word_array(code: RLinearCode, budget: int = CODEWORD_BUDGET) -> np.ndarray:
    """The code's words in the same sorted (m, 2n) layout as the oracles."""
    planes = code.codeword_planes(budget)
    flat = np.concatenate([planes[:, :, 0], planes[:, :, 1]], axis=1)
    return np.unique(flat, axis=0)


# ----------------------------------------------------------------------
# functional aliases matching the operation names used in reports/tests


def rcode_from_generator(generator: RMatrix) -> RLinearCode:
    return RLinearCode.from_generator(generator)


def components(code: RLinearCode) -> tuple[FpLinearCode, FpLinearCode]:
    return code.components()


def dual_r(code: RLinearCode) -> RLinearCode:
    return code.dual()


def is_self_orthogonal_r(code: RLinearCode) -> bool:
    return code.is_self_orthogonal()


def is_self_dual_r(code: RLinearCode) -> bool:
    return code.is_self_dual()


def check_type_condition(code: RLinearCode) -> bool:
    """Self-duality via the standard-form type: self-orthogonal, n = 2(k1+k2), k2 = k3."""
    return code.is_self_dual_via_type()


def parity_check(sf: StandardForm) -> RMatrix:
    return sf.parity_check()


def gray_image(code: RLinearCode) -> FpLinearCode:
    return code.gray_image()
