"""Brute-force ground truth: permutation/tensor-power representations, Young
symmetrizers, irrep extraction from the Schur transform, and Schur-polynomial
characters.

Everything here is dense double-precision linear algebra, independent of the
coefficient formulas used to build the transform, so it can referee them.
Sizes are guarded by d^n <= 4096.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .bases import enumerate_gz, enumerate_paths, gz_to_ssyt
from .partitions import Partition, dim_P, dim_Q
from .schur import SchurUnitary

ORACLE_MAX_DIM = 4096


class ConsistencyError(RuntimeError):
    """An extracted block depended on the index it must be constant over."""


class Permutation:
    """A bijection on 1..n, stored as the image tuple (s(1), ..., s(n))."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.images[other.images[i] - 1] for i in range(self.n))

    @property
    def sign(self) -> int:
        seen = [False] * self.n
        sign = 1
        for i in range(self.n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def identity_permutation(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def transposition(n: int, a: int, b: int) -> Permutation:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(images)


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation(rng.permutation(n) + 1)


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed U(d) sample via QR with phase correction."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    return q * ph


def _guard(n: int, d: int):
    if d**n > ORACLE_MAX_DIM:
        raise ValueError(f"oracle size d^n = {d**n} exceeds {ORACLE_MAX_DIM}")


def _perm_dest(s: Permutation, d: int, n: int) -> np.ndarray:
    """dest[c] = row index of P(s)|c>: tensor factor k moves to slot s(k)."""
    idx = np.arange(d**n)
    digits = np.empty((d**n, n), dtype=np.int64)
    rem = idx
    for k in range(n - 1, -1, -1):
        digits[:, k] = rem % d
        rem = rem // d
    out_digits = np.empty_like(digits)
    for k in range(1, n + 1):
        out_digits[:, s(k) - 1] = digits[:, k - 1]
    dest = np.zeros(d**n, dtype=np.int64)
    for k in range(n):
        dest = dest * d + out_digits[:, k]
    return dest


def perm_matrix(s: Permutation, d: int) -> np.ndarray:
    """P(s) on (C^d)^{tensor n}: |i_1..i_n> -> |i_{s^-1(1)}..i_{s^-1(n)}>."""
    n = s.n
    _guard(n, d)
    dest = _perm_dest(s, d, n)
    out = np.zeros((d**n, d**n))
    out[dest, np.arange(d**n)] = 1.0
    return out


def apply_perm(s: Permutation, d: int, x: np.ndarray) -> np.ndarray:
    """P(s) @ x without materializing the permutation matrix."""
    n = s.n
    dest = _perm_dest(s, d, n)
    out = np.empty_like(x)
    out[dest] = x
    return out


def tensor_power(u: np.ndarray, n: int) -> np.ndarray:
    """Q(U) = U^{tensor n}, in the same basis order as perm_matrix."""
    u = np.asarray(u)
    d = u.shape[0]
    _guard(n, d)
    if u.shape != (d, d) or unitarity_residual(u) > 1e-10:
        raise ValueError("input is not unitary to 1e-10")
    out = np.ones((1, 1), dtype=complex)
    for _ in range(n):
        out = np.kron(out, u)
    return out


def apply_tensor_power(u: np.ndarray, n: int, x: np.ndarray) -> np.ndarray:
    """U^{tensor n} @ x for x of shape (d^n, m), grouped-axis matmuls.

    Axes are consumed in groups of g (with d^g <= 64) via broadcast matmul,
    so the data is traversed about n/g times and never transposed.
    """
    d = u.shape[0]
    m = x.shape[1]
    g = 1
    while d ** (g + 1) <= 64 and g + 1 <= n:
        g += 1
    t = np.asarray(x, dtype=complex)
    k = 0
    while k < n:
        step = min(g, n - k)
        block = np.ones((1, 1), dtype=complex)
        for _ in range(step):
            block = np.kron(block, u)
        pre = d**k
        post = d ** (n - k - step) * m
        t = np.matmul(block, t.reshape(pre, d**step, post))
        k += step
    return t.reshape(d**n, m)


def unitarity_residual(u: np.ndarray) -> float:
    eye = np.eye(u.shape[0])
    return float(np.max(np.abs(u.conj().T @ u - eye)))


@dataclass(frozen=True)
class StandardTableauFilling:
    """Entries 1..n filling shape lambda, increasing along rows and columns."""

    shape: Partition
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise ValueError("rows do not match shape")
        n = self.shape.size
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if c > 0 and row[c - 1] >= v:
                    raise ValueError("rows must increase left to right")
                if r > 0 and rows[r - 1][c] >= v:
                    raise ValueError("columns must increase top to bottom")

    @property
    def n(self) -> int:
        return self.shape.size


def standard_fillings(lam: Partition) -> list[StandardTableauFilling]:
    """All standard tableaux of shape lambda (entry k = box added at step k)."""
    out = []
    for path in enumerate_paths(lam):
        rows = [[0] * lam.part(r) for r in range(1, len(lam) + 1)]
        for k in range(1, path.n + 1):
            small = path.level(k - 1) if k > 1 else Partition()
            big = path.level(k)
            r = next(i for i in range(1, len(big) + 1) if big.part(i) != small.part(i))
            rows[r - 1][big.part(r) - 1] = k
        out.append(StandardTableauFilling(lam, tuple(tuple(r) for r in rows)))
    return out


def _row_group(t: StandardTableauFilling):
    """All permutations preserving each row of t setwise, as image tuples."""
    n = t.n
    groups = [row for row in t.rows if len(row) > 1]
    base = list(range(1, n + 1))
    for combo in itertools.product(
        *(itertools.permutations(row) for row in groups)
    ):
        images = base[:]
        for row, perm in zip(groups, combo):
            for src, dst in zip(row, perm):
                images[src - 1] = dst
        yield Permutation(images)


def _col_group(t: StandardTableauFilling):
    cols = []
    for c in range(t.shape.part(1)):
        col = [row[c] for row in t.rows if len(row) > c]
        if len(col) > 1:
            cols.append(col)
    n = t.n
    base = list(range(1, n + 1))
    for combo in itertools.product(*(itertools.permutations(col) for col in cols)):
        images = base[:]
        for col, perm in zip(cols, combo):
            for src, dst in zip(col, perm):
                images[src - 1] = dst
        yield Permutation(images)


def young_symmetrizer(t: StandardTableauFilling, d: int) -> np.ndarray:
    """(dim P / n!) * (sum_col sgn(c) P(c)) * (sum_row P(r)); a projector
    whose support carries a copy of Q_lambda^d."""
    n = t.n
    _guard(n, d)
    dim = d**n
    cols = np.arange(dim)
    rsum = np.zeros((dim, dim))
    for r in _row_group(t):
        rsum[_perm_dest(r, d, n), cols] += 1.0
    csum = np.zeros((dim, dim))
    for c in _col_group(t):
        csum[_perm_dest(c, d, n), cols] += c.sign
    return (dim_P(t.shape) / math.factorial(n)) * (csum @ rsum)


def _block_conjugate(schur: SchurUnitary, lam: Partition, apply_a) -> np.ndarray:
    s_rows = schur.block_rows(lam)
    return s_rows @ apply_a(s_rows.T.copy())


def extract_irrep(schur: SchurUnitary, lam: Partition, u: np.ndarray) -> np.ndarray:
    """Read q_lambda(U) off the conjugated lambda block at a fixed path index.

    Verifies the result is independent of which path index is held fixed
    (to 1e-9); dependence signals a labeling/convention bug.
    """
    dq, dp = dim_Q(lam, schur.d), dim_P(lam)
    w = _block_conjugate(
        schur, lam, lambda x: apply_tensor_power(u, schur.n, x)
    ).reshape(dq, dp, dq, dp)
    out = w[:, 0, :, 0]
    for p in range(1, dp):
        if np.max(np.abs(w[:, p, :, p] - out)) > 1e-9:
            raise ConsistencyError(f"q-block of {lam} depends on the fixed p index")
    return out


def extract_perm_irrep(schur: SchurUnitary, lam: Partition, s: Permutation) -> np.ndarray:
    """Read p_lambda(s) off the conjugated lambda block at a fixed GZ index."""
    dq, dp = dim_Q(lam, schur.d), dim_P(lam)
    w = _block_conjugate(
        schur, lam, lambda x: apply_perm(s, schur.d, x)
    ).reshape(dq, dp, dq, dp)
    out = w[0, :, 0, :]
    for q in range(1, dq):
        if np.max(np.abs(w[q, :, q, :] - out)) > 1e-9:
            raise ConsistencyError(f"p-block of {lam} depends on the fixed q index")
    return out


def schur_polynomial(lam: Partition, x) -> complex:
    """s_lambda(x_1..x_d) as the monomial sum over semistandard tableaux."""
    x = list(x)
    d = len(x)
    if len(lam) > d:
        raise ValueError(f"lambda={lam} needs more than {d} variables")
    total = 0.0 + 0.0j
    for pattern in enumerate_gz(lam, d):
        term = 1.0 + 0.0j
        for row in gz_to_ssyt(pattern):
            for entry in row:
                term *= x[entry - 1]
        total += term
    return total


# ---------------------------------------------------------------------------
# Residual report used by `schurkit verify` and the acceptance suite.


def offdiag_block_mass(schur: SchurUnitary, w: np.ndarray) -> float:
    """Frobenius norm of w outside the diagonal lambda blocks.

    Summed directly over the off-block entries (a norm difference would lose
    the answer to float cancellation).
    """
    off = w.copy()
    for _, start, dq, dp in schur.blocks:
        off[start : start + dq * dp, start : start + dq * dp] = 0.0
    return float(np.linalg.norm(off))


def conjugate_by_schur(
    schur: SchurUnitary, u: np.ndarray | None = None, s: Permutation | None = None
) -> np.ndarray:
    """W = U_Sch (U^{tensor n} P(s)) U_Sch^dag, with either factor optional.

    The right factor is applied axis-by-axis; the left multiplication by the
    (real) Schur matrix runs as real BLAS products on the split parts.
    """
    m = schur.matrix
    c = m.T.copy()
    if s is not None:
        c = apply_perm(s, schur.d, c)
    if u is not None:
        c = apply_tensor_power(u, schur.n, c)
    if np.iscomplexobj(c):
        # Contiguous copies before the products: BLAS refuses strided
        # real/imag views and numpy would fall back to a slow loop.
        re = m @ np.ascontiguousarray(c.real)
        im = m @ np.ascontiguousarray(c.imag)
        return re + 1j * im
    return m @ c


def perm_block_residual(pblk: np.ndarray) -> float:
    """Max deviation of a conjugated-P(s) block (dq, dp, dq, dp) from
    I_q (x) p(s), with p(s) read off the first diagonal q slice."""
    dq = pblk.shape[0]
    ref = pblk[0, :, 0, :]
    res = pblk.copy()
    for q in range(dq):
        res[q, :, q, :] -= ref
    return float(np.max(np.abs(res)))


def kron_factor_residual(w: np.ndarray, dq: int, dp: int) -> float:
    """Relative distance of a (dq*dp) square block from a q (x) p product."""
    b = w.reshape(dq, dp, dq, dp).transpose(0, 2, 1, 3).reshape(dq * dq, dp * dp)
    svals = np.linalg.svd(b, compute_uv=False)
    total = float(np.sum(svals**2))
    if total == 0.0:
        return 0.0
    # Sum the tail directly; total - svals[0]**2 would cancel to noise.
    return math.sqrt(float(np.sum(svals[1:] ** 2)) / total)


def verify_report(n: int, d: int, trials: int, seed: int) -> dict:
    """Residual summary for (n, d): unitarity, block structure, characters.

    Keys: unitarity, max_off_mass, max_factor_residual, max_q_constancy,
    max_char_residual, ok (all within the spec tolerances).
    """
    from .schur import schur_unitary

    rng = np.random.default_rng(seed)
    schur = schur_unitary(n, d)
    m = schur.matrix
    unit = float(np.max(np.abs(m @ m.T - np.eye(m.shape[0]))))

    max_off = 0.0
    max_factor = 0.0
    max_qconst = 0.0
    max_char = 0.0
    lams = [lam for lam, *_ in schur.blocks]
    for _ in range(trials):
        u = haar_unitary(d, rng)
        s = random_permutation(n, rng)
        w = conjugate_by_schur(schur, u=u, s=s)
        max_off = max(max_off, offdiag_block_mass(schur, w))
        wp = conjugate_by_schur(schur, s=s)
        max_off = max(max_off, offdiag_block_mass(schur, wp))
        for lam, start, dq, dp in schur.blocks:
            blk = w[start : start + dq * dp, start : start + dq * dp]
            max_factor = max(max_factor, kron_factor_residual(blk, dq, dp))
            pblk = wp[start : start + dq * dp, start : start + dq * dp].reshape(
                dq, dp, dq, dp
            )
            max_qconst = max(max_qconst, perm_block_residual(pblk))
        eig = np.linalg.eigvals(u)
        for lam in lams:
            tr = np.trace(extract_irrep(schur, lam, u))
            ref = schur_polynomial(lam, eig)
            max_char = max(max_char, abs(tr - ref))
    return {
        "n": n,
        "d": d,
        "trials": trials,
        "seed": seed,
        "unitarity": unit,
        "max_off_mass": max_off,
        "max_factor_residual": max_factor,
        "max_q_constancy": max_qconst,
        "max_char_residual": max_char,
        "ok": bool(
            unit < 1e-12
            and max_off < 1e-10
            and max_factor < 1e-10
            and max_qconst < 1e-10
            and max_char < 1e-9
        ),
    }
