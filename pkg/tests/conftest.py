"""Shared brute-force oracles, kept independent of the library internals.

Everything here recomputes combinatorial facts from first principles
(backtracking enumerations, angular-momentum formulas, symmetric tensor
powers) so the package code paths are never their own referee.
"""

from __future__ import annotations

import itertools

import numpy as np


def brute_partitions(d: int, n: int) -> set[tuple[int, ...]]:
    """All nonincreasing positive tuples of <= d parts summing to n."""
    out = set()

    def rec(prefix, remaining, cap, slots):
        if remaining == 0:
            out.add(tuple(prefix))
            return
        if slots == 0:
            return
        for v in range(min(cap, remaining), 0, -1):
            rec(prefix + [v], remaining - v, v, slots - 1)

    rec([], n, n, d)
    if n == 0:
        out.add(())
    return out


def brute_ssyt(shape: tuple[int, ...], d: int) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard fillings of shape with entries in 1..d."""
    rows = [list(range(r)) for r in shape]
    cells = [(r, c) for r, row in enumerate(rows) for c in row]
    fill = [[0] * r for r in shape]
    out = []

    def ok(r, c, v):
        if c > 0 and fill[r][c - 1] > v:
            return False
        if r > 0 and fill[r - 1][c] >= v:
            return False
        return True

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in fill))
            return
        r, c = cells[k]
        for v in range(1, d + 1):
            if ok(r, c, v):
                fill[r][c] = v
                rec(k + 1)
                fill[r][c] = 0

    rec(0)
    return out


def brute_syt(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All standard fillings of shape with 1..n, increasing in rows/columns."""
    n = sum(shape)
    fill = [[0] * r for r in shape]
    out = []

    def rec(v):
        if v > n:
            out.append(tuple(tuple(row) for row in fill))
            return
        for r, width in enumerate(shape):
            c = next((j for j in range(width) if fill[r][j] == 0), None)
            if c is None:
                continue
            if c > 0 and fill[r][c - 1] == 0:
                continue
            if r > 0 and (fill[r - 1][c] == 0):
                continue
            fill[r][c] = v
            rec(v + 1)
            fill[r][c] = 0

    rec(1)
    return out


def cs_reduced_wigner_d2(mu: tuple[int, int], mupp1: int) -> np.ndarray:
    """The 2x2 reduced Wigner matrix at d=2 from the spin-J x spin-1/2
    Clebsch-Gordan table (Condon-Shortley), written in (J, M) variables.

    Rows j = 1, 2 (spin raised/lowered), columns j' = 0, 1. Entries are zero
    when the output state does not exist.
    """
    mu1, mu2 = mu
    jj = (mu1 - mu2) / 2.0  # total spin of the input irrep
    out = np.zeros((2, 2))
    # Column j' = 0: the incoming qubit is spin-down, pattern row fixed.
    m_in = (mupp1 - mu2) - jj
    mm = m_in - 0.5
    if mu2 <= mupp1 <= mu1:
        out[0, 0] = np.sqrt((jj - mm + 0.5) / (2 * jj + 1))  # J + 1/2 branch
        if mu1 > mu2 and abs(mm) <= jj - 0.5:
            out[1, 0] = np.sqrt((jj + mm + 0.5) / (2 * jj + 1))  # J - 1/2
    # Column j' = 1: spin-up qubit, pattern row raised by one.
    if mu2 <= mupp1 - 1 <= mu1:
        m_in = (mupp1 - 1 - mu2) - jj
        mm = m_in + 0.5
        out[0, 1] = np.sqrt((jj + mm + 0.5) / (2 * jj + 1))
        if mu1 > mu2 and abs(mm) <= jj - 0.5:
            out[1, 1] = -np.sqrt((jj - mm + 0.5) / (2 * jj + 1))
    return out


def sym_power_unitary(u: np.ndarray, m: int) -> np.ndarray:
    """Sym^m(U) for U in U(2), in the weight-ordered symmetrized basis.

    Basis vector k (k = 0..m) is the normalized symmetrization of
    |1>^(m-k) |2>^k, so index order matches weight-descending GZ order.
    """
    if m == 0:
        return np.ones((1, 1), dtype=complex)
    dim = 2**m
    basis = np.zeros((dim, m + 1), dtype=complex)
    for bits in itertools.product((0, 1), repeat=m):
        k = sum(bits)
        idx = int("".join(str(b) for b in bits), 2)
        basis[idx, k] += 1.0
    basis /= np.linalg.norm(basis, axis=0, keepdims=True)
    big = np.ones((1, 1), dtype=complex)
    for _ in range(m):
        big = np.kron(big, u)
    return basis.conj().T @ big @ basis


def su2_irrep(u: np.ndarray, a: int, b: int) -> np.ndarray:
    """q_(a,b)(U) = det(U)^b * Sym^(a-b)(U): an independent U(2) irrep."""
    return (np.linalg.det(u) ** b) * sym_power_unitary(u, a - b)


def intertwiner_nullspace(lhs_reps, rhs_reps) -> np.ndarray:
    """Basis of {X : X L_t = R_t X for all t}, via stacked SVD.

    lhs_reps and rhs_reps are equal-length lists of unitary matrices; the
    returned array has orthonormal columns spanning vec(X) solutions.
    """
    rows = []
    for lt, rt in zip(lhs_reps, rhs_reps):
        nr, nc = rt.shape[0], lt.shape[0]
        eye_r = np.eye(nr)
        eye_c = np.eye(nc)
        rows.append(np.kron(lt.T, eye_r) - np.kron(eye_c, rt))
    stack = np.vstack(rows)
    _, svals, vh = np.linalg.svd(stack)
    tol = 1e-8 * svals[0]
    null_dim = sum(1 for s in svals if s < tol) + vh.shape[0] - len(svals)
    return vh[vh.shape[0] - null_dim :].conj().T


def vec(x: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization matching the kron identities above."""
    return x.T.reshape(-1)


def brute_control_pairs(d: int, k: int) -> set[tuple]:
    """Independent census of the reduced-Wigner controls at cascade step k.

    mu runs over diagrams with k boxes in <= d rows, mu' over its own-level
    interlacers, and mu'' = mu' (+ e_j') must interlace some mu + e_j.
    """

    def partitions(total, cap, slots):
        if total == 0:
            yield ()
            return
        if slots == 0:
            return
        for v in range(min(cap, total), 0, -1):
            for rest in partitions(total - v, v, slots - 1):
                yield (v,) + rest

    def inter(mu, lam):
        padded_mu = mu + (0,) * 6
        padded = lam + (0,) * 6
        return all(
            padded[i] >= padded_mu[i] >= padded[i + 1] for i in range(len(padded) - 1)
        )

    pairs = set()
    for mu in partitions(k, k, d):
        ups = []
        for j in range(len(mu) + 1):
            cand = list(mu) + [0] * (j + 1 - len(mu))
            cand[j] += 1
            if all(a >= b for a, b in zip(cand, cand[1:])) and len(
                [c for c in cand if c]
            ) <= d:
                ups.append(tuple(c for c in cand if c))
        candidates = set()
        for up in ups:
            for total in range(0, sum(up) + 1):
                for mupp in partitions(total, total, d - 1):
                    if inter(mupp, up):
                        candidates.add(mupp)
        for mupp in candidates:
            if len(mupp) > d - 1:
                continue
            routes = [mupp]  # j' = 0 uses mu' = mu''
            for jp in range(1, d):
                cand = list(mupp) + [0] * max(0, jp - len(mupp))
                if jp <= len(cand):
                    cand[jp - 1] -= 1
                    if all(v >= 0 for v in cand) and all(
                        a >= b for a, b in zip(cand, cand[1:])
                    ):
                        routes.append(tuple(v for v in cand if v))
            if not any(inter(mup, mu) for mup in routes):
                continue
            if not any(inter(mupp, up) for up in ups):
                continue
            pairs.add((mu, mupp))
    return pairs
