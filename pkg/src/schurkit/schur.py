"""The Schur transform on n qudits as a cascade of Clebsch-Gordan transforms.

Row order of the full unitary: lambda in canonical partition order, then GZ
patterns in canonical order, then Young-Yamanouchi paths in rank order.
Columns are the computational basis (i_1, ..., i_n), big-endian base d.

The cascade is carried per lambda sector: after k steps the sector tensor has
shape (dim Q_lambda, paths so far, d^k). Extending a sector with the next
qudit and slicing the CG block rows by j routes it into the sectors
lambda + e_j; stacking contributions over predecessors in canonical order
reproduces exactly the path-rank order of the multiplicity register.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Mapping

import numpy as np

from .bases import (
    GzPattern,
    YyPath,
    enumerate_gz,
    enumerate_paths,
    format_path,
    format_ssyt,
    gz_to_ssyt,
    rank_path,
    unrank_path,
)
from .clebsch_gordan import cg_block
from .partitions import (
    Partition,
    add_box,
    dim_P,
    dim_Q,
    enumerate_partitions,
    format_partition,
    remove_box_set,
)

DEFAULT_MAX_DIM = 4096


class ResourceLimitError(RuntimeError):
    """Raised when a requested dense object exceeds the configured bound."""


@dataclass(frozen=True)
class SchurUnitary:
    """Dense d^n x d^n Schur transform with labeled rows."""

    n: int
    d: int
    matrix: np.ndarray
    row_labels: tuple  # (lambda, GzPattern, YyPath) per row
    row_index: Mapping
    blocks: tuple  # (lambda, row_start, dim_Q, dim_P) in row order

    def block_rows(self, lam: Partition) -> np.ndarray:
        """The rows of the lambda block, shape (dim_Q * dim_P, d^n)."""
        for blam, start, dq, dp in self.blocks:
            if blam == lam:
                return self.matrix[start : start + dq * dp]
        raise KeyError(f"no block for {lam}")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "row_labels": [
                {
                    "lambda": format_partition(lam),
                    "gz": format_ssyt(gz_to_ssyt(q)),
                    "path": format_path(p),
                }
                for lam, q, p in self.row_labels
            ],
            "matrix": [
                [[float(v.real), float(v.imag)] for v in row] for row in self.matrix
            ],
        }


def _check_size(n: int, d: int, max_dim: int) -> int:
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    required = d**n
    if required > max_dim:
        raise ResourceLimitError(
            f"d^n = {required} exceeds the configured bound {max_dim}"
        )
    return required


@cache
def _row_groups(lam: Partition, d: int) -> tuple:
    """Row layout of cg_block(lam, d): (j, lambda + e_j, offset, count)."""
    groups = []
    offset = 0
    for j in range(1, d + 1):
        target = add_box(lam, j, d)
        if target is None:
            continue
        count = dim_Q(target, d)
        groups.append((j, target, offset, count))
        offset += count
    return tuple(groups)


def _attach_column_qudit(tensor: np.ndarray, d: int) -> np.ndarray:
    """(Q, P, C) -> (Q*d, P, C*d): a fresh qudit axis, minor on both sides.

    Used when building the matrix, where the column space grows with each
    consumed qudit.
    """
    nq, np_, cols = tensor.shape
    eye = np.eye(d)
    return (tensor[:, None, :, :, None] * eye[None, :, None, None, :]).reshape(
        nq * d, np_, cols * d
    )


def _consume_front_qudit(tensor: np.ndarray, d: int) -> np.ndarray:
    """(Q, P, d*R) -> (Q*d, P, R): pair the next (most significant) qudit
    of the remaining register with the GZ index."""
    nq, np_, rest = tensor.shape
    x = tensor.reshape(nq, np_, d, rest // d)
    return x.transpose(0, 2, 1, 3).reshape(nq * d, np_, rest // d)


def _sector_cascade(n: int, d: int, initial: dict, prepare) -> dict:
    """Run steps k = 1..n-1 over {lambda: (Q, P, R) tensor} sector states."""
    state = initial
    for _ in range(1, n):
        gathered: dict[Partition, dict[Partition, np.ndarray]] = {}
        for lam, tensor in state.items():
            x = prepare(tensor, d)
            y = (cg_block(lam, d).matrix @ x.reshape(x.shape[0], -1)).reshape(
                -1, x.shape[1], x.shape[2]
            )
            for _, target, offset, count in _row_groups(lam, d):
                gathered.setdefault(target, {})[lam] = y[offset : offset + count]
        state = {
            target: np.concatenate(
                [by_pred[m] for m in remove_box_set(target) if m in by_pred], axis=1
            )
            for target, by_pred in gathered.items()
        }
    return state


def schur_unitary(n: int, d: int, max_dim: int = DEFAULT_MAX_DIM) -> SchurUnitary:
    """Build the dense Schur transform with labeled rows."""
    dim = _check_size(n, d, max_dim)
    init = {Partition([1]): np.eye(d).reshape(d, 1, d)}
    state = _sector_cascade(n, d, init, _attach_column_qudit)

    row_labels = []
    blocks = []
    rows = []
    for lam in enumerate_partitions(d, n):
        if dim_Q(lam, d) == 0:
            continue
        tensor = state[lam]
        dq, dp = dim_Q(lam, d), dim_P(lam)
        assert tensor.shape == (dq, dp, dim)
        blocks.append((lam, len(row_labels), dq, dp))
        rows.append(tensor.reshape(dq * dp, dim))
        for q in enumerate_gz(lam, d):
            for p in enumerate_paths(lam):
                row_labels.append((lam, q, p))
    matrix = np.concatenate(rows, axis=0)
    assert matrix.shape == (dim, dim)
    matrix.setflags(write=False)
    row_index = {label: r for r, label in enumerate(row_labels)}
    return SchurUnitary(n, d, matrix, tuple(row_labels), row_index, tuple(blocks))


def schur_matmul(x: np.ndarray, n: int, d: int, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """U_Sch @ x for x of shape (d^n, m), via the cascade.

    Batched columns ride along as the least-significant part of the trailing
    axis, so this costs far less than materializing the d^n square matrix.
    Rows of the result follow the canonical Schur row order.
    """
    dim = _check_size(n, d, max_dim)
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != dim:
        raise ValueError(f"x must have d^n = {dim} rows")
    m = x.shape[1]
    init = {Partition([1]): x.reshape(d, 1, d ** (n - 1) * m)}
    sectors = _sector_cascade(n, d, init, _consume_front_qudit)
    lams = [lam for lam in enumerate_partitions(d, n) if dim_Q(lam, d)]
    return np.concatenate(
        [sectors[lam].reshape(dim_Q(lam, d) * dim_P(lam), m) for lam in lams]
    )


def schur_labels(n: int, d: int) -> list[tuple[Partition, GzPattern, YyPath]]:
    """Row labels of the Schur basis in canonical row order."""
    out = []
    for lam in enumerate_partitions(d, n):
        if dim_Q(lam, d) == 0:
            continue
        for q in enumerate_gz(lam, d):
            for p in enumerate_paths(lam):
                out.append((lam, q, p))
    return out


def schur_apply(
    state: np.ndarray,
    n: int,
    d: int,
    direction: str = "forward",
    max_dim: int = DEFAULT_MAX_DIM,
) -> np.ndarray:
    """Apply the Schur transform (or its inverse) to a state vector.

    Forward input is a length-d^n amplitude vector over the computational
    basis; the output is ordered by the canonical Schur row order (see
    schur_labels). The inverse undoes the cascade by applying the adjoint
    steps in reverse order; neither direction materializes the full matrix.
    """
    dim = _check_size(n, d, max_dim)
    if direction not in ("forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    v = np.asarray(state, dtype=complex).reshape(-1)
    if v.shape != (dim,):
        raise ValueError(f"state length {v.size} != d^n = {dim}")
    lams = [lam for lam in enumerate_partitions(d, n) if dim_Q(lam, d)]

    if direction == "forward":
        sectors = _sector_cascade(
            n, d, {Partition([1]): v.reshape(d, 1, d ** (n - 1))}, _consume_front_qudit
        )
        return np.concatenate(
            [sectors[lam].reshape(dim_Q(lam, d) * dim_P(lam)) for lam in lams]
        )

    sectors: dict[Partition, np.ndarray] = {}
    pos = 0
    for lam in lams:
        dq, dp = dim_Q(lam, d), dim_P(lam)
        sectors[lam] = v[pos : pos + dq * dp].reshape(dq, dp, 1)
        pos += dq * dp
    for _ in range(n - 1, 0, -1):
        prev: dict[Partition, np.ndarray] = {}
        for lam_next, tensor in sectors.items():
            _, np_, rest = tensor.shape
            p_off = 0
            for mu in remove_box_set(lam_next):
                if len(mu) > d:
                    continue
                pw = dim_P(mu)
                piece = tensor[:, p_off : p_off + pw, :]
                p_off += pw
                sub = next(
                    (o, c) for _, t, o, c in _row_groups(mu, d) if t == lam_next
                )
                gj = cg_block(mu, d).matrix[sub[0] : sub[0] + sub[1]]
                nq = dim_Q(mu, d)
                x = (gj.T @ piece.reshape(sub[1], -1)).reshape(nq, d, pw, rest)
                x = x.transpose(0, 2, 1, 3).reshape(nq, pw, d * rest)
                if mu in prev:
                    prev[mu] = prev[mu] + x
                else:
                    prev[mu] = x
            assert p_off == np_
        sectors = prev
    out = sectors[Partition([1])]  # (d, 1, d^(n-1))
    return out.reshape(dim)


def compress_p(state: Mapping) -> dict:
    """Replace the YyPath label by its rank; amplitudes unchanged."""
    out = {}
    for (lam, q, p), amp in state.items():
        if not isinstance(p, YyPath) or p.top != lam:
            raise ValueError(f"label ({lam}, {q}, {p}) is not a valid Schur label")
        out[(lam, q, rank_path(p))] = amp
    return out


def decompress_p(state: Mapping) -> dict:
    """Inverse of compress_p: recover the path from (lambda, rank)."""
    out = {}
    for (lam, q, r), amp in state.items():
        out[(lam, q, unrank_path(lam, r))] = amp
    return out
