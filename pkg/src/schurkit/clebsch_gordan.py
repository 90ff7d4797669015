"""The recursive Clebsch-Gordan transform for Q_lambda^d tensor Q_(1)^d.

cg_block(lambda, d) materializes the unitary sending (GZ vector of lambda,
qudit level i) to the direct sum over valid j of GZ vectors of lambda + e_j.
Columns are built one at a time by the sparse recursion: peel off the top
pattern row mu', run the U_{d-1} transform on the tail (or relabel i = d as
the j' = 0 branch), then mix j' -> j with the reduced Wigner matrix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cache, lru_cache
from typing import Mapping

import numpy as np

from .bases import GzPattern, enumerate_gz, format_ssyt, gz_to_ssyt
from .partitions import Partition, add_box, dim_Q, format_partition
from .wigner import _value as _wigner_value


@lru_cache(maxsize=None)
def _cg_column(lam_parts: tuple, d: int, chain: tuple, i: int):
    """Sparse expansion of U_CG |lambda, q, i>: tuple of (j, chain', coeff).

    `chain` is the pattern's parts-tuple chain (q_d, ..., q_1); the same
    encoding is returned so recursion levels stay hashable.
    """
    lam = Partition(lam_parts)
    if d == 1:
        target = add_box(lam, 1, 1)
        return ((1, (target.parts,), 1.0),)
    mu_prime = Partition(chain[1])
    tail = chain[1:]
    if i < d:
        routed = _cg_column(mu_prime.parts, d - 1, tail, i)
    else:
        routed = ((0, tail, 1.0),)
    out: dict[tuple, float] = {}
    for j_prime, new_tail, coeff in routed:
        for j in range(1, d + 1):
            target = add_box(lam, j, d)
            if target is None:
                continue
            t = _wigner_value(lam.parts, j, mu_prime.parts, j_prime, d)
            if t == 0.0:
                continue
            key = (j, (target.parts,) + new_tail)
            out[key] = out.get(key, 0.0) + coeff * t
    return tuple((j, ch, c) for (j, ch), c in out.items())


def _chain_key(q: GzPattern) -> tuple:
    return tuple(p.parts for p in q.chain)


def _pattern_from_key(key: tuple) -> GzPattern:
    return GzPattern(tuple(Partition(p) for p in key))


@dataclass(frozen=True)
class CgBlock:
    """Dense CG unitary for one lambda, with labeled row/column index maps."""

    lam: Partition
    d: int
    matrix: np.ndarray
    in_labels: tuple  # (GzPattern, i) per column
    out_labels: tuple  # (j, GzPattern of lambda + e_j) per row
    in_index: Mapping
    out_index: Mapping

    def to_json(self) -> dict:
        """Schema: lambda, d, rows, cols, matrix as [re, im] pairs."""
        return {
            "lambda": format_partition(self.lam),
            "d": self.d,
            "rows": [
                {"j": j, "gz": format_ssyt(gz_to_ssyt(q))} for j, q in self.out_labels
            ],
            "cols": [
                {"gz": format_ssyt(gz_to_ssyt(q)) if q.top.size else "", "i": i}
                for q, i in self.in_labels
            ],
            "matrix": [
                [[float(v.real), float(v.imag)] for v in row] for row in self.matrix
            ],
        }


@cache
def cg_block(lam: Partition, d: int) -> CgBlock:
    """Build the dense CG block for lambda at dimension d.

    Rows run over valid j ascending, then GZ patterns of lambda + e_j in
    canonical order; columns over GZ patterns of lambda in canonical order,
    then i in 1..d. Unitary by construction (verified in tests to 1e-12).
    """
    if len(lam) > d:
        raise ValueError(f"lambda={lam} needs more than d={d} rows")
    in_labels = [(q, i) for q in enumerate_gz(lam, d) for i in range(1, d + 1)]
    out_labels = []
    for j in range(1, d + 1):
        target = add_box(lam, j, d)
        if target is None:
            continue
        out_labels.extend((j, q) for q in enumerate_gz(target, d))
    out_index = {label: r for r, label in enumerate(out_labels)}
    in_index = {label: c for c, label in enumerate(in_labels)}
    matrix = np.zeros((len(out_labels), len(in_labels)))
    for c, (q, i) in enumerate(in_labels):
        for j, chain_key, coeff in _cg_column(lam.parts, d, _chain_key(q), i):
            matrix[out_index[(j, _pattern_from_key(chain_key))], c] = coeff
    assert matrix.shape[0] == matrix.shape[1] == dim_Q(lam, d) * d
    matrix.setflags(write=False)
    return CgBlock(lam, d, matrix, tuple(in_labels), tuple(out_labels), in_index, out_index)


def cg_apply(state: Mapping, d: int) -> dict:
    """Apply the lambda-controlled CG transform to a labeled amplitude vector.

    Input keys are (lambda, GzPattern, i); output keys are (lambda, j,
    GzPattern of lambda + e_j), with the lambda register retained. Norm is
    preserved exactly up to roundoff; an unnormalized input only warns.
    """
    norm2 = 0.0
    for (lam, q, i), amp in state.items():
        if not isinstance(lam, Partition) or not isinstance(q, GzPattern):
            raise ValueError("state keys must be (Partition, GzPattern, i)")
        if q.d != d or not 1 <= i <= d or q.top != lam:
            raise ValueError(f"label ({lam}, {q}, {i}) inconsistent with d={d}")
        norm2 += abs(amp) ** 2
    if state and abs(norm2 - 1.0) > 1e-9:
        warnings.warn(f"input norm deviates from 1 by {abs(norm2 - 1.0):.3e}")
    out: dict = {}
    for (lam, q, i), amp in state.items():
        if amp == 0:
            continue
        for j, chain_key, coeff in _cg_column(lam.parts, d, _chain_key(q), i):
            key = (lam, j, _pattern_from_key(chain_key))
            val = out.get(key, 0.0) + amp * coeff
            out[key] = val
    return out
