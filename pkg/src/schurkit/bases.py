"""Subgroup-adapted bases: Gel'fand-Zetlin patterns and Young-Yamanouchi paths.

A GzPattern is a chain of interlacing partitions (q_d = lambda, ..., q_1)
indexing a basis vector of Q_lambda^d; it is equivalent to a semistandard
tableau. A YyPath is a chain (p_n = lambda, ..., p_1 = (1)) of single-box
removals indexing a basis vector of P_lambda; it is equivalent to a standard
tableau and to the box-addition record (j_1, ..., j_{n-1}).
"""

from __future__ import annotations

from functools import cache

from .partitions import (
    Partition,
    add_box,
    canonical_key,
    dim_P,
    interlaces,
    interlacing_set,
    remove_box_set,
)


class GzPattern:
    """Chain (q_d = lambda, q_{d-1}, ..., q_1) with q_j interlacing q_{j+1}."""

    __slots__ = ("chain",)

    def __init__(self, chain):
        chain = tuple(chain)
        if not chain:
            raise ValueError("empty GZ chain")
        for level, q in zip(range(len(chain), 0, -1), chain):
            if not isinstance(q, Partition):
                raise ValueError("chain entries must be Partitions")
            if len(q) > level:
                raise ValueError(f"q_{level}={q} has more than {level} parts")
        for upper, lower in zip(chain, chain[1:]):
            if not interlaces(lower, upper):
                raise ValueError(f"{lower} does not interlace {upper}")
        object.__setattr__(self, "chain", chain)

    def __setattr__(self, name, value):
        raise AttributeError("GzPattern is immutable")

    @property
    def d(self) -> int:
        return len(self.chain)

    @property
    def top(self) -> Partition:
        """The irrep label lambda = q_d."""
        return self.chain[0]

    def level(self, j: int) -> Partition:
        """q_j for j in 1..d."""
        return self.chain[self.d - j]

    def __eq__(self, other) -> bool:
        return isinstance(other, GzPattern) and self.chain == other.chain

    def __hash__(self) -> int:
        return hash(self.chain)

    def __repr__(self) -> str:
        return f"GzPattern({[list(q.parts) for q in self.chain]})"


class YyPath:
    """Chain (p_n = lambda, ..., p_1 = (1)); each step removes one box."""

    __slots__ = ("chain",)

    def __init__(self, chain):
        chain = tuple(chain)
        if not chain:
            raise ValueError("empty path")
        if chain[-1] != Partition([1]):
            raise ValueError("path must end at the single-box partition")
        for upper, lower in zip(chain, chain[1:]):
            if lower not in remove_box_set(upper):
                raise ValueError(f"{lower} is not {upper} minus one box")
        object.__setattr__(self, "chain", chain)

    def __setattr__(self, name, value):
        raise AttributeError("YyPath is immutable")

    @property
    def n(self) -> int:
        return len(self.chain)

    @property
    def top(self) -> Partition:
        return self.chain[0]

    def level(self, k: int) -> Partition:
        """p_k for k in 1..n."""
        return self.chain[self.n - k]

    @property
    def box_record(self) -> tuple[int, ...]:
        """(j_1, ..., j_{n-1}): row receiving the box at each growth step."""
        js = []
        for k in range(1, self.n):
            lo, hi = self.level(k), self.level(k + 1)
            j = next(i for i in range(1, len(hi) + 1) if hi.part(i) != lo.part(i))
            js.append(j)
        return tuple(js)

    def __eq__(self, other) -> bool:
        return isinstance(other, YyPath) and self.chain == other.chain

    def __hash__(self) -> int:
        return hash(self.chain)

    def __repr__(self) -> str:
        return f"YyPath({[list(p.parts) for p in self.chain]})"


def path_from_record(js) -> YyPath:
    """Rebuild a path from its box-addition record (j_1, ..., j_{n-1})."""
    cur = Partition([1])
    chain = [cur]
    for j in js:
        nxt = add_box(cur, j)
        if nxt is None:
            raise ValueError(f"record {tuple(js)} adds an invalid box at row {j}")
        chain.append(nxt)
        cur = nxt
    return YyPath(reversed(chain))


def format_path(p: YyPath) -> str:
    """Wire form "j1,j2,...,j{n-1}"; empty for n=1."""
    return ",".join(str(j) for j in p.box_record)


def parse_path(text: str) -> YyPath:
    text = text.strip()
    js = [int(tok) for tok in text.split(",")] if text else []
    return path_from_record(js)


@cache
def enumerate_gz(lam: Partition, d: int) -> tuple[GzPattern, ...]:
    """All GZ patterns of Q_lambda^d in canonical order.

    Ordered by q_{d-1} in canonical partition order, then recursively, so
    patterns sharing a U_{d-1} label form contiguous runs.
    """
    if len(lam) > d:
        return ()
    if d == 1:
        return (GzPattern((lam,)),)
    out = []
    for mu in interlacing_set(lam, d):
        for tail in enumerate_gz(mu, d - 1):
            out.append(GzPattern((lam,) + tail.chain))
    return tuple(out)


@cache
def enumerate_paths(lam: Partition) -> tuple[YyPath, ...]:
    """All removal chains from lambda down to (1), in rank order."""
    if lam.size < 1:
        raise ValueError("lambda must have at least one box")
    if lam == Partition([1]):
        return (YyPath((lam,)),)
    out = []
    for mu in remove_box_set(lam):
        for tail in enumerate_paths(mu):
            out.append(YyPath((lam,) + tail.chain))
    return tuple(out)


def gz_to_ssyt(p: GzPattern) -> list[list[int]]:
    """Fill each box in q_j but not q_{j-1} with j; rows of the tableau."""
    lam = p.top
    rows = [[0] * lam.part(r) for r in range(1, len(lam) + 1)]
    prev = Partition()
    for j in range(1, p.d + 1):
        q = p.level(j)
        for r in range(1, len(q) + 1):
            for c in range(prev.part(r), q.part(r)):
                rows[r - 1][c] = j
        prev = q
    return rows


def ssyt_to_gz(rows: list[list[int]], d: int) -> GzPattern:
    """Inverse of gz_to_ssyt for entries in 1..d; validates semistandardness."""
    for r, row in enumerate(rows):
        if not row:
            raise ValueError("empty tableau row")
        for c, v in enumerate(row):
            if not 1 <= v <= d:
                raise ValueError(f"entry {v} outside 1..{d}")
            if c > 0 and row[c - 1] > v:
                raise ValueError("rows must be nondecreasing")
            if r > 0 and (c >= len(rows[r - 1]) or rows[r - 1][c] >= v):
                raise ValueError("columns must be strictly increasing")
    chain = []
    for j in range(d, 0, -1):
        parts = [sum(1 for v in row if v <= j) for row in rows]
        chain.append(Partition(parts))
    return GzPattern(chain)


def format_ssyt(rows: list[list[int]]) -> str:
    """Rows joined by slashes: "1,1,2,5/2,3,3/3/5"."""
    return "/".join(",".join(str(v) for v in row) for row in rows)


def parse_ssyt(text: str) -> list[list[int]]:
    return [[int(v) for v in row.split(",")] for row in text.strip().split("/")]


def rank_path(p: YyPath) -> int:
    """Position of p in the canonical path order, 1-based.

    f_n(p) = 1 + sum_{k=2..n} sum_{mu in p_k - box, mu before p_{k-1}} dim P_mu,
    where "before" is the canonical partition order.
    """
    rank = 1
    for k in range(2, p.n + 1):
        key = canonical_key(p.level(k - 1))
        for mu in remove_box_set(p.level(k)):
            if canonical_key(mu) < key:
                rank += dim_P(mu)
    return rank


def unrank_path(lam: Partition, rank: int) -> YyPath:
    """Inverse of rank_path for 1 <= rank <= dim_P(lam)."""
    if not 1 <= rank <= dim_P(lam):
        raise ValueError(f"rank {rank} outside [1, {dim_P(lam)}] for {lam}")
    chain = [lam]
    cur, r = lam, rank - 1
    while cur.size > 1:
        for mu in remove_box_set(cur):
            dm = dim_P(mu)
            if r < dm:
                chain.append(mu)
                cur = mu
                break
            r -= dm
        else:
            raise AssertionError("rank exhausted removal set")
    return YyPath(chain)


def _bits(value: int, width: int) -> str:
    if value >= (1 << width):
        raise ValueError(f"value {value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def encode_registers(lam: Partition, q: GzPattern, p: YyPath, n: int, d: int) -> str:
    """Fixed-width bit layout for the triple (lambda, q, p).

    lambda: d fields of ceil(log2(n+1)) bits; q: the triangular GZ array as
    d + (d-1) + ... + 1 fields of the same width (row q_d first); p: n-1
    fields of ceil(log2 d) bits holding j_k - 1.
    """
    if q.d != d or len(lam) > d or p.n != n or q.top != lam or p.top != lam:
        raise ValueError("inconsistent (lambda, q, p, n, d) triple")
    w = (n + 1 - 1).bit_length()  # ceil(log2(n+1)) for n >= 1
    jw = (d - 1).bit_length()  # ceil(log2 d)
    bits = [_bits(lam.part(i), w) for i in range(1, d + 1)]
    for j in range(d, 0, -1):
        qj = q.level(j)
        bits.extend(_bits(qj.part(i), w) for i in range(1, j + 1))
    record = p.box_record
    bits.extend(_bits(j - 1, jw) for j in record)
    return "".join(bits)


def decode_registers(bits: str, n: int, d: int) -> tuple[Partition, GzPattern, YyPath]:
    """Inverse of encode_registers; validates all chain invariants."""
    w = (n + 1 - 1).bit_length()
    jw = (d - 1).bit_length()
    expected = d * w + (d * (d + 1) // 2) * w + (n - 1) * jw
    if len(bits) != expected or set(bits) - {"0", "1"}:
        raise ValueError(f"expected {expected} bits, got {len(bits)}")
    pos = 0

    def take(width: int) -> int:
        nonlocal pos
        field = bits[pos : pos + width]
        pos += width
        return int(field, 2) if width else 0

    lam = Partition(take(w) for _ in range(d))
    chain = []
    for j in range(d, 0, -1):
        chain.append(Partition(take(w) for _ in range(j)))
    q = GzPattern(chain)
    js = [take(jw) + 1 for _ in range(n - 1)]
    p = path_from_record(js)
    if q.top != lam or p.top != lam:
        raise ValueError("decoded registers disagree on lambda")
    return lam, q, p
