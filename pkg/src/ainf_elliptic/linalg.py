"""Sparse integer matrices and exact rank.

Modular ranks run through the compiled kernel when it is importable and fall
back to the pure-Python implementation otherwise.  Set ``AINF_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass, field
from math import gcd

import numpy as np
from sympy import nextprime

from . import _kernels_py

log = logging.getLogger(__name__)

try:
    if os.environ.get("AINF_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _kernels as _compiled
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build
    _compiled = None
    BACKEND = "python"

PRIME_LOW = 2**31
PRIME_HIGH = 2**32 - 2**20
EXACT_LIMIT = 4000  # largest dimension the exact audit runs on unprompted


class RankDisagreementError(RuntimeError):
    """Modular ranks disagree and the exact audit could not settle it."""


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: tuple = field(default=())  # (row, col, value), values nonzero ints

    @classmethod
    def from_dict(cls, rows: int, cols: int, d: dict) -> "SparseMatrix":
        return cls(rows, cols, tuple(sorted((r, c, v) for (r, c), v in d.items() if v)))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def csr(self):
        """(indptr, indices, data) arrays, columns sorted within each row."""
        indptr = np.zeros(self.rows + 1, dtype=np.int64)
        if not self.entries:
            return indptr, np.zeros(0, np.int64), np.zeros(0, np.int64)
        arr = np.array(self.entries, dtype=np.int64)
        order = np.lexsort((arr[:, 1], arr[:, 0]))
        arr = arr[order]
        np.add.at(indptr, arr[:, 0] + 1, 1)
        np.cumsum(indptr, out=indptr)
        return indptr, arr[:, 1].copy(), arr[:, 2].copy()

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple(sorted((c, r, v) for r, c, v in self.entries)))

    def to_scipy(self):
        from scipy.sparse import csr_matrix

        indptr, indices, data = self.csr()
        return csr_matrix((data, indices, indptr), shape=(self.rows, self.cols))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        for r, c, v in self.entries:
            out[r, c] += v
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        prod = self.to_scipy() @ other.to_scipy()
        prod = prod.tocoo()
        return SparseMatrix.from_dict(self.rows, other.cols,
                                      {(int(r), int(c)): int(v) for r, c, v in zip(prod.row, prod.col, prod.data)})

    def is_zero(self) -> bool:
        return not self.entries

    def hstack(self, col: dict[int, int]) -> "SparseMatrix":
        """Append one column given as {row: value}."""
        extra = tuple((r, self.cols, int(v)) for r, v in sorted(col.items()) if v)
        return SparseMatrix(self.rows, self.cols + 1, self.entries + extra)


def random_primes(k: int, seed: int | None = None) -> list[int]:
    """k distinct primes drawn uniformly-ish from [2**31, 2**32)."""
    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < k:
        p = int(nextprime(rng.randrange(PRIME_LOW, PRIME_HIGH)))
        if p not in out:
            out.append(p)
    return out


def rank_mod_p(A: SparseMatrix, p: int, backend: str | None = None) -> int:
    if A.rows == 0 or A.cols == 0 or not A.entries:
        return 0
    # eliminate along the shorter side
    if A.rows > A.cols:
        A = A.transpose()
    indptr, indices, data = A.csr()
    impl = _choose(backend)
    return int(impl.rank_mod_p(indptr, indices, data, A.cols, p))


def _choose(backend: str | None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel not built; run `pip install -e .` or use backend='python'")
        return _compiled
    if backend == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {backend!r}")


def rank_exact(A: SparseMatrix) -> int:
    """Rank over Q by fraction-free sparse elimination on integer rows."""
    if A.rows > A.cols:
        A = A.transpose()
    rows: dict[int, dict[int, int]] = {}
    for r, c, v in A.entries:
        rows.setdefault(r, {})[c] = rows.get(r, {}).get(c, 0) + v
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for r in sorted(rows):
        cur = {c: v for c, v in rows[r].items() if v}
        while cur:
            lead = min(cur)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = _primitive(cur)
                rank += 1
                break
            a, b = prow[lead], cur[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in cur.items()}
            for c, v in prow.items():
                x = new.get(c, 0) - b * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            cur = _primitive(new) if new else new
    return rank


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


@dataclass
class RankResult:
    rank: int
    primes: list[int]
    exact: bool = False
    modular: list[int] = field(default_factory=list)


def certified_rank(A: SparseMatrix, mode: str = "modular", seed: int | None = 0,
                   escalate: int = 3, backend: str | None = None) -> RankResult:
    """Rank over Q.

    ``modular``: ranks modulo two random primes; on disagreement ``escalate``
    further primes are tried and then the exact elimination decides.
    ``exact``: fraction-free elimination only.
    """
    if mode == "exact":
        return RankResult(rank_exact(A), [], exact=True)
    if mode != "modular":
        raise ValueError(f"mode must be 'modular' or 'exact', got {mode!r}")
    primes = random_primes(2 + escalate, seed)
    ranks = [rank_mod_p(A, p, backend) for p in primes[:2]]
    if ranks[0] == ranks[1]:
        return RankResult(ranks[0], primes[:2], modular=ranks)
    log.warning("modular ranks disagree (%s); escalating", ranks)
    for p in primes[2:]:
        ranks.append(rank_mod_p(A, p, backend))
    if max(A.rows, A.cols) > EXACT_LIMIT:
        raise RankDisagreementError(
            f"modular ranks {ranks} disagree on a {A.rows}x{A.cols} matrix beyond the exact audit limit")
    exact = rank_exact(A)
    if exact < max(ranks):
        raise RankDisagreementError(f"exact rank {exact} below a modular rank {ranks}")
    return RankResult(exact, primes, exact=True, modular=ranks)


def rank(A: SparseMatrix, mode: str = "modular", seed: int | None = 0) -> int:
    return certified_rank(A, mode, seed).rank
