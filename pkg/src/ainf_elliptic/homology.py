"""Reduced Hochschild cochain complexes of B and the bar-type chain complexes.

Cochains in ``C^n_{(m)}(B, M)`` are R-bimodule maps ``B_+^{(x)n} -> M`` of
internal degree m.  Their canonical basis is the set of pairs ``(word, y)``
with ``y`` a basis element of M, ``deg y = deg word + m`` and matching end
vertices; the dual basis vector sends ``word`` to ``y`` and all other words to
zero.  For n = 0 the word is empty and ``y`` must satisfy left(y) = right(y).

By default the complex is truncated below degree 1, so ``HH^1`` is the space
of R-linear derivations (no quotient by inner derivations ``[r, -]`` with r in
R).  Pass ``include_c0=True`` to use the untruncated complex; the two differ
only at HH^1_{(0)}, where e.g. HH^1_{(0)}(B) drops from 2 to 1.

The differential is used exactly as

    δφ(a_0..a_n) = a_0 φ(a_1..a_n) + Σ_{i=1..n} (-1)^i φ(.., a_{i-1} a_i, ..)
                   + (-1)^{n+1} φ(a_0..a_{n-1}) a_n

with no Koszul signs.  Chain complexes ``C_n^{(m)}(label)`` have basis the
words of length n and degree m with fixed endpoints, and boundary
``d(a_1..a_n) = Σ_{i=1..n-1} (-1)^i a_1..(a_i a_{i+1})..a_n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import algebra as alg
from .algebra import CoefficientBimodule, get_module
from .linalg import SparseMatrix, certified_rank

CHAIN_LABELS = {
    "L": (alg.L, alg.L),
    "O": (alg.O, alg.O),
    "eta": (alg.L, alg.O),
    "theta": (alg.O, alg.L),
}

Word = tuple[int, ...]


# ------------------------------------------------------------------- bases

@lru_cache(maxsize=None)
def cochain_basis(module: str, n: int, m: int) -> tuple[tuple[Word, int], ...]:
    M = get_module(module)
    out: list[tuple[Word, int]] = []
    if n == 0:
        out = [((), y) for y in M.basis if alg.left(y) == alg.right(y) and alg.degree(y) == m]
    else:
        for y in M.basis:
            for w in alg.enumerate_words(n, alg.degree(y) - m, alg.left(y), alg.right(y)):
                out.append((w, y))
    pos = {y: i for i, y in enumerate(alg.BASIS)}
    out.sort(key=lambda t: (t[0], pos[t[1]]))
    return tuple(out)


@lru_cache(maxsize=None)
def _cochain_index(module: str, n: int, m: int) -> dict:
    return {b: i for i, b in enumerate(cochain_basis(module, n, m))}


@lru_cache(maxsize=None)
def chain_basis(label: str, n: int, m: int) -> tuple[Word, ...]:
    lv, rv = _label(label)
    if n < 1:
        return ()
    return alg.enumerate_words(n, m, lv, rv)


@lru_cache(maxsize=None)
def _chain_index(label: str, n: int, m: int) -> dict:
    return {w: i for i, w in enumerate(chain_basis(label, n, m))}


def _label(label: str) -> tuple[int, int]:
    try:
        return CHAIN_LABELS[label]
    except KeyError:
        raise KeyError(f"unknown chain label {label!r}; choose from {sorted(CHAIN_LABELS)}") from None


# ----------------------------------------------------------- differentials

def _delta_column(M: CoefficientBimodule, n: int, w: Word, y: int):
    """Yield ((word, target), coefficient) for δ of the dual basis vector (w, y)."""
    lv = alg.left(y) if n == 0 else alg.word_left(w)
    rv = alg.right(y) if n == 0 else alg.word_right(w)
    for g in alg.GENERATORS:
        if alg.right(g) == lv:
            z = M.act_left(g, y)
            if z is not None:
                yield ((g,) + w, z), 1
    for j in range(n):
        for g1, g2 in alg.FACTORS[w[j]]:
            yield (w[:j] + (g1, g2) + w[j + 1:], y), (-1) ** (j + 1)
    sign = (-1) ** (n + 1)
    for g in alg.GENERATORS:
        if alg.left(g) == rv:
            z = M.act_right(y, g)
            if z is not None:
                yield (w + (g,), z), sign


@lru_cache(maxsize=None)
def hochschild_delta_matrix(module: str, n: int, m: int) -> SparseMatrix:
    """Matrix of δ: C^n_{(m)}(B, M) -> C^{n+1}_{(m)}(B, M) in canonical bases."""
    if n < 0:
        raise ValueError("n must be >= 0")
    M = get_module(module)
    rows = _cochain_index(module, n + 1, m)
    acc: dict[tuple[int, int], int] = {}
    for j, (w, y) in enumerate(cochain_basis(module, n, m)):
        for key, c in _delta_column(M, n, w, y):
            i = rows[key]
            acc[i, j] = acc.get((i, j), 0) + c
    return SparseMatrix.from_dict(len(rows), len(cochain_basis(module, n, m)), acc)


def chain_boundary_terms(w: Word):
    """Yield (word, sign) for d(w)."""
    for i in range(1, len(w)):
        p = alg.multiply(w[i - 1], w[i])
        if p is not None:
            yield w[:i - 1] + (p,) + w[i + 1:], (-1) ** i


@lru_cache(maxsize=None)
def chain_boundary_matrix(label: str, n: int, m: int) -> SparseMatrix:
    """Matrix of d: C_n^{(m)}(label) -> C_{n-1}^{(m)}(label)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = _chain_index(label, n - 1, m)
    cols = chain_basis(label, n, m)
    acc: dict[tuple[int, int], int] = {}
    for j, w in enumerate(cols):
        for u, s in chain_boundary_terms(w):
            i = rows[u]
            acc[i, j] = acc.get((i, j), 0) + s
    return SparseMatrix.from_dict(len(rows), len(cols), acc)


# ----------------------------------------------------------------- results

@dataclass
class HomologyResult:
    kind: str  # "HH" or "H"
    source: str  # coefficient module or chain label
    n: int
    m: int
    dim: int
    size: int
    rank_in: int
    rank_out: int
    prime_witnesses: list[int] = field(default_factory=list)
    representative: dict | None = None
    representative_ok: bool | None = None

    def record(self) -> dict:
        return {
            "kind": self.kind,
            "module": self.source,
            "n": self.n,
            "m": self.m,
            "dim": self.dim,
            "basis_size": self.size,
            "rank_in": self.rank_in,
            "rank_out": self.rank_out,
            "primes": list(self.prime_witnesses),
            "representative": self.representative_ok,
        }


_RANKS: dict = {}


def _rank(kind: str, key: str, n: int, m: int, mode: str, seed: int):
    ck = (kind, key, n, m, mode, seed)
    if ck not in _RANKS:
        A = hochschild_delta_matrix(key, n, m) if kind == "HH" else chain_boundary_matrix(key, n, m)
        _RANKS[ck] = certified_rank(A, mode=mode, seed=seed)
    return _RANKS[ck]


def clear_caches() -> None:
    _RANKS.clear()
    hochschild_delta_matrix.cache_clear()
    chain_boundary_matrix.cache_clear()


def hh_dim(module: str, n: int, m: int, mode: str = "modular", seed: int = 0,
           include_c0: bool = False) -> HomologyResult:
    """dim HH^n_{(m)}(B, M) = dim C^n - rank δ_n - rank δ_{n-1}."""
    if n < 0 or (n == 0 and not include_c0):
        raise ValueError("n must be >= 1 (or >= 0 with include_c0=True)")
    size = len(cochain_basis(module, n, m))
    out = _rank("HH", module, n, m, mode, seed)
    inc = _rank("HH", module, n - 1, m, mode, seed) if n >= 2 or (n == 1 and include_c0) else None
    r_in = inc.rank if inc else 0
    primes = sorted(set(out.primes) | set(inc.primes if inc else []))
    return HomologyResult("HH", module, n, m, size - out.rank - r_in, size, r_in, out.rank, primes)


def chain_homology_dim(label: str, n: int, m: int, mode: str = "modular", seed: int = 0) -> HomologyResult:
    """dim H_n(C_•^{(m)}(label))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = len(chain_basis(label, n, m))
    out = _rank("H", label, n, m, mode, seed) if n >= 2 else None
    inc = _rank("H", label, n + 1, m, mode, seed)
    r_out = out.rank if out else 0
    primes = sorted(set(inc.primes) | set(out.primes if out else []))
    return HomologyResult("H", label, n, m, size - r_out - inc.rank, size, inc.rank, r_out, primes)


# ----------------------------------------------------- class certification

@dataclass
class ClassCheck:
    is_cycle: bool
    is_nonzero_class: bool


def chain_vector(label: str, n: int, m: int, combo: dict[Word, int]) -> dict[int, int]:
    idx = _chain_index(label, n, m)
    out: dict[int, int] = {}
    for w, c in combo.items():
        if w not in idx:
            raise ValueError(f"word {alg.format_word(w)} is not a basis word of C_{n}^({m})({label})")
        out[idx[w]] = out.get(idx[w], 0) + c
    return out


def cochain_vector(module: str, n: int, m: int, combo: dict[tuple[Word, int], int]) -> dict[int, int]:
    idx = _cochain_index(module, n, m)
    out: dict[int, int] = {}
    for key, c in combo.items():
        if key not in idx:
            w, y = key
            raise ValueError(f"({alg.format_word(w)} -> {alg.NAMES[y]}) is not in C^{n}_({m})({module})")
        out[idx[key]] = out.get(idx[key], 0) + c
    return out


def _apply(A: SparseMatrix, v: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for r, c, x in A.entries:
        if c in v:
            out[r] = out.get(r, 0) + x * v[c]
    return {r: x for r, x in out.items() if x}


def _differentials(kind: str, key: str, n: int, m: int, include_c0: bool = False):
    """(outgoing, incoming, dimension) for the cell."""
    if kind == "chain":
        size = len(chain_basis(key, n, m))
        out = chain_boundary_matrix(key, n, m) if n >= 2 else SparseMatrix(0, size)
        inc = chain_boundary_matrix(key, n + 1, m)
    elif kind == "cochain":
        size = len(cochain_basis(key, n, m))
        out = hochschild_delta_matrix(key, n, m)
        low = 1 if include_c0 else 2
        inc = hochschild_delta_matrix(key, n - 1, m) if n >= low else SparseMatrix(size, 0)
    else:
        raise ValueError(f"kind must be 'chain' or 'cochain', got {kind!r}")
    return out, inc, size


def verify_class(v: dict[int, int], kind: str, key: str, n: int, m: int,
                 mode: str = "modular", seed: int = 0, include_c0: bool = False) -> ClassCheck:
    """Is ``v`` a cycle, and is its class nonzero?

    ``v`` is a sparse vector {basis index: integer} in the canonical basis of
    the given cell.  Nonzero class means rank([D_in | v]) = rank(D_in) + 1.
    """
    out, inc, size = _differentials(kind, key, n, m, include_c0)
    if any(i < 0 or i >= size for i in v):
        raise ValueError(f"vector index out of range for a cell of dimension {size}")
    cycle = not _apply(out, v)
    r0 = certified_rank(inc, mode, seed).rank
    r1 = certified_rank(inc.hstack(v), mode, seed).rank
    return ClassCheck(cycle, cycle and r1 == r0 + 1)


def same_class_sign(v1: dict[int, int], v2: dict[int, int], kind: str, key: str, n: int, m: int,
                    mode: str = "modular", seed: int = 0) -> int | None:
    """Return s in {+1, -1} with v1 - s*v2 a boundary, or None."""
    _, inc, _ = _differentials(kind, key, n, m)
    r0 = certified_rank(inc, mode, seed).rank
    for s in (1, -1):
        diff = dict(v1)
        for i, c in v2.items():
            diff[i] = diff.get(i, 0) - s * c
        diff = {i: c for i, c in diff.items() if c}
        if not diff or certified_rank(inc.hstack(diff), mode, seed).rank == r0:
            return s
    return None


def boundary_of(label: str, combo: dict[Word, int]) -> dict[Word, int]:
    """d of a chain given as {word: coefficient}."""
    out: dict[Word, int] = {}
    for w, c in combo.items():
        for u, s in chain_boundary_terms(w):
            out[u] = out.get(u, 0) + s * c
    return {u: c for u, c in out.items() if c}


def euler_characteristic(module: str, m: int, nmax: int) -> tuple[int, int]:
    """(Σ (-1)^n dim C^n_{(m)}, Σ (-1)^n dim HH^n_{(m)}) over 0 <= n <= nmax, C^0 included."""
    basis = sum((-1) ** n * len(cochain_basis(module, n, m)) for n in range(nmax + 1))
    hom = sum((-1) ** n * hh_dim(module, n, m, include_c0=True).dim for n in range(nmax + 1))
    return basis, hom


def cochain_support_bound(m: int) -> int:
    """Largest n with C^n_{(m)}(B, B) nonzero; complexes of fixed m are finite."""
    # words have degree >= (n-1)/2 and targets degree <= 1, so (n-1)/2 + m <= 1
    return 3 - 2 * m


def dims_table(module: str, offset: int, nmax: int, mode: str = "modular", seed: int = 0,
               nmin: int = 1) -> list[HomologyResult]:
    """HH^n_{(offset-n)} for nmin <= n <= nmax."""
    return [hh_dim(module, n, offset - n, mode, seed) for n in range(nmin, nmax + 1)]


def chain_table(label: str, shift: int, nmax: int, mode: str = "modular", seed: int = 0) -> list[HomologyResult]:
    """H_n(C_•^{(n-shift)}) for 1 <= n <= nmax."""
    return [chain_homology_dim(label, n, n - shift, mode, seed) for n in range(1, nmax + 1)]
