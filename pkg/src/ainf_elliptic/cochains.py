"""Numeric multilinear operations on B and the Gerstenhaber bracket.

An :class:`Operation` of arity n sends a tuple of basis elements of B to a
sparse vector ``{basis element: coefficient}``.  Operations other than the
product vanish as soon as one input is a unit, which is the normalisation of
the reduced complex and the strict unitality of the A-infinity structures.

Composition with insertion,

    (f ⋆ g) = Σ_r (-1)^{r + q t} f(1^r ⊗ g ⊗ 1^t),    p = arity f, q = arity g,

matches the sign of the Stasheff identity Σ (-1)^{r+st} m_u(1^r ⊗ m_s ⊗ 1^t).
The bracket is ``[f, g] = -(f ⋆ g + (-1)^{pq} g ⋆ f)``; with this choice
``[m_2, f]`` is exactly the Hochschild coboundary of f.  Every operation used
here has even internal degree or is checked against the plain differential, so
no Koszul signs enter.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Iterable

from . import algebra as alg

Vec = dict[int, complex]
Word = tuple[int, ...]


class Operation:
    def __init__(self, arity: int, fn: Callable[[Word], Vec], name: str = "", unital_zero: bool = True):
        self.arity = arity
        self._fn = fn
        self.name = name or f"op{arity}"
        self.unital_zero = unital_zero
        self._memo: dict[Word, Vec] = {}

    def __call__(self, w: Word) -> Vec:
        if len(w) != self.arity:
            raise ValueError(f"{self.name} has arity {self.arity}, got {len(w)} inputs")
        if self.unital_zero and any(alg.is_unit(a) for a in w):
            return {}
        r = self._memo.get(w)
        if r is None:
            r = {y: c for y, c in self._fn(w).items() if c != 0}
            self._memo[w] = r
        return r

    def on(self, combo: dict[Word, complex]) -> Vec:
        out: Vec = {}
        for w, c in combo.items():
            for y, v in self(w).items():
                out[y] = out.get(y, 0) + c * v
        return {y: v for y, v in out.items() if v != 0}

    def __repr__(self):
        return f"Operation({self.name}, arity={self.arity})"


def _add(acc: Vec, v: Vec, c: complex = 1) -> None:
    for y, x in v.items():
        acc[y] = acc.get(y, 0) + c * x


def zero(arity: int) -> Operation:
    return Operation(arity, lambda w: {}, "0")


def identity() -> Operation:
    return Operation(1, lambda w: {w[0]: 1}, "1", unital_zero=False)


def product() -> Operation:
    def fn(w):
        z = alg.multiply(w[0], w[1])
        return {} if z is None else {z: 1}
    return Operation(2, fn, "m2", unital_zero=False)


def table(arity: int, entries: dict[Word, Vec], name: str = "") -> Operation:
    return Operation(arity, lambda w: dict(entries.get(w, {})), name or f"table{arity}")


def linear(terms: Iterable[tuple[complex, Operation]], name: str = "") -> Operation:
    terms = [(c, op) for c, op in terms]
    arities = {op.arity for _, op in terms}
    if len(arities) != 1:
        raise ValueError(f"cannot add operations of arities {sorted(arities)}")

    def fn(w):
        acc: Vec = {}
        for c, op in terms:
            _add(acc, op(w), c)
        return acc
    return Operation(arities.pop(), fn, name)


def insert(f: Operation, g: Operation, r: int) -> Operation:
    """f(1^r ⊗ g ⊗ 1^t) with t = arity(f) - 1 - r."""
    p, q = f.arity, g.arity
    if not 0 <= r < p:
        raise ValueError(f"insertion slot {r} out of range for arity {p}")

    def fn(w):
        acc: Vec = {}
        for y, c in g(w[r:r + q]).items():
            _add(acc, f(w[:r] + (y,) + w[r + q:]), c)
        return acc
    return Operation(p + q - 1, fn, f"{f.name}∘{r}{g.name}")


def tensor_apply(f: Operation, gs: list[Operation]) -> Operation:
    """f(g_1 ⊗ ... ⊗ g_r) with r = arity(f)."""
    if len(gs) != f.arity:
        raise ValueError("need one operation per input of f")
    sizes = [g.arity for g in gs]

    def fn(w):
        parts = []
        pos = 0
        for g, s in zip(gs, sizes):
            v = g(w[pos:pos + s])
            if not v:
                return {}
            parts.append(list(v.items()))
            pos += s
        acc: Vec = {}
        for combo in itertools.product(*parts):
            c = 1
            for _, x in combo:
                c *= x
            _add(acc, f(tuple(y for y, _ in combo)), c)
        return acc
    return Operation(sum(sizes), fn, f"{f.name}({'⊗'.join(g.name for g in gs)})")


def star(f: Operation, g: Operation) -> Operation:
    p, q = f.arity, g.arity
    terms = []
    for r in range(p):
        t = p - 1 - r
        terms.append(((-1) ** (r + q * t), insert(f, g, r)))
    return linear(terms, f"{f.name}⋆{g.name}")


def bracket(f: Operation, g: Operation) -> Operation:
    p, q = f.arity, g.arity
    fg, gf = star(f, g), star(g, f)
    s = (-1) ** (p * q)

    def fn(w):
        acc: Vec = {}
        _add(acc, fg(w), -1)
        _add(acc, gf(w), -s)
        return acc
    return Operation(p + q - 1, fn, f"[{f.name},{g.name}]")


gerstenhaber_bracket = bracket


def coboundary(f: Operation) -> Operation:
    """Hochschild differential with coefficients in B, three-part formula, no Koszul signs."""
    n = f.arity

    def fn(w):
        acc: Vec = {}
        for y, c in f(w[1:]).items():
            z = alg.multiply(w[0], y)
            if z is not None:
                acc[z] = acc.get(z, 0) + c
        for i in range(1, n + 1):
            z = alg.multiply(w[i - 1], w[i])
            if z is not None:
                _add(acc, f(w[:i - 1] + (z,) + w[i + 1:]), (-1) ** i)
        for y, c in f(w[:-1]).items():
            z = alg.multiply(y, w[-1])
            if z is not None:
                acc[z] = acc.get(z, 0) + (-1) ** (n + 1) * c
        return acc
    return Operation(n + 1, fn, f"δ{f.name}")


def max_abs(op: Operation, words: Iterable[Word]) -> float:
    best = 0.0
    for w in words:
        for v in op(w).values():
            best = max(best, abs(v))
    return best


def max_difference(a: Operation, b: Operation, words: Iterable[Word], scale: complex = 1) -> float:
    best = 0.0
    for w in words:
        va, vb = a(w), b(w)
        for y in set(va) | set(vb):
            best = max(best, abs(va.get(y, 0) - scale * vb.get(y, 0)))
    return best


def random_cochain(n: int, m: int, rng: random.Random, name: str = "") -> Operation:
    """Random cochain in C^n_{(m)}(B, B) with Gaussian complex coefficients."""
    from .homology import cochain_basis

    entries: dict[Word, Vec] = {}
    for w, y in cochain_basis("B", n, m):
        entries.setdefault(w, {})[y] = complex(rng.gauss(0, 1), rng.gauss(0, 1))
    return table(n, entries, name or f"ψ{n}")
