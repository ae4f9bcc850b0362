"""The graded algebra B = Ext*(O + L, O + L) as a two-vertex quiver algebra.

Basis elements of B are addressed by small integers::

    THETA=0  ETA=1  XI=2  XI_L=3  ID_O=4  ID_L=5

The first four span B_+ and are the letters of path words.  A path word is a
tuple of letters ``(a_1, ..., a_n)`` with ``right(a_i) == left(a_{i+1})``;
these are exactly the nonzero pure tensors of B_+^{(x)n} over R = <id_O, id_L>.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

O, L = 0, 1
VERTEX_NAMES = ("O", "L")

THETA, ETA, XI, XI_L, ID_O, ID_L = range(6)
GENERATORS = (THETA, ETA, XI, XI_L)
BASIS = (ID_O, ID_L, THETA, ETA, XI, XI_L)

NAMES = ("θ", "η", "ξ", "ξ_L", "id_O", "id_L")
ASCII_NAMES = ("theta", "eta", "xi", "xiL", "idO", "idL")

# (left vertex, right vertex, degree)
_SHAPE = {
    THETA: (O, L, 0),
    ETA: (L, O, 1),
    XI: (O, O, 1),
    XI_L: (L, L, 1),
    ID_O: (O, O, 0),
    ID_L: (L, L, 0),
}


def left(x: int) -> int:
    return _SHAPE[x][0]


def right(x: int) -> int:
    return _SHAPE[x][1]


def degree(x: int) -> int:
    return _SHAPE[x][2]


def is_unit(x: int) -> bool:
    return x == ID_O or x == ID_L


def unit_at(v: int) -> int:
    return ID_O if v == O else ID_L


def multiply(a: int, b: int) -> int | None:
    """Product of two basis elements of B; ``None`` stands for zero."""
    if right(a) != left(b):
        return None
    if is_unit(a):
        return b
    if is_unit(b):
        return a
    if a == THETA and b == ETA:
        return XI
    if a == ETA and b == THETA:
        return XI_L
    return None


# factorisations g1*g2 = g inside B_+, used to "un-merge" letters
FACTORS = {XI: ((THETA, ETA),), XI_L: ((ETA, THETA),), THETA: (), ETA: ()}


# ---------------------------------------------------------------- path words

def word_degree(w: Iterable[int]) -> int:
    return sum(degree(a) for a in w)


def word_left(w: tuple[int, ...]) -> int:
    return left(w[0])


def word_right(w: tuple[int, ...]) -> int:
    return right(w[-1])


def is_composable(w: Iterable[int]) -> bool:
    prev = None
    for a in w:
        if a not in GENERATORS:
            return False
        if prev is not None and right(prev) != left(a):
            return False
        prev = a
    return True


@lru_cache(maxsize=None)
def enumerate_words(n: int, m: int, lv: int | None = None, rv: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All composable words of length ``n`` and internal degree ``m``.

    Optional endpoint filters ``lv``/``rv`` restrict the left and right vertex.
    Output is lexicographic in the letter order θ < η < ξ < ξ_L.
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    n_theta = n - m
    if n_theta < 0 or n_theta > n:
        return ()
    out: list[tuple[int, ...]] = []
    buf: list[int] = []

    def rec(pos: int, v: int, thetas_left: int) -> None:
        if pos == n:
            if thetas_left == 0 and (rv is None or v == rv):
                out.append(tuple(buf))
            return
        remaining = n - pos
        for g in GENERATORS:
            if left(g) != v:
                continue
            t = thetas_left - (g == THETA)
            if t < 0 or t > remaining - 1:
                continue
            buf.append(g)
            rec(pos + 1, right(g), t)
            buf.pop()

    starts = (O, L) if lv is None else (lv,)
    for v in starts:
        rec(0, v, n_theta)
    out.sort()
    return tuple(out)


def all_words(n: int, lv: int | None = None, rv: int | None = None) -> list[tuple[int, ...]]:
    """Every composable word of length n, grouped by nothing, in canonical order."""
    ws: list[tuple[int, ...]] = []
    for m in range(0, n + 1):
        ws.extend(enumerate_words(n, m, lv, rv))
    ws.sort()
    return ws


def format_word(w: Iterable[int], ascii: bool = False) -> str:
    names = ASCII_NAMES if ascii else NAMES
    w = tuple(w)
    if not w:
        return "()"
    return (" " if ascii else "·").join(names[a] for a in w)


_TOKEN = re.compile(
    r"(id_O|id_L|idO|idL|theta|eta|xi_L|xiL|xi|ξ_L|ξL|θ|η|ξ)(?:\^(\d+))?"
)
_ALIASES = {
    "theta": THETA, "θ": THETA,
    "eta": ETA, "η": ETA,
    "xi": XI, "ξ": XI,
    "xiL": XI_L, "xi_L": XI_L, "ξ_L": XI_L, "ξL": XI_L,
    "idO": ID_O, "id_O": ID_O, "idL": ID_L, "id_L": ID_L,
}


def parse_word(text: str) -> tuple[int, ...]:
    """Parse e.g. ``"η(ξ)θ(ξ_L)^2"`` or ``"eta xi theta xiL^2"``."""
    cleaned = re.sub(r"[()\s⊗*·]", "", text)
    pos = 0
    letters: list[int] = []
    while pos < len(cleaned):
        mt = _TOKEN.match(cleaned, pos)
        if mt is None:
            raise ValueError(f"cannot parse word {text!r} at {cleaned[pos:]!r}")
        letters.extend([_ALIASES[mt.group(1)]] * int(mt.group(2) or 1))
        pos = mt.end()
    return tuple(letters)


def parse_combination(text: str) -> dict[tuple[int, ...], int]:
    """Parse a signed integer combination of words, ``"ηθξ_L + ξ_Lηθ - 2 θξ_Lη"``."""
    text = text.replace("−", "-")
    out: dict[tuple[int, ...], int] = {}
    for sign, coef, body in re.findall(r"([+-]?)\s*(\d*)\s*([^+-]+)", text):
        body = body.strip()
        if not body:
            continue
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        w = parse_word(body)
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


# ------------------------------------------------------- coefficient bimodules

@dataclass(frozen=True)
class CoefficientBimodule:
    """A subquotient N/K of B, both N and K spanned by basis elements of B.

    The basis of the module is ``N \\ K`` in the canonical order of ``BASIS``;
    actions are the products of B followed by projection (anything landing
    in K, or outside N, is zero).
    """

    name: str
    basis: tuple[int, ...]
    killed: frozenset = field(default_factory=frozenset)
    description: str = ""

    def __post_init__(self):
        span = set(self.basis) | set(self.killed)
        for g in BASIS:
            for y in span:
                for z in (multiply(g, y), multiply(y, g)):
                    if z is not None and z not in span:
                        raise ValueError(f"{self.name}: not closed under the action of B")
        for g in BASIS:
            for y in self.killed:
                for z in (multiply(g, y), multiply(y, g)):
                    if z is not None and z not in self.killed:
                        raise ValueError(f"{self.name}: killed part is not a sub-bimodule")

    @property
    def index(self) -> dict[int, int]:
        return {y: i for i, y in enumerate(self.basis)}

    def act_left(self, g: int, y: int) -> int | None:
        z = multiply(g, y)
        return z if z in self.basis else None

    def act_right(self, y: int, g: int) -> int | None:
        z = multiply(y, g)
        return z if z in self.basis else None

    def targets(self, deg: int, lv: int, rv: int) -> list[int]:
        return [y for y in self.basis if degree(y) == deg and left(y) == lv and right(y) == rv]


def bimodule_action(M: CoefficientBimodule, side: str, g: int, y: int) -> int | None:
    if side == "left":
        return M.act_left(g, y)
    if side == "right":
        return M.act_right(y, g)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _ordered(*xs: int) -> tuple[int, ...]:
    return tuple(x for x in BASIS if x in xs)


MODULES: dict[str, CoefficientBimodule] = {
    m.name: m
    for m in (
        CoefficientBimodule("B", BASIS, description="B itself"),
        CoefficientBimodule("B1", _ordered(ETA, XI, XI_L), description="degree-one ideal B_1"),
        CoefficientBimodule("B0", _ordered(ID_O, ID_L, THETA), frozenset({ETA, XI, XI_L}),
                            description="B_0 identified with B/B_1"),
        CoefficientBimodule("ideal", _ordered(XI, XI_L), description="the ideal (ξ_L, ξ)"),
        CoefficientBimodule("eta", (ETA,), frozenset({XI, XI_L}), description="B_1/(ξ_L, ξ) = <η>"),
        CoefficientBimodule("theta", (THETA,), frozenset({ETA, XI, XI_L}), description="B_+/B_1 = <θ>"),
        CoefficientBimodule("ids", _ordered(ID_O, ID_L), frozenset({THETA, ETA, XI, XI_L}),
                            description="B/B_+ = <id_L, id_O>"),
        CoefficientBimodule("xiL", (XI_L,), description="the ideal (ξ_L)"),
        CoefficientBimodule("xi", (XI,), description="the ideal (ξ)"),
        CoefficientBimodule("idL", (ID_L,), frozenset({THETA, ETA, XI, XI_L}),
                            description="<id_L> inside B/B_+"),
        CoefficientBimodule("idO", (ID_O,), frozenset({THETA, ETA, XI, XI_L}),
                            description="<id_O> inside B/B_+"),
    )
}


def get_module(name: str) -> CoefficientBimodule:
    try:
        return MODULES[name]
    except KeyError:
        raise KeyError(f"unknown coefficient module {name!r}; choose from {sorted(MODULES)}") from None
