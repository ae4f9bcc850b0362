"""Tabulated homology representatives and their certification.

Each entry lists one or more chains in ``C_n^{(m)}(label)`` that are expected to
represent the generator of a one-dimensional homology group; alternatives
separated by ``~`` must all be cycles with nonzero class, and equal to the
first one up to sign.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import homology as hom
from .algebra import format_word, parse_combination

_U = "η(ξ)θ(ξ_L)"  # recurring block, left vertex L
_V = "θ(ξ_L)η(ξ)"  # recurring block, left vertex O

# (label, n, m, alternatives)
TABLES: dict[str, list[tuple[str, int, int, tuple[str, ...]]]] = {
    "L": [
        ("L", 3, 2, ("η(ξ)θ",)),
        ("L", 4, 3, ("η(ξ)θξ_L", "(ξ_L)η(ξ)θ")),
        ("L", 7, 5, (_U + "η(ξ)θ",)),
        ("L", 8, 6, (_U + "η(ξ)θξ_L", "(ξ_L)" + _U + "η(ξ)θ")),
        ("L", 11, 8, (_U * 2 + "η(ξ)θ",)),
        ("L", 12, 9, (_U * 2 + "η(ξ)θξ_L", "(ξ_L)" + _U * 2 + "η(ξ)θ")),
    ],
    "O": [
        ("O", 3, 2, ("θ(ξ_L)η",)),
        ("O", 4, 3, ("θ(ξ_L)η(ξ)", "ξθ(ξ_L)η")),
        ("O", 7, 5, (_V + "θ(ξ_L)η",)),
        ("O", 8, 6, (_V * 2, "ξ" + _V + "θ(ξ_L)η")),
        ("O", 11, 8, (_V * 2 + "θ(ξ_L)η",)),
        ("O", 12, 9, (_V * 3, "ξ" + _V * 2 + "θ(ξ_L)η")),
    ],
    "eta": [
        ("eta", 1, 1, ("η",)),
        ("eta", 2, 2, ("(ξ_L)η", "η(ξ)")),
        ("eta", 5, 4, (_U + "η",)),
        ("eta", 6, 5, ("η(ξ)θ(ξ_L)^2η", _U + "η(ξ)", "(ξ_L)" + _U + "η")),
        ("eta", 9, 7, (_U * 2 + "η",)),
        ("eta", 10, 8, (_U + "η(ξ)θ(ξ_L)^2η", _U * 2 + "η(ξ)", "(ξ_L)" + _U * 2 + "η")),
        ("eta", 13, 10, (_U * 3 + "η",)),
        ("eta", 14, 11, (_U * 2 + "η(ξ)θ(ξ_L)^2η", _U * 3 + "η(ξ)", "(ξ_L)" + _U * 3 + "η")),
    ],
    "theta": [
        ("theta", 1, 0, ("θ",)),
        ("theta", 2, 1, ("ξθ", "θξ_L")),
        ("theta", 5, 3, (_V + "θ",)),
        ("theta", 6, 4, (_V + "θξ_L", "θ(ξ_L)η(ξ)^2θ", "ξ" + _V + "θ")),
        ("theta", 9, 6, (_V * 2 + "θ",)),
        ("theta", 10, 7, (_V * 2 + "θξ_L", _V + "θ(ξ_L)η(ξ)^2θ", "ξ" + _V * 2 + "θ")),
        ("theta", 13, 9, (_V * 3 + "θ",)),
        ("theta", 14, 10, (_V * 3 + "θξ_L", _V * 2 + "θ(ξ_L)η(ξ)^2θ", "ξ" + _V * 3 + "θ")),
    ],
}

# The first representatives found for C(L) via the simplex correspondence.
SIGMA = {
    (3, 2): "ηθ(ξ_L) + (ξ_L)ηθ",
    (4, 3): "ηθ(ξ_L)^2 + (ξ_L)ηθ(ξ_L)",
    (7, 5): "ηθ(ξ_L)^2ηθξ_L + ηθ(ξ_L)^3ηθ + (ξ_L)ηθ(ξ_L)ηθξ_L + (ξ_L)ηθ(ξ_L)^2ηθ",
}
SIGMA[(11, 8)] = " + ".join((
    "ηθ(ξ_L)^3ηθ(ξ_L)ηθξ_L", "ηθ(ξ_L)^2ηθ(ξ_L)^2ηθ(ξ_L)", "(ξ_L)ηθ(ξ_L)^2ηθ(ξ_L)ηθξ_L",
    "(ξ_L)ηθ(ξ_L)ηθ(ξ_L)^2ηθξ_L", "ηθ(ξ_L)^3ηθ(ξ_L)^2ηθ", "ηθ(ξ_L)^2ηθ(ξ_L)^3ηθ",
    "(ξ_L)ηθ(ξ_L)^2ηθ(ξ_L)^2ηθ",
    # the only word of this shape that closes the cycle (the printed one is two letters short)
    "(ξ_L)ηθ(ξ_L)ηθ(ξ_L)^3ηθ",
))
for _k, _src in (((8, 6), (7, 5)), ((12, 9), (11, 8))):
    SIGMA[_k] = " + ".join(t.strip() + "ξ_L" for t in SIGMA[_src].split("+"))

# sigma -/+ d(sum of words) = simpler representative; the sign depends on the orientation of d
SIGMA_REDUCTIONS = [
    ((3, 2), ("ηθηθ",), "η(ξ)θ"),
    ((4, 3), ("ηθηθξ_L",), "η(ξ)θξ_L"),
    ((7, 5), ("ηθηθ(ξ_L)ηθξ_L", "ηθηθ(ξ_L)^2ηθ", "η(ξ)θ(ξ_L)ηθηθ"), "η(ξ)θ(ξ_L)η(ξ)θ"),
    ((11, 8), ("ηθηθ(ξ_L)^2ηθ(ξ_L)ηθξ_L", "η(ξ)θ(ξ_L)ηθηθ(ξ_L)ηθξ_L", "η(ξ)θ(ξ_L)ηθηθ(ξ_L)^2ηθ",
               "η(ξ)θ(ξ_L)η(ξ)θ(ξ_L)ηθηθ"), "η(ξ)θ(ξ_L)η(ξ)θ(ξ_L)η(ξ)θ"),
]


@dataclass
class RepresentativeCheck:
    label: str
    n: int
    m: int
    text: str
    is_cycle: bool
    nonzero: bool
    sign: int | None  # relative to the first alternative

    @property
    def ok(self) -> bool:
        return self.is_cycle and self.nonzero and self.sign is not None

    def record(self) -> dict:
        return {"label": self.label, "n": self.n, "m": self.m, "representative": self.text,
                "cycle": self.is_cycle, "nonzero_class": self.nonzero, "sign": self.sign, "pass": self.ok}


def _vector(label: str, n: int, m: int, text: str) -> dict[int, int]:
    combo = parse_combination(text)
    for w in combo:
        if len(w) != n:
            raise ValueError(f"{format_word(w)} has length {len(w)}, expected {n}")
    return hom.chain_vector(label, n, m, combo)


def certify_entry(label: str, n: int, m: int, alternatives, mode: str = "modular",
                  seed: int = 0) -> list[RepresentativeCheck]:
    out = []
    first = _vector(label, n, m, alternatives[0])
    for text in alternatives:
        v = _vector(label, n, m, text)
        chk = hom.verify_class(v, "chain", label, n, m, mode, seed)
        sign = hom.same_class_sign(v, first, "chain", label, n, m, mode, seed) if chk.is_nonzero_class else None
        out.append(RepresentativeCheck(label, n, m, text, chk.is_cycle, chk.is_nonzero_class, sign))
    return out


def certify_table(name: str, mode: str = "modular", seed: int = 0, nmax: int | None = None):
    rows: list[RepresentativeCheck] = []
    for label, n, m, alts in TABLES[name]:
        if nmax is not None and n > nmax:
            continue
        rows.extend(certify_entry(label, n, m, alts, mode, seed))
    return rows


def certify_sigma(mode: str = "modular", seed: int = 0) -> list[RepresentativeCheck]:
    return [c for (n, m), text in SIGMA.items() for c in certify_entry("L", n, m, (text,), mode, seed)]


def check_sigma_reductions() -> list[tuple[tuple[int, int], int | None]]:
    """Find s with ``sigma + s * d(...) = rep`` exactly as chains; None if neither sign works."""
    out = []
    for key, bounded, rep in SIGMA_REDUCTIONS:
        bd: dict = {}
        for text in bounded:
            for w, c in hom.boundary_of("L", parse_combination(text)).items():
                bd[w] = bd.get(w, 0) + c
        found = None
        for s in (1, -1):
            lhs = dict(parse_combination(SIGMA[key]))
            for w, c in bd.items():
                lhs[w] = lhs.get(w, 0) + s * c
            if {w: c for w, c in lhs.items() if c} == parse_combination(rep):
                found = s
                break
        out.append((key, found))
    return out


def sigma_class_signs(mode: str = "modular", seed: int = 0) -> dict[tuple[int, int], int | None]:
    """Sign s with sigma ~ s * (first updated representative), per location."""
    updated = {(n, m): alts[0] for _, n, m, alts in TABLES["L"]}
    out = {}
    for (n, m), text in SIGMA.items():
        out[n, m] = hom.same_class_sign(_vector("L", n, m, text), _vector("L", n, m, updated[n, m]),
                                        "chain", "L", n, m, mode, seed)
    return out
