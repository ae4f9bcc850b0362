"""The gap-two complexes Δ[n]: simplices are subsets of {1..n} whose elements
differ pairwise by at least 2.  Their reduced homology runs through
point, S^k, S^k as n = 3k+1, 3k+2, 3k+3.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import SparseMatrix, certified_rank

Simplex = tuple[int, ...]


@dataclass
class GapComplex:
    n: int
    # faces[d] = simplices with d+1 vertices, sorted; faces[-1] is the empty simplex
    faces: dict[int, list[Simplex]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return max(self.faces)

    def index(self, d: int) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.faces.get(d, []))}

    def simplices(self) -> list[Simplex]:
        return [s for d in sorted(self.faces) if d >= 0 for s in self.faces[d]]


def _gap_subsets(n: int, size: int, start: int = 1):
    if size == 0:
        yield ()
        return
    for i in range(start, n + 1):
        for rest in _gap_subsets(n, size - 1, i + 2):
            yield (i,) + rest


def build_delta_complex(n: int) -> GapComplex:
    if n < 1:
        raise ValueError("Δ[n] needs n >= 1")
    K = GapComplex(n)
    size = 0
    while True:
        faces = list(_gap_subsets(n, size))
        if not faces:
            break
        K.faces[size - 1] = faces
        size += 1
    return K


def is_face(n: int, s: Simplex) -> bool:
    return all(1 <= v <= n for v in s) and all(b - a >= 2 for a, b in zip(s, s[1:]))


def boundary_matrix(K: GapComplex, d: int) -> SparseMatrix:
    """∂_d : C_d -> C_{d-1} (augmented, so ∂_0 maps vertices to the empty simplex)."""
    src, dst = K.faces.get(d, []), K.index(d - 1)
    entries = {}
    for j, s in enumerate(src):
        for i in range(len(s)):
            entries[dst[s[:i] + s[i + 1:]], j] = (-1) ** i
    return SparseMatrix.from_dict(len(dst), len(src), entries)


def boundary_squared_zero(K: GapComplex) -> bool:
    return all(boundary_matrix(K, d - 1).matmul(boundary_matrix(K, d)).is_zero()
               for d in range(1, K.dim + 1))


def reduced_homology_dims(K: GapComplex, mode: str = "exact") -> list[int]:
    """[dim H̃_0, ..., dim H̃_dim] over Q."""
    ranks = {d: certified_rank(boundary_matrix(K, d), mode).rank for d in range(0, K.dim + 2)}
    return [len(K.faces[d]) - ranks[d] - ranks[d + 1] for d in range(0, K.dim + 1)]


def expected_homology(n: int) -> tuple[int, ...] | None:
    """Degrees with nonzero reduced homology (each one-dimensional): () for a point, (k,) for S^k."""
    k, r = divmod(n - 1, 3)
    return () if r == 0 else (k,)


def matches_pattern(n: int, dims: list[int]) -> bool:
    want = expected_homology(n)
    return all(dims[d] == (1 if d in want else 0) for d in range(len(dims))) and \
        all(d < len(dims) for d in want)


def _vector(K: GapComplex, d: int, chain: dict[Simplex, int]) -> dict[int, int]:
    idx = K.index(d)
    return {idx[s]: c for s, c in chain.items() if c}


def is_nonzero_class(K: GapComplex, d: int, chain: dict[Simplex, int], mode: str = "exact") -> tuple[bool, bool]:
    """(is a reduced cycle, has nonzero class)."""
    v = _vector(K, d, chain)
    out = boundary_matrix(K, d)
    bd: dict[int, int] = {}
    for r, c, x in out.entries:
        if c in v:
            bd[r] = bd.get(r, 0) + x * v[c]
    cycle = not any(bd.values())
    inc = boundary_matrix(K, d + 1)
    r0 = certified_rank(inc, mode).rank
    r1 = certified_rank(inc.hstack(v), mode).rank
    return cycle, cycle and r1 == r0 + 1


def verify_sphere_class(n: int, chain, mode: str = "exact") -> dict:
    """Search the sign assignments of ``chain`` for a nonzero reduced homology class.

    ``chain`` is a list of (simplex, sign) where sign is +1, -1 or None for an
    undetermined ±.  If no sign is given at all, the first one is fixed to +1
    (a class and its negative are equally good).
    """
    K = build_delta_complex(n)
    simplices = [tuple(sorted(s)) for s, _ in chain]
    for s in simplices:
        if not is_face(n, s):
            raise ValueError(f"{set(s)} is not a simplex of Δ[{n}]")
    dims = {len(s) - 1 for s in simplices}
    if len(dims) != 1:
        raise ValueError("chain mixes simplices of different dimensions")
    d = dims.pop()
    free = [i for i, (_, sg) in enumerate(chain) if sg is None]
    lead = (1,) if free and len(free) == len(chain) else ()
    tried = 0
    for bits in itertools.product((1, -1), repeat=len(free) - len(lead)):
        signs = [sg for _, sg in chain]
        for i, b in zip(free, lead + bits):
            signs[i] = b
        tried += 1
        combo = {s: c for s, c in zip(simplices, signs)}
        cycle, nonzero = is_nonzero_class(K, d, combo, mode)
        if nonzero:
            return {"n": n, "dimension": d, "found": True, "signs": signs, "assignments_tried": tried}
    return {"n": n, "dimension": d, "found": False, "signs": None, "assignments_tried": tried}


def _pm(simplices):
    return [(s, 1 if i == 0 else None) for i, s in enumerate(simplices)]


POINT_PAIR = [((1,), 1), ((2,), -1)]
LOOP = _pm([(1, 5), (1, 4), (2, 5), (2, 4)])
CONE_LOOP = _pm([(1, 5, 7), (1, 4, 7), (2, 5, 7), (2, 4, 7), (1, 5, 8), (1, 4, 8), (2, 5, 8), (2, 4, 8)])

# (name, chain, complexes it should represent)
REPRESENTATIVES = [
    ("{1}-{2}", POINT_PAIR, (2, 3)),
    ("loop", LOOP, (5, 6)),
    ("cone over loop", CONE_LOOP, (8, 9)),
]


def format_simplex(s: Simplex) -> str:
    return "{" + ",".join(map(str, s)) + "}"
