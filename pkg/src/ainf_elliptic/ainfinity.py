"""The A-infinity structure on B attached to C = C/(Z + τZ), its gauge by f_3,
and the recovery of j from the transformed products.

Higher products follow four skeleton patterns.  Writing a word as runs of ξ or
ξ_L separated by its θ/η letters,

    ξ^a θ ξ_L^b η ξ^c θ ξ_L^d            -> M(a,b,c,d) θ
    ξ_L^a η ξ^b θ ξ_L^c η ξ^d            -> M(a,b,c,d) η
    ξ^a θ ξ_L^b η ξ^c θ ξ_L^d η ξ^e      -> M(a+e+1,b,c,d) id_O
    ξ_L^a η ξ^b θ ξ_L^c η ξ^d θ ξ_L^e    -> M(a+e+1,b,c,d) id_L

and every other word, and every odd arity, gives zero.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property

from . import algebra as alg
from . import cochains as co
from .algebra import ETA, ID_L, ID_O, THETA, XI, XI_L, parse_combination, parse_word
from .eisenstein import EisensteinContext, j_from_e4_e6

Word = tuple[int, ...]

# the special tensors of the two functionals
X_TENSOR = parse_combination(
    "-ηθη(ξ)θ(ξ_L) - (ξ_L)η(ξ)θηθ + (ξ_L)ηθηθ(ξ_L) + ηθηθ(ξ_L)^2 - ηθ(ξ_L)^2ηθ"
    " + (ξ_L)^2ηθηθ - η(ξ)θηθ(ξ_L) - (ξ_L)ηθη(ξ)θ"
)
W_BETA = parse_word("θ(ξ_L)η(ξ)θ(ξ_L)")
W_GAMMA = parse_word("η(ξ)θ(ξ_L)^2η(ξ)θ")

# f_3 = M(1,0,0,0) * Σ sign [w]* ⊗ y
F3_TABLE = (
    ("η(ξ)^2", ETA, 1), ("(ξ_L)^2η", ETA, -1), ("(ξ_L)η(ξ)", ETA, -1),
    ("θ(ξ_L)^2", THETA, 1), ("(ξ)^2θ", THETA, -1), ("ξθξ_L", THETA, -1),
    ("ξθη", ID_O, 1), ("θ(ξ_L)η", ID_O, 1), ("θη(ξ)", ID_O, -1),
    ("(ξ_L)ηθ", ID_L, 1), ("η(ξ)θ", ID_L, 1), ("ηθξ_L", ID_L, -1),
)

# β(m6') / (t^4 e4) and γ(m8') / (t^6 e6) as computed here
BETA_M6_FACTOR = -15
GAMMA_M8_FACTOR = -35

_PATTERNS = {
    (THETA, ETA, THETA): THETA,
    (ETA, THETA, ETA): ETA,
    (THETA, ETA, THETA, ETA): ID_O,
    (ETA, THETA, ETA, THETA): ID_L,
}


def skeleton(w: Word) -> tuple[tuple[int, ...], list[int]]:
    """θ/η letters of w and the lengths of the ξ/ξ_L runs around them."""
    skel: list[int] = []
    runs = [0]
    for a in w:
        if a in (THETA, ETA):
            skel.append(a)
            runs.append(0)
        else:
            runs[-1] += 1
    return tuple(skel), runs


def m_coeff(ctx: EisensteinContext, a: int, b: int, c: int, d: int) -> complex:
    """M(a,b,c,d) = (-1)^C(s+1,2) t^{s+1} g_{a+c,b+d} / (a!b!c!d!), s = a+b+c+d."""
    s = a + b + c + d
    sign = -1 if math.comb(s + 1, 2) % 2 else 1
    fact = math.factorial(a) * math.factorial(b) * math.factorial(c) * math.factorial(d)
    return sign * ctx.t ** (s + 1) * ctx.g(a + c, b + d) / fact


def m_n_apply(ctx: EisensteinContext, w: Word) -> dict[int, complex]:
    """Value of m_n on a word of B_+ (n = len(w) >= 3)."""
    n = len(w)
    if n % 2 or n < 3 or not alg.is_composable(w):
        return {}
    skel, runs = skeleton(w)
    y = _PATTERNS.get(skel)
    if y is None:
        return {}
    if len(skel) == 3:
        coef = m_coeff(ctx, *runs)
    else:
        a, b, c, d, e = runs
        coef = m_coeff(ctx, a + e + 1, b, c, d)
    return {y: coef} if coef != 0 else {}


def f3_apply(ctx: EisensteinContext, w: Word) -> dict[int, complex]:
    if len(w) != 3:
        return {}
    entry = _F3.get(tuple(w))
    if entry is None:
        return {}
    y, sign = entry
    return {y: sign * m_coeff(ctx, 1, 0, 0, 0)}


_F3 = {parse_word(text): (y, s) for text, y, s in F3_TABLE}


def coeff_extract(phi: co.Operation, x: dict[Word, complex], y: int) -> complex:
    """t_x^y(φ): coefficient of y in φ(x)."""
    if not x:
        return 0j
    lengths = {len(w) for w in x}
    degrees = {alg.word_degree(w) for w in x}
    if len(lengths) != 1 or len(degrees) != 1:
        raise ValueError(f"tensor mixes lengths {sorted(lengths)} or degrees {sorted(degrees)}")
    if phi.arity not in lengths:
        raise ValueError(f"operation of arity {phi.arity} applied to words of length {lengths.pop()}")
    return complex(phi.on(x).get(y, 0))


def beta(phi: co.Operation) -> complex:
    return coeff_extract(phi, X_TENSOR, ID_L) - coeff_extract(phi, {W_BETA: 1}, THETA)


def gamma_eval(phi: co.Operation) -> complex:
    return coeff_extract(phi, {W_GAMMA: 1}, ID_L)


@dataclass
class Structure:
    """The structure (m_n) for a given τ together with the gauge f = (id, f_3).

    ``h`` optionally replaces f_3 by f_3 + δh (h a 2-cochain of internal degree -2).
    """

    ctx: EisensteinContext
    h: co.Operation | None = None

    def m(self, n: int) -> co.Operation:
        return self._m[n] if n in self._m else self._make_m(n)

    @cached_property
    def _m(self) -> dict:
        return {1: co.zero(1), 2: co.product()}

    def _make_m(self, n: int) -> co.Operation:
        op = co.Operation(n, lambda w: m_n_apply(self.ctx, w), f"m{n}")
        self._m[n] = op
        return op

    @cached_property
    def f3(self) -> co.Operation:
        base = co.Operation(3, lambda w: f3_apply(self.ctx, w), "f3")
        if self.h is None:
            return base
        return co.linear([(1, base), (1, co.coboundary(self.h))], "f3+δh")

    # ------------------------------------------------------------ m'
    def m_prime(self, n: int) -> co.Operation:
        if n not in self._mp:
            self._mp[n] = self._make_m_prime(n)
        return self._mp[n]

    @cached_property
    def _mp(self) -> dict:
        return {1: co.zero(1), 2: co.product()}

    def _make_m_prime(self, n: int) -> co.Operation:
        if n == 4:
            # m4 - δf3
            return co.linear([(1, self.m(4)), (-1, co.coboundary(self.f3))], "m4'")
        if n % 2:
            return co.zero(n)
        if n == 6:
            return co.linear([
                (1, self.m(6)),
                (1, self._f3_around(self.m(4))),
                (-1, co.tensor_apply(co.product(), [self.f3, self.f3])),
            ], "m6'")
        if n == 8:
            return co.linear([
                (1, self.m(8)),
                (1, self._f3_around(self.m(6))),
                (-1, co.linear([(1, co.insert(self.m_prime(6), self.f3, r)) for r in range(6)])),
            ], "m8'")
        return self.m_prime_generic(n)

    def _f3_around(self, g: co.Operation) -> co.Operation:
        # f3(1^2 ⊗ g - 1 ⊗ g ⊗ 1 + g ⊗ 1^2)
        return co.linear([(1, co.insert(self.f3, g, 2)), (-1, co.insert(self.f3, g, 1)),
                          (1, co.insert(self.f3, g, 0))])

    def f(self, k: int) -> co.Operation:
        if k == 1:
            return co.identity()
        if k == 3:
            return self.f3
        return co.zero(k)

    def morphism_terms(self, k: int, skip_top: bool = False):
        """(lhs, rhs) lists of (sign, operation) for the morphism relation in arity k.

        lhs: Σ (-1)^{r+st} f_u(1^r ⊗ m_s ⊗ 1^t);  rhs: Σ (-1)^s m'_r(f_{i_1} ⊗ ... ⊗ f_{i_r}).
        With ``skip_top`` the term m'_k(f_1 ⊗ ... ⊗ f_1) is left out of rhs.
        """
        lhs = []
        for s in range(2, k + 1):
            for r in range(0, k - s + 1):
                t = k - s - r
                u = r + 1 + t
                if u not in (1, 3):
                    continue
                if s % 2 and s > 2:
                    continue
                lhs.append(((-1) ** (r + s * t), co.insert(self.f(u), self.m(s), r)))
        rhs = []
        for parts in _compositions(k, (1, 3)):
            r = len(parts)
            if r == 1 or (r == k and skip_top):
                continue
            if r % 2 and r > 2:
                continue
            sgn = sum((r - 1 - j) * (parts[j] - 1) for j in range(r - 1))
            rhs.append(((-1) ** sgn, co.tensor_apply(self.m_prime(r), [self.f(i) for i in parts])))
        return lhs, rhs

    def m_prime_generic(self, n: int) -> co.Operation:
        """m'_n solved from the morphism relation in arity n."""
        lhs, rhs = self.morphism_terms(n, skip_top=True)
        terms = [(c, op) for c, op in lhs] + [(-c, op) for c, op in rhs]
        return co.linear(terms, f"m{n}'(generic)")

    def morphism_residual(self, k: int, words=None) -> float:
        lhs, rhs = self.morphism_terms(k)
        if not lhs and not rhs:
            return 0.0
        total = co.linear([(c, op) for c, op in lhs] + [(-c, op) for c, op in rhs])
        return co.max_abs(total, words if words is not None else alg.all_words(k))

    # ------------------------------------------------- scalar outputs
    def beta_m6(self) -> complex:
        return beta(self.m_prime(6))

    def gamma_m8(self) -> complex:
        return gamma_eval(self.m_prime(8))

    def alpha(self) -> complex:
        # t_x = -10 t^4 e4 and the θ-term is +5 t^4 e4, so β(m6') = -15 t^4 e4
        return self.beta_m6() / BETA_M6_FACTOR

    def gamma(self) -> complex:
        return self.gamma_m8() / GAMMA_M8_FACTOR

    def recover_j(self) -> complex:
        # α = t^4 e4 and γ = t^6 e6; the powers of t cancel in j
        return j_from_e4_e6(self.alpha(), self.gamma())


def _compositions(k: int, parts: tuple[int, ...]):
    if k == 0:
        yield ()
        return
    for p in parts:
        if p <= k:
            for rest in _compositions(k - p, parts):
                yield (p,) + rest


# --------------------------------------------------------- convenience API

def gauge_m_prime(ctx: EisensteinContext, w: Word, order: int) -> dict[int, complex]:
    if len(w) != order:
        raise ValueError(f"word of length {len(w)} for m'_{order}")
    return Structure(ctx).m_prime(order)(tuple(w))


def delta_f3_vs_m4(ctx: EisensteinContext, words=None) -> dict:
    """Calibrate ε with δf3 = ε m4 on the first word where m4 is nonzero, then report the max residual."""
    S = Structure(ctx)
    words = words if words is not None else alg.all_words(4)
    d, m4 = co.coboundary(S.f3), S.m(4)
    eps = None
    for w in words:
        a, b = d(w), m4(w)
        if b:
            y = next(iter(b))
            eps = 1 if abs(a.get(y, 0) - b[y]) <= abs(a.get(y, 0) + b[y]) else -1
            break
    if eps is None:
        raise RuntimeError("m4 vanishes identically; nothing to calibrate against")
    res = co.max_difference(d, m4, words, eps)
    return {"epsilon": eps, "residual": res, "words": len(words)}


def stasheff_operation(ops, k: int, convention: str = "keller") -> co.Operation:
    """Σ_{r+s+t=k} sign · m_{r+1+t}(1^r ⊗ m_s ⊗ 1^t) with m_1 = 0 skipped."""
    terms = []
    for s in range(2, k):
        for r in range(0, k - s + 1):
            t = k - s - r
            u = r + 1 + t
            if u < 2:
                continue
            sign = (-1) ** (r + s * t) if convention == "keller" else 1
            terms.append((sign, co.insert(ops(u), ops(s), r)))
    return co.linear(terms, f"stasheff{k}")


def stasheff_residual(ctx: EisensteinContext, structure: str = "m", k: int = 4,
                      convention: str = "keller", S: Structure | None = None,
                      degree_cap: int | None = None) -> float:
    S = S or Structure(ctx)
    ops = S.m if structure == "m" else S.m_prime
    words = alg.all_words(k)
    if degree_cap is not None:
        words = [w for w in words if alg.word_degree(w) <= degree_cap]
    return co.max_abs(stasheff_operation(ops, k, convention), words)


def obstruction_phi_k(S: Structure, k: int, structure: str = "m") -> co.Operation:
    """φ_k = -(Σ_{3<=i<j, i+j=k+2} [m_i, m_j] + ½ [m_h, m_h]), arity k + 1."""
    ops = S.m if structure == "m" else S.m_prime
    terms = []
    for i in range(3, k):
        j = k + 2 - i
        if j < i:
            break
        c = -0.5 if i == j else -1.0
        terms.append((c, co.bracket(ops(i), ops(j))))
    if not terms:
        return co.zero(k + 1)
    return co.linear(terms, f"φ{k}")


def phi_report(S: Structure, k: int, structure: str = "m") -> dict:
    """Max |φ_k|, the cocycle residual |δφ_k| and |δm_k - φ_k|."""
    ops = S.m if structure == "m" else S.m_prime
    phi = obstruction_phi_k(S, k, structure)
    words = alg.all_words(k + 1)
    return {
        "k": k,
        "structure": structure,
        "phi_max": co.max_abs(phi, words),
        "cocycle_residual": co.max_abs(co.coboundary(phi), alg.all_words(k + 2)),
        "relation_residual": co.max_difference(co.coboundary(ops(k)), phi, words),
    }


def random_gauge(rng: random.Random, scale: float = 1.0) -> co.Operation:
    """Random h in C^2_{(-2)}(B, B)."""
    from .homology import cochain_basis

    entries: dict = {}
    for w, y in cochain_basis("B", 2, -2):
        entries.setdefault(w, {})[y] = scale * complex(rng.gauss(0, 1), rng.gauss(0, 1))
    return co.table(2, entries, "h")


def recover_j(ctx: EisensteinContext) -> complex:
    return Structure(ctx).recover_j()
