import math
import random

import pytest

from ainf_elliptic import algebra as alg
from ainf_elliptic import cochains as co
from ainf_elliptic.ainfinity import (BETA_M6_FACTOR, W_BETA, W_GAMMA, X_TENSOR, Structure, beta, coeff_extract,
                                     delta_f3_vs_m4, f3_apply, gamma_eval, gauge_m_prime, m_coeff, m_n_apply,
                                     obstruction_phi_k, phi_report, random_gauge, skeleton, stasheff_residual)
from ainf_elliptic.algebra import ETA, ID_L, ID_O, THETA, XI, XI_L, parse_word
from ainf_elliptic.eisenstein import EisensteinContext, j_direct

TAUS = ["0+1i", "0+2i", "0.3+1.2i"]
RHO = complex(0.5, math.sqrt(3) / 2)


def close(a, b, tol=1e-10):
    return abs(a - b) <= tol * max(1.0, abs(b))


def test_m_coeff_examples(ctx_generic):
    c, t = ctx_generic, ctx_generic.t
    assert close(m_coeff(c, 0, 1, 0, 0), -t ** 2 * c.g(0, 1))
    assert m_coeff(c, 1, 1, 0, 0) == 0
    lhs = -4 * m_coeff(c, 2, 1, 0, 0) + 3 * m_coeff(c, 3, 0, 0, 0) - m_coeff(c, 1, 0, 2, 0)
    assert close(lhs, -2 * t ** 4 * c.g(2, 1))


def test_skeleton():
    skel, runs = skeleton(parse_word("(ξ)^2θηξθ(ξ_L)^3"))
    assert skel == (THETA, ETA, THETA)
    assert runs == [2, 0, 1, 3]


def test_m_n_patterns(ctx_generic):
    c = ctx_generic
    assert m_n_apply(c, parse_word("θηθη")) == {ID_O: m_coeff(c, 1, 0, 0, 0)}
    assert m_n_apply(c, parse_word("ηθηθ")) == {ID_L: m_coeff(c, 1, 0, 0, 0)}
    assert m_n_apply(c, parse_word("θ(ξ_L)η(ξ)θ(ξ_L)")) == {THETA: m_coeff(c, 0, 1, 1, 1)}
    assert m_n_apply(c, parse_word("(ξ_L)η(ξ)θη")) == {ETA: m_coeff(c, 1, 1, 0, 0)} or \
        m_coeff(c, 1, 1, 0, 0) == 0
    for w in alg.all_words(5):
        assert m_n_apply(c, w) == {}


def test_m_degree_law(ctx_generic):
    S = Structure(ctx_generic)
    for n in (4, 6, 8):
        for w in alg.all_words(n):
            for y in S.m(n)(w):
                assert alg.degree(y) == alg.word_degree(w) + 2 - n


def test_f3_table(ctx_generic):
    M = m_coeff(ctx_generic, 1, 0, 0, 0)
    assert f3_apply(ctx_generic, parse_word("η(ξ)^2")) == {ETA: M}
    assert f3_apply(ctx_generic, parse_word("ξθξ_L")) == {THETA: -M}
    assert f3_apply(ctx_generic, (THETA, THETA, THETA)) == {}
    nonzero = [w for w in alg.all_words(3) if f3_apply(ctx_generic, w)]
    assert len(nonzero) == 12
    for w in nonzero:
        (y,) = f3_apply(ctx_generic, w)
        assert alg.degree(y) == alg.word_degree(w) - 2


@pytest.mark.parametrize("tau", ["0+1i", "0.3+1.2i", "0+2i"])
def test_delta_f3_is_m4(tau):
    r = delta_f3_vs_m4(EisensteinContext(tau))
    assert r["epsilon"] == 1
    assert r["residual"] < 1e-12


@pytest.mark.parametrize("tau", TAUS)
def test_m4_prime_vanishes_exactly(tau):
    S = Structure(EisensteinContext(tau))
    assert all(S.m_prime(4)(w) == {} for w in alg.all_words(4))


def test_odd_m_prime_vanish(ctx_generic):
    S = Structure(ctx_generic)
    for k in (3, 5, 7):
        assert co.max_abs(S.m_prime(k), alg.all_words(k)) == 0


def test_gauge_m_prime_length_checked(ctx_generic):
    with pytest.raises(ValueError):
        gauge_m_prime(ctx_generic, parse_word("θη"), 4)


@pytest.mark.parametrize("tau", TAUS)
def test_m6_prime_components(tau):
    c = EisensteinContext(tau)
    S = Structure(c)
    E = c.t ** 4 * c.e("e4")
    assert close(coeff_extract(S.m_prime(6), X_TENSOR, ID_L), -10 * E)
    assert close(S.m_prime(6)(W_BETA).get(THETA, 0), 5 * E)


@pytest.mark.parametrize("tau", TAUS)
def test_beta_of_m6_prime(tau):
    # β is t_x - t_w, which vanishes on coboundaries; with the two values above it is -15 t^4 e4
    c = EisensteinContext(tau)
    E = c.t ** 4 * c.e("e4")
    assert close(Structure(c).beta_m6(), BETA_M6_FACTOR * E)


@pytest.mark.parametrize("tau", TAUS)
def test_gamma_of_m8_prime(tau):
    c = EisensteinContext(tau)
    assert close(Structure(c).gamma_m8(), -35 * c.t ** 6 * c.e("e6"), 1e-9)


def test_explicit_m_prime_matches_morphism_solution(ctx_generic):
    S = Structure(ctx_generic)
    for k in (6, 8):
        assert co.max_difference(S.m_prime_generic(k), S.m_prime(k), alg.all_words(k)) < 1e-12


def test_morphism_relation(ctx_generic):
    S = Structure(ctx_generic)
    for k in range(2, 9):
        assert S.morphism_residual(k) < 1e-12


def test_m_prime_cocycles(ctx_generic):
    S = Structure(ctx_generic)
    assert co.max_abs(co.coboundary(S.m_prime(6)), alg.all_words(7)) < 1e-12
    assert co.max_abs(co.coboundary(S.m_prime(8)), alg.all_words(9)) < 1e-12


def test_functionals_vanish_on_coboundaries():
    rng = random.Random(11)
    for _ in range(20):
        assert abs(beta(co.coboundary(co.random_cochain(5, -4, rng)))) < 1e-12
        assert abs(gamma_eval(co.coboundary(co.random_cochain(7, -6, rng)))) < 1e-12


def test_functionals_see_m_prime_class(ctx_generic):
    S = Structure(ctx_generic)
    assert abs(beta(S.m_prime(6))) > 1e-3
    assert abs(gamma_eval(S.m_prime(8))) > 1e-3


def test_coeff_extract_rules(ctx_generic):
    S = Structure(ctx_generic)
    assert coeff_extract(co.zero(6), X_TENSOR, ID_L) == 0
    with pytest.raises(ValueError):
        coeff_extract(S.m_prime(6), {W_BETA: 1, parse_word("θη"): 1}, THETA)
    with pytest.raises(ValueError):
        coeff_extract(S.m_prime(6), {W_GAMMA: 1}, ID_L)


def test_special_words():
    assert W_BETA == (THETA, XI_L, ETA, XI, THETA, XI_L)
    assert W_GAMMA == (ETA, XI, THETA, XI_L, XI_L, ETA, XI, THETA)
    assert len(X_TENSOR) == 8 and {len(w) for w in X_TENSOR} == {6}


@pytest.mark.parametrize("tau", ["0+2i", "0.5+1.3i", "0.3+1.2i", "-0.4+0.95i"])
def test_recover_j(tau):
    c = EisensteinContext(tau)
    assert abs(Structure(c).recover_j() / j_direct(c) - 1) < 1e-8


def test_recover_j_special_points():
    assert abs(Structure(EisensteinContext("0+1i")).recover_j() - 1728) < 1e-6
    assert abs(Structure(EisensteinContext(RHO)).recover_j()) < 1e-6


def test_alpha_and_gamma_normalised(ctx_generic):
    S, c = Structure(ctx_generic), ctx_generic
    assert close(S.alpha(), c.t ** 4 * c.e("e4"))
    assert close(S.gamma(), c.t ** 6 * c.e("e6"), 1e-9)


def test_gauge_invariance():
    c = EisensteinContext("0.3+1.2i")
    rng = random.Random(8)
    base = Structure(c)
    for _ in range(5):
        S = Structure(c, h=random_gauge(rng))
        assert abs(S.recover_j() / base.recover_j() - 1) < 1e-10
        # the class moves by a coboundary only
        assert close(S.beta_m6(), base.beta_m6())
        assert co.max_abs(co.coboundary(S.m_prime(6)), alg.all_words(7)) < 1e-12


@pytest.mark.parametrize("k", range(3, 11))
def test_stasheff_keller_signs(k, ctx_generic):
    S = Structure(ctx_generic)
    assert stasheff_residual(ctx_generic, "m", k, S=S) < 1e-12
    assert stasheff_residual(ctx_generic, "m'", k, S=S) < 1e-12


def test_stasheff_unsigned_fails(ctx_generic):
    # the signs matter: without them arity 5 already breaks
    assert stasheff_residual(ctx_generic, "m", 5, convention="plain") > 1e-3


def test_stasheff_degree_cap(ctx_i):
    assert stasheff_residual(ctx_i, "m", 6, degree_cap=3) < 1e-12


def test_phi_k(ctx_generic):
    S = Structure(ctx_generic)
    assert co.max_abs(obstruction_phi_k(S, 3), alg.all_words(4)) == 0
    # m3' = m4' = m5' = 0 so the arity-7 obstruction of m' vanishes
    assert co.max_abs(obstruction_phi_k(S, 6, "m'"), alg.all_words(7)) == 0
    for k in range(3, 9):
        r = phi_report(S, k)
        assert r["cocycle_residual"] < 1e-12
        assert r["relation_residual"] < 1e-12


def test_scaling_with_t():
    a, b = EisensteinContext("0+1i"), EisensteinContext("0+2i")
    w = parse_word("θηθη")
    # M(1,0,0,0) = -t^2 g_{1,0}; compare after removing the t^2 factor
    ra = m_n_apply(a, w)[ID_O] / a.t ** 2
    rb = m_n_apply(b, w)[ID_O] / b.t ** 2
    assert close(ra, -a.g(1, 0)) and close(rb, -b.g(1, 0))
