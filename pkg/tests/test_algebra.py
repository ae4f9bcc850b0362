import pytest

from ainf_elliptic import algebra as alg
from ainf_elliptic.algebra import ETA, ID_L, ID_O, THETA, XI, XI_L


def test_products():
    assert alg.multiply(THETA, ETA) == XI
    assert alg.multiply(ETA, THETA) == XI_L
    assert alg.multiply(ID_O, THETA) == THETA
    assert alg.multiply(THETA, ID_L) == THETA
    assert alg.multiply(XI, THETA) is None
    assert alg.multiply(THETA, THETA) is None
    assert alg.multiply(ETA, XI) is None
    # composable but zero
    assert alg.multiply(XI, XI) is None


def test_degrees_and_vertices():
    assert [alg.degree(x) for x in (THETA, ETA, XI, XI_L, ID_O, ID_L)] == [0, 1, 1, 1, 0, 0]
    assert (alg.left(THETA), alg.right(THETA)) == (alg.O, alg.L)
    assert (alg.left(ETA), alg.right(ETA)) == (alg.L, alg.O)


def test_parse_word_forms():
    w = alg.parse_word("η(ξ)θ(ξ_L)^2")
    assert w == (ETA, XI, THETA, XI_L, XI_L)
    assert alg.parse_word("eta xi theta xiL xiL") == w
    assert alg.parse_word("η⊗ξ⊗θ⊗ξ_L⊗ξ_L") == w
    assert alg.format_word(w) == "η·ξ·θ·ξ_L·ξ_L"


def test_parse_combination_signs():
    c = alg.parse_combination("ηθ(ξ_L) + (ξ_L)ηθ - 2ηθξ_L")
    assert c == {(ETA, THETA, XI_L): -1, (XI_L, ETA, THETA): 1}


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        alg.parse_word("ηgefθ")


def test_enumerate_words_are_composable_with_degree():
    for n in range(1, 6):
        for m in range(0, n + 1):
            for w in alg.enumerate_words(n, m):
                assert len(w) == n
                assert alg.is_composable(w)
                assert alg.word_degree(w) == m
                assert not any(alg.is_unit(a) for a in w)


def test_word_counts_match_brute_force():
    import itertools
    for n in range(1, 6):
        brute = [w for w in itertools.product(alg.GENERATORS, repeat=n) if alg.is_composable(w)]
        assert sorted(brute) == sorted(alg.all_words(n))


def test_modules_closed_under_action():
    for name in ("B", "B0", "B1", "ideal", "eta", "theta", "ids"):
        M = alg.get_module(name)
        for y in M.basis:
            for g in alg.BASIS:
                for side in ("left", "right"):
                    z = alg.bimodule_action(M, side, g, y)
                    assert z is None or z in M.basis


def test_unknown_module():
    with pytest.raises((KeyError, ValueError)):
        alg.get_module("nope")
