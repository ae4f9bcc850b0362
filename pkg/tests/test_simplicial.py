import pytest

from ainf_elliptic.simplicial import (REPRESENTATIVES, boundary_squared_zero, build_delta_complex, expected_homology,
                                     format_simplex, is_face, matches_pattern, reduced_homology_dims,
                                     verify_sphere_class)


def test_small_complexes():
    assert build_delta_complex(2).faces.get(1, []) == []
    assert build_delta_complex(3).faces[1] == [(1, 3)]
    K = build_delta_complex(5)
    assert K.faces[1] == [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
    assert K.faces[2] == [(1, 3, 5)]
    assert K.dim == 2


def test_face_counts_are_fibonacci():
    # the number of gap-two subsets of {1..n} is F(n+2)
    fib = [1, 1]
    while len(fib) < 16:
        fib.append(fib[-1] + fib[-2])
    for n in range(1, 13):
        K = build_delta_complex(n)
        assert sum(len(v) for v in K.faces.values()) == fib[n + 1]


def test_bad_n():
    with pytest.raises(ValueError):
        build_delta_complex(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_homology_pattern(n):
    K = build_delta_complex(n)
    assert boundary_squared_zero(K)
    dims = reduced_homology_dims(K)
    assert matches_pattern(n, dims), dims


def test_modular_homology_agrees():
    for n in (7, 10, 11):
        K = build_delta_complex(n)
        assert reduced_homology_dims(K, "modular") == reduced_homology_dims(K, "exact")


def test_expected_homology():
    assert [expected_homology(n) for n in range(1, 7)] == [(), (0,), (0,), (), (1,), (1,)]


@pytest.mark.parametrize("name,chain,ns", REPRESENTATIVES)
def test_representatives(name, chain, ns):
    for n in ns:
        r = verify_sphere_class(n, chain)
        assert r["found"], (name, n)
        assert r["dimension"] == expected_homology(n)[0]


def test_loop_signs():
    r = verify_sphere_class(5, REPRESENTATIVES[1][1])
    assert r["signs"] == [1, -1, -1, 1]


def test_loop_is_not_a_class_in_point_case():
    # Δ[7] is contractible, so no sign choice works
    assert not verify_sphere_class(7, REPRESENTATIVES[1][1])["found"]


def test_non_face_rejected():
    assert not is_face(4, (1, 2))
    with pytest.raises(ValueError):
        verify_sphere_class(4, [((1, 2), 1)])
    with pytest.raises(ValueError):
        verify_sphere_class(6, [((1, 3), 1), ((5,), None)])


def test_format_simplex():
    assert format_simplex((1, 4, 7)) == "{1,4,7}"
