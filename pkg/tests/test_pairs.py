import random

import pytest

from liesuper.core import (
    LieSuperalgebra,
    NotNilpotentError,
    as_ideal,
    commutator,
    derived_subalgebra,
    direct_sum,
    whole,
)
from liesuper.families import abelian, coordinate_ideals, heisenberg_even, heisenberg_odd
from liesuper.linalg import SuperDim
from liesuper.pairs import (
    exterior_center,
    exterior_product_pair,
    extend_to_pair,
    is_capable_pair,
    multiplier,
    multiplier_central_ideal,
    multiplier_pair,
    multiplier_pair_basis,
    permuted,
    present,
)
from liesuper.report import representative_survives


def degree_slice(P, d):
    return [j for j in range(len(P.F)) if P.F.degrees[j] == d]


def r_in_degree(P, d):
    cols = set(degree_slice(P, d))
    return sum(1 for v in P.R.basis() if set(v) <= cols)


# worked examples


def test_e1_heis_10():
    H = heisenberg_even(1, 0)
    assert multiplier_pair(H, derived_subalgebra(H)) == SuperDim(2, 0)


def test_e2_heis_01():
    # brute force gives 0 here: the ideal has no complement, see the notes
    H = heisenberg_even(0, 1)
    assert multiplier_pair(H, derived_subalgebra(H)).total == 0


def test_e3_heis_odd_1():
    H = heisenberg_odd(1)
    I = derived_subalgebra(H)
    assert multiplier_pair(H, I).total == 1
    assert multiplier_pair_basis(H, I) == ["[x1,[x1,y1]]"]
    assert representative_survives(H, I, "[x1,[x1,y1]]")


# presentations


def test_present_heis_10():
    P = present(heisenberg_even(1, 0))
    assert P.F.alphabet.parities == (0, 0)
    assert (P.c, P.D) == (2, 4)
    assert r_in_degree(P, 2) == 0
    for d in (3, 4):
        assert r_in_degree(P, d) == len(degree_slice(P, d))


def test_present_heis_01():
    P = present(heisenberg_even(0, 1))
    assert P.F.alphabet.parities == (1,)
    assert r_in_degree(P, 2) == 0
    assert r_in_degree(P, 3) == len(degree_slice(P, 3))


def test_present_abelian_11():
    P = present(abelian(1, 1))
    assert (P.c, P.D) == (1, 3)
    assert r_in_degree(P, 2) == len(degree_slice(P, 2)) > 0


def test_present_degree_override():
    H = heisenberg_even(1, 0)
    assert present(H, degree=3).D == 3
    with pytest.raises(ValueError):
        present(H, degree=2)


def test_present_rejects_non_nilpotent():
    L = LieSuperalgebra(["a", "b"], [], [("a", "b", {"b": 1})])
    with pytest.raises(NotNilpotentError):
        present(L)


def _s_is_degree_at_least_2(PP):
    F = PP.base.F
    low = [j for j in range(len(F)) if F.degrees[j] == 1]
    return len(PP.S) == len(F) - len(low) and all(not (set(v) & set(low)) for v in PP.S.basis())


def test_extend_to_pair_examples():
    for H in (heisenberg_even(1, 0), heisenberg_odd(1)):
        PP = extend_to_pair(present(H), derived_subalgebra(H))
        assert _s_is_degree_at_least_2(PP)
    L = heisenberg_even(1, 1)
    P = present(L)
    assert len(extend_to_pair(P, whole(L)).S) == len(P.F)


# multipliers


@pytest.mark.parametrize(
    "L,expected",
    [
        (abelian(1, 1), SuperDim(1, 1)),
        (abelian(1, 0), SuperDim(0, 0)),
        (heisenberg_even(1, 0), SuperDim(2, 0)),
        (heisenberg_odd(1), SuperDim(1, 1)),
        (heisenberg_odd(2), SuperDim(4, 3)),
    ],
    ids=str,
)
def test_multiplier_examples(L, expected):
    assert multiplier(L) == expected


def test_zero_ideal():
    H = heisenberg_even(1, 0)
    zero = as_ideal(H, [])
    assert multiplier_pair(H, zero) == SuperDim(0, 0)
    assert exterior_center(H, zero).is_zero()
    assert is_capable_pair(H, zero)


@pytest.mark.parametrize("L", [heisenberg_even(1, 0), heisenberg_even(0, 2), heisenberg_odd(1), abelian(2, 1)], ids=str)
def test_truncation_degree_does_not_matter(L):
    c = present(L).c
    lo, hi = present(L, degree=c + 1), present(L, degree=c + 3)
    for I in coordinate_ideals(L):
        assert multiplier_pair(L, I, lo) == multiplier_pair(L, I, hi) == multiplier_pair(L, I)
        assert exterior_center(L, I, lo) == exterior_center(L, I, hi)


@pytest.mark.parametrize("L", [heisenberg_even(1, 1), heisenberg_odd(1), direct_sum(heisenberg_even(1, 0), abelian(0, 1))], ids=str)
def test_presentation_invariance(L):
    base = {repr(I): multiplier_pair(L, I) for I in coordinate_ideals(L)}
    for t in range(3):
        rng = random.Random(t)
        P = present(L, rng=rng)
        for I in coordinate_ideals(L):
            assert multiplier_pair(L, I, P) == base[repr(I)]
        Lp = permuted(L, rng)
        assert multiplier(Lp) == multiplier(L)


# exterior products and centers


@pytest.mark.parametrize("L", [heisenberg_even(1, 0), heisenberg_even(0, 2), heisenberg_odd(1), abelian(1, 2)], ids=str)
def test_central_extension_identity(L):
    for I in coordinate_ideals(L):
        assert exterior_product_pair(L, I) == multiplier_pair(L, I) + commutator(L, whole(L), I).dim


def test_exterior_product_examples():
    H = heisenberg_even(1, 0)
    assert exterior_product_pair(H, derived_subalgebra(H)) == SuperDim(2, 0)
    assert exterior_product_pair(H) == SuperDim(3, 0)
    A = abelian(2, 1)
    for I in coordinate_ideals(A):
        assert exterior_product_pair(A, I) == multiplier_pair(A, I)


def test_exterior_center_examples():
    H = heisenberg_even(1, 0)
    for I in coordinate_ideals(H):
        assert exterior_center(H, I).is_zero()
    H2 = heisenberg_even(2, 0)
    assert not exterior_center(H2, "x1, x3, z").is_zero()
    A = abelian(1, 0)
    assert exterior_center(A, whole(A)) == whole(A)


@pytest.mark.parametrize("L", [heisenberg_even(2, 0), heisenberg_odd(2), abelian(1, 1)], ids=str)
def test_exterior_center_containment(L):
    top = exterior_center(L)
    for I in coordinate_ideals(L):
        Z = exterior_center(L, I)
        assert Z <= I and Z <= top


def test_capability_examples():
    assert is_capable_pair(heisenberg_even(1, 0), "z")
    assert not is_capable_pair(heisenberg_even(2, 0), "x1, x3, z")
    assert is_capable_pair(abelian(0, 1))
    assert not is_capable_pair(abelian(1, 0))


# central ideals


def test_multiplier_central_ideal_examples():
    for m, n in [(1, 0), (1, 1), (2, 0), (0, 2)]:
        H = heisenberg_even(m, n)
        assert multiplier_central_ideal(H, derived_subalgebra(H)) == SuperDim(2 * m, n)
    for m in (1, 2):
        H = heisenberg_odd(m)
        assert multiplier_central_ideal(H, derived_subalgebra(H)) == SuperDim(m, m)
    A = abelian(1, 0)
    assert multiplier_central_ideal(A, whole(A)) == SuperDim(0, 0)
    with pytest.raises(ValueError):
        multiplier_central_ideal(heisenberg_even(1, 0), "x1, z")


@pytest.mark.parametrize("L", [abelian(2, 1), abelian(1, 2), direct_sum(heisenberg_even(1, 0), abelian(1, 1))], ids=str)
def test_central_tensor_matches_brute_force_with_complement(L):
    # central ideals spanned by basis vectors outside L^2 have a complement
    L2 = derived_subalgebra(L)
    for I in coordinate_ideals(L):
        if commutator(L, whole(L), I).is_zero() and I.intersect(L2).is_zero():
            assert multiplier_central_ideal(L, I) == multiplier_pair(L, I)
