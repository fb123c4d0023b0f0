import json
import random

import pytest

from liesuper.core import (
    AlgebraFormatError,
    GradedIdeal,
    LieSuperalgebra,
    NotAnIdealError,
    NotNilpotentError,
    Subspace,
    as_ideal,
    center,
    central_product,
    check_axioms,
    commutator,
    derived_subalgebra,
    direct_sum,
    from_dict,
    from_json,
    ideal_closure,
    is_nilpotent,
    lower_central_series,
    nilpotency_class,
    parse_element,
    parse_elements,
    quotient,
    span,
    to_dict,
    to_json,
    whole,
    zero_ideal,
)
from liesuper.families import abelian, heisenberg_even, heisenberg_odd
from liesuper.linalg import Q, SuperDim


def sd(a, b):
    return SuperDim(a, b)


# -- brackets and axioms ---------------------------------------------------------


def test_bracket_examples():
    H = heisenberg_even(1, 0)
    assert H.bracket("x1", "x2") == H["z"]
    assert not H.bracket("z", "x1")
    assert H.bracket("x2", "x1") == H["z"] * -1
    H01 = heisenberg_even(0, 1)
    assert H01.bracket("y1", "y1") == H01["z"]


def test_bracket_signs_for_odd_pairs():
    L = LieSuperalgebra(["z"], ["y1", "y2"], [("y2", "y1", {"z": 3})])
    # odd-odd brackets are symmetric
    assert L.bracket("y1", "y2") == L.bracket("y2", "y1") == L["z"] * 3
    assert check_axioms(L) == []


def test_bracket_parity():
    H = heisenberg_odd(1)
    b = H.bracket("x1", "y1")
    assert b.parity == 1
    assert (H["x1"] + H["y1"]).parity is None


def test_bracket_rejects_foreign_elements():
    A, B = heisenberg_even(1, 0), heisenberg_even(1, 0)
    with pytest.raises(ValueError):
        A.bracket(A["x1"], B["x2"])


@pytest.mark.parametrize(
    "L",
    [heisenberg_even(2, 1), abelian(3, 2), heisenberg_odd(2), heisenberg_even(0, 3), abelian(0, 0)],
    ids=str,
)
def test_family_members_satisfy_axioms(L):
    assert check_axioms(L) == []


def test_sign_error_reported():
    L = LieSuperalgebra(["x1", "x2", "z"], [], [("x1", "x2", {"z": 1}), ("x2", "x1", {"z": 1})])
    assert check_axioms(L) == ["graded skew-symmetry violated at (x1,x2)"]


def test_even_square_reported():
    L = LieSuperalgebra(["x", "z"], [], [("x", "x", {"z": 1})])
    assert "graded skew-symmetry violated at (x,x)" in check_axioms(L)


def test_grading_violation_reported():
    L = LieSuperalgebra(["x1", "x2"], ["y"], [("x1", "x2", {"y": 1})])
    assert check_axioms(L) == ["grading violated at (x1,x2)"]


def test_jacobi_violation_reported():
    # [a,b]=a, [a,c]=a, [b,c]=b: the Jacobiator of (a,b,c) is a
    L = LieSuperalgebra(["a", "b", "c"], [], [("a", "b", {"a": 1}), ("a", "c", {"a": 1}), ("b", "c", {"b": 1})])
    report = check_axioms(L)
    assert report and all(r.startswith("graded Jacobi identity violated at") for r in report)


def test_odd_jacobi_violation():
    # [y,y] = x with [x,y] = y breaks [y,[y,y]] = 0
    L = LieSuperalgebra(["x"], ["y"], [("y", "y", {"x": 1}), ("x", "y", {"y": 1})])
    assert "graded Jacobi identity violated at (y,y,y)" in check_axioms(L)


def test_duplicate_and_unknown_names():
    with pytest.raises(AlgebraFormatError):
        LieSuperalgebra(["x", "x"])
    with pytest.raises(AlgebraFormatError):
        LieSuperalgebra(["x"], [], [("x", "w", {"x": 1})])


# -- elements and parsing ------------------------------------------------------------


def test_parse_and_repr_round_trip():
    H = heisenberg_even(1, 0)
    e = parse_element(H, "x1 + 2*x2 - 1/2*z")
    assert e.coeffs == {0: 1, 1: 2, 2: Q(-1, 2)}
    assert repr(e) == "x1 + 2*x2 - 1/2*z"
    assert parse_element(H, repr(e)) == e
    assert [repr(x) for x in parse_elements(H, "x1+x2, z")] == ["x1 + x2", "z"]


@pytest.mark.parametrize("bad", ["", "x1 +", "w", "2*", "x1 ** x2"])
def test_parse_errors(bad):
    H = heisenberg_even(1, 0)
    with pytest.raises(ValueError):
        parse_element(H, bad)


def test_element_arithmetic():
    H = heisenberg_even(1, 0)
    a = H["x1"] + H["x2"] * 3
    assert (a - H["x1"]).coeffs == {1: 3}
    assert not (a - a)
    assert a.components() == [a]


# -- subspaces and ideals -------------------------------------------------------------


def test_center_examples():
    H = heisenberg_even(1, 0)
    assert center(H) == span(H, ["z"])
    assert center(H).dim == sd(1, 0)
    A = abelian(2, 3)
    assert center(A) == whole(A)
    assert center(heisenberg_odd(1)).dim == sd(0, 1)


def test_derived_examples():
    for m, n in [(1, 0), (0, 2), (2, 1)]:
        H = heisenberg_even(m, n)
        assert derived_subalgebra(H) == span(H, ["z"])
    assert derived_subalgebra(abelian(2, 2)).is_zero()
    L = direct_sum(heisenberg_even(1, 0), abelian(2, 0))
    assert derived_subalgebra(L).dim == sd(1, 0)


def test_subspace_canonical_under_change_of_spanning_set():
    H = heisenberg_even(2, 1)
    rng = random.Random(3)
    vecs = [{0: Q(1), 4: Q(2)}, {1: Q(1)}, {5: Q(1)}]
    base = Subspace(H, vecs)
    for _ in range(10):
        mixed = []
        for _ in range(5):
            v = {}
            for w in vecs:
                c = Q(rng.randint(-3, 3))
                for k, x in w.items():
                    v[k] = v.get(k, 0) + c * x
            mixed.append({k: x for k, x in v.items() if x})
        mixed += vecs
        rng.shuffle(mixed)
        S = Subspace(H, mixed)
        assert S.echelon.rows == base.echelon.rows


def test_inhomogeneous_vectors_are_split():
    H = heisenberg_even(1, 1)
    S = Subspace(H, [H.element("x1 + y1").coeffs])
    assert S.dim == sd(1, 1)


def test_not_an_ideal():
    H = heisenberg_even(1, 0)
    with pytest.raises(NotAnIdealError):
        GradedIdeal(H, [H["x1"].coeffs])


def test_ideal_closure_examples():
    H = heisenberg_even(1, 0)
    assert ideal_closure(H, [H["x1"]]) == span(H, ["x1", "z"])
    A = abelian(2, 1)
    v = A.element("a1 + a2")
    assert ideal_closure(A, [v]).dim == sd(1, 0)
    H1 = heisenberg_odd(1)
    assert ideal_closure(H1, [H1["y1"]]) == span(H1, ["y1", "z"])


def test_as_ideal_accepts_names_and_expressions():
    H = heisenberg_even(2, 0)
    assert as_ideal(H, ["x1", "x3", "z"]) == as_ideal(H, "x1, x3, z")
    assert as_ideal(H, [H["x1"], {2: Q(1)}, "z"]) == as_ideal(H, "x1, x3, z")


def test_lower_central_series_and_class():
    H = heisenberg_even(1, 0)
    series = lower_central_series(H)
    assert [s.dim.total for s in series] == [3, 1, 0]
    assert nilpotency_class(H) == 2
    assert nilpotency_class(abelian(2, 0)) == 1
    assert nilpotency_class(abelian(0, 0)) == 0


def test_non_nilpotent_detected():
    # two-dimensional non-abelian Lie algebra [a,b] = b
    L = LieSuperalgebra(["a", "b"], [], [("a", "b", {"b": 1})])
    assert not is_nilpotent(L)
    with pytest.raises(NotNilpotentError):
        nilpotency_class(L)


def test_commutator_of_ideals():
    H = heisenberg_even(2, 0)
    I, J = as_ideal(H, "x1, x3, z"), as_ideal(H, "x2, x4, z")
    assert commutator(H, I, J).is_zero()
    assert commutator(H, I, I) == span(H, ["z"])


# -- quotients, sums, central products ----------------------------------------------


def test_quotient_examples():
    H = heisenberg_even(1, 0)
    Q1, p = quotient(H, ["z"])
    assert Q1.dim == sd(2, 0) and Q1.is_abelian() and check_axioms(Q1) == []
    Q2, _ = quotient(heisenberg_odd(1), ["z"])
    assert Q2.dim == sd(1, 1) and Q2.is_abelian()
    A = abelian(2, 1)
    Q3, _ = quotient(A, ["a1"])
    assert Q3.dim == sd(1, 1)
    assert not p(H["z"])
    assert p(H["x1"]) == Q1["x1"]


def test_quotient_dimension_and_axioms():
    H = heisenberg_even(2, 1)
    for I in [["z"], ["x1", "z"], ["y1", "z"], ["x1", "x2", "x3", "x4", "z"]]:
        Qa, _ = quotient(H, I)
        assert Qa.dim == H.dim - as_ideal(H, I).dim
        assert check_axioms(Qa) == []


def test_quotient_rejects_non_ideal():
    with pytest.raises(NotAnIdealError):
        quotient(heisenberg_even(1, 0), ["x1"])


def test_direct_sum_examples():
    L = direct_sum(abelian(1, 0), abelian(0, 1))
    assert L.dim == sd(1, 1) and L.is_abelian()
    L = direct_sum(heisenberg_even(1, 0), abelian(1, 0))
    assert L.dim == sd(4, 0) and derived_subalgebra(L).dim == sd(1, 0)
    L = direct_sum(heisenberg_odd(1), abelian(0, 1))
    assert L.dim == sd(1, 3)


def test_direct_sum_renames_collisions():
    L = direct_sum(heisenberg_even(1, 0), heisenberg_even(1, 0))
    assert set(L.summands[1]) == {"x1'", "x2'", "z'"}
    assert check_axioms(L) == []
    assert center(L).dim == sd(2, 0)


def test_central_product_examples():
    H = heisenberg_even(2, 0)
    r = central_product(H, "x1, x3, z", "x2, x4, z")
    assert r.ok
    H2 = heisenberg_odd(2)
    assert central_product(H2, "x1, y1, z", "x2, y2, z").ok
    A = abelian(2, 0)
    assert central_product(A, "a1", "a2").ok
    assert not central_product(H, "x1, x3, z", "x1, x3, z").spans
    assert not central_product(H, "x1, x2, x3, z", "x3, x4, z").commute


def test_central_product_dimension_identity():
    H = heisenberg_even(2, 0)
    I, J = as_ideal(H, "x1, x3, z"), as_ideal(H, "x2, x4, z")
    assert H.dim == I.dim + J.dim - I.intersect(J).dim


def test_zero_ideal():
    assert zero_ideal(heisenberg_even(1, 0)).is_zero()


# -- JSON -----------------------------------------------------------------------------


def test_json_round_trip():
    for L in [heisenberg_even(1, 1), heisenberg_odd(2), abelian(1, 2)]:
        text = to_json(L)
        M = from_json(text)
        assert to_json(M) == text
        assert M.names == L.names and M.structure_constants() == L.structure_constants()


def test_json_schema_shape():
    d = to_dict(heisenberg_even(0, 1))
    assert d == {
        "name": "H(0,1)",
        "even_basis": ["z"],
        "odd_basis": ["y1"],
        "brackets": [{"x": "y1", "y": "y1", "value": [["z", "1"]]}],
    }


def test_json_rational_scalars():
    d = {"name": "t", "even_basis": ["x1", "x2", "z"], "odd_basis": [], "brackets": [{"x": "x1", "y": "x2", "value": [["z", "-3/4"]]}]}
    L = from_dict(d)
    assert L.bracket("x1", "x2") == L["z"] * Q(-3, 4)
    assert json.loads(to_json(L))["brackets"][0]["value"] == [["z", "-3/4"]]


@pytest.mark.parametrize(
    "text, field",
    [
        ('{"odd_basis": []}', "even_basis"),
        ('{"even_basis": [1], "odd_basis": []}', "even_basis"),
        ('{"even_basis": ["x"], "odd_basis": [], "brackets": [{"x": "x"}]}', "brackets[0]"),
        ('{"even_basis": ["x"], "odd_basis": [], "brackets": [{"x": "x", "y": "x", "value": [["x", "1.5"]]}]}', "brackets[0].value[0]"),
    ],
)
def test_json_field_diagnostics(text, field):
    with pytest.raises(AlgebraFormatError) as info:
        from_json(text)
    assert info.value.field == field


def test_json_syntax_error_has_position():
    with pytest.raises(AlgebraFormatError, match="line 2 column"):
        from_json('{\n  "even_basis": [,\n}')
