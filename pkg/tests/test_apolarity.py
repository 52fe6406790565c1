"""Catalecticants, graded bases, annihilator membership."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agjordan.apolarity import (
    ann_membership,
    catalecticant_matrix,
    graded_basis,
    reduce_essential,
)
from agjordan.errors import DegenerateVariables
from agjordan.linalg import kernel_basis, rank
from agjordan.poly import Poly, contract, monomials_of_degree, parse_poly


def basis_of(text, order=None):
    return graded_basis(parse_poly(text, order))


def test_catalecticant_shapes_and_symmetry():
    f = parse_poly("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v"))
    for k in range(4):
        cat = catalecticant_matrix(f, k)
        assert (cat.rows, cat.cols) == (
            len(monomials_of_degree(5, k)),
            len(monomials_of_degree(5, 3 - k)),
        )
        mirror = catalecticant_matrix(f, 3 - k)
        assert cat.transpose() == mirror


def test_catalecticant_rank_gives_hilbert_vector():
    b = basis_of("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v"))
    assert b.hilbert == (1, 5, 5, 1)
    for k, h in enumerate(b.hilbert):
        assert rank(b.catalecticant(k)) == h


def test_hilbert_vectors_of_known_forms():
    cases = (
        ("x^3 + y^3", (1, 2, 2, 1)),
        ("x*y*z", (1, 3, 3, 1)),
        ("x^2*y^2", (1, 2, 3, 2, 1)),
        ("x*u^3*v + y*u*v^3", (1, 4, 7, 7, 4, 1)),
    )
    for text, hilbert in cases:
        assert basis_of(text).hilbert == hilbert


def test_hilbert_symmetry_on_random_forms():
    import random

    rng = random.Random(33)
    names = ("x", "y", "z")
    for _ in range(40):
        d = rng.randint(2, 5)
        terms = {m: rng.randint(-4, 4) for m in monomials_of_degree(3, d)}
        f = Poly(names, terms)
        if f.is_zero():
            continue
        try:
            b = graded_basis(f)
        except DegenerateVariables:
            continue
        assert b.hilbert == b.hilbert[::-1]
        assert b.hilbert[0] == b.hilbert[-1] == 1


def test_basis_monomials_have_matching_degrees_and_sizes():
    b = basis_of("x*u^3*v + y*u*v^3")
    for k, monos in enumerate(b.basis_monomials):
        assert len(monos) == b.hilbert[k]
        assert all(sum(m) == k for m in monos)


def test_degenerate_form_raises_with_kernel():
    with pytest.raises(DegenerateVariables) as err:
        basis_of("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    (vec,) = err.value.kernel_vectors
    # the direction X - Y annihilates (x + y)^3
    assert tuple(vec) in ((1, -1), (-1, 1))


def test_reduce_essential_drops_dependent_directions():
    f = parse_poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3", ("x", "y"))
    g = reduce_essential(f)
    assert g.num_vars == 1
    assert g.homogeneous_degree() == 3
    b = graded_basis(g)
    assert b.hilbert == (1, 1, 1, 1)


def test_reduce_essential_identity_on_nondegenerate():
    f = parse_poly("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v"))
    assert reduce_essential(f) == f


def test_reduce_essential_preserves_hilbert_after_padding():
    # f uses only x out of (x, y): one essential variable
    f = parse_poly("x^4", ("x", "y"))
    g = reduce_essential(f)
    assert g.num_vars == 1
    assert graded_basis(g).hilbert == (1, 1, 1, 1, 1)


def test_kernel_of_catalecticant_annihilates():
    f = parse_poly("x^2*y^2", ("x", "y"))
    for k in range(1, 4):
        cat = catalecticant_matrix(f, 4 - k)
        monos = monomials_of_degree(2, k)
        for vec in kernel_basis(cat):
            op = Poly(("x", "y"), dict(zip(monos, vec)))
            assert contract(op, f).is_zero()


def test_ann_membership_basic():
    f = parse_poly("x*u^2", ("x", "u"))
    assert ann_membership(f, parse_poly("y"))  # foreign variable kills f
    assert ann_membership(f, parse_poly("x^2", ("x", "u")))
    assert not ann_membership(f, parse_poly("u^2", ("x", "u")))
    assert not ann_membership(f, parse_poly("x*u", ("x", "u")))
    assert ann_membership(f, parse_poly("x^2 + y", ("x", "y", "u")))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=4, max_size=4))
def test_apolar_pairing_consistency(coeffs):
    # rank of Cat(k) never exceeds either side's monomial count
    names = ("x", "y")
    monos = monomials_of_degree(2, 3)
    f = Poly(names, dict(zip(monos, coeffs)))
    if f.is_zero():
        return
    for k in range(4):
        cat = catalecticant_matrix(f, k)
        assert rank(cat) <= min(cat.rows, cat.cols)
