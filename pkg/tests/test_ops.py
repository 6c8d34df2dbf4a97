from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hypermatrix import (
    Hypermatrix,
    atom,
    base_pow,
    bm_product3,
    bm_product3_background,
    create,
    cyclic_transpose,
    entry_pow,
    general_bm_product,
    generate_labeled,
    generate_sym3,
    hm_add,
    hm_hadamard,
    hm_scale,
    kronecker_delta,
    ones,
    transpose_k,
    zeros,
)
from hypermatrix.errors import DimensionError, UnsupportedScalarError

A = generate_labeled([2, 2, 2], "a")
B = generate_labeled([2, 2, 2], "b")
C = generate_labeled([2, 2, 2], "c")
S = generate_sym3(2, "s")
T = generate_labeled([2, 2, 2], "t")


def random_rational(rng, shape):
    return Hypermatrix.from_flat(
        shape, [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5))) for _ in range(int(np.prod(shape)))]
    )


def test_add_entrywise():
    assert (S + T)[0, 0, 0] == atom("s000") + atom("t000")
    assert hm_add(A, zeros(2, 2, 2)) == A
    with pytest.raises(DimensionError, match=r"\[2, 2, 2\].*\[2, 2, 3\]"):
        hm_add(zeros(2, 2, 2), zeros(2, 2, 3))


def test_scale():
    threeT = hm_scale(T, 3)
    for idx in np.ndindex(2, 2, 2):
        assert threeT[idx] == 3 * T[idx]
    assert hm_scale(A, 0) == zeros(2, 2, 2)
    assert hm_scale(A, 1) == A
    assert hm_scale(A, atom("k"))[1, 0, 1] == atom("k") * atom("a101")


def test_hadamard():
    assert hm_hadamard(S, T)[0, 0, 0] == atom("s000") * atom("t000")
    assert hm_hadamard(A, ones(2, 2, 2)) == A
    with pytest.raises(DimensionError):
        hm_hadamard(A, zeros(2, 2))


def test_entry_pow_and_base_pow():
    assert entry_pow(A, 1) == A
    assert entry_pow(A, 3)[1, 1, 0] == atom("a110") ** 3
    assert base_pow(np.e, zeros(2, 2, 2)) == ones(2, 2, 2)
    assert np.allclose(base_pow(2.0, Hypermatrix([1.0, 3.0])).array, [2.0, 8.0])
    with pytest.raises(UnsupportedScalarError):
        base_pow(2, A)
    with pytest.raises(UnsupportedScalarError):
        entry_pow(A, -1)


def test_cyclic_transpose_index_rule():
    At = cyclic_transpose(A)
    assert At[0, 0, 1] == atom("a100")
    for i, j, k in product(range(2), repeat=3):
        assert At[i, j, k] == A[k, i, j]
    assert transpose_k(transpose_k(transpose_k(A, 1), 1), 1) == A


def test_cyclic_transpose_rotates_shape():
    H = generate_labeled([2, 3, 4], "h")
    assert cyclic_transpose(H).shape == (3, 4, 2)
    assert oracles.cyclic(H.tolist()) == cyclic_transpose(H).tolist()


def test_order_two_transpose_is_matrix_transpose():
    M = generate_labeled([2, 3], "m")
    assert cyclic_transpose(M) == Hypermatrix(M.array.T)


def test_order_one_transpose_unsupported():
    with pytest.raises(UnsupportedScalarError):
        cyclic_transpose(Hypermatrix([1, 2]))


def test_transpose_k():
    assert transpose_k(A, 0) == A
    assert transpose_k(A, 3) == A
    assert transpose_k(A, 2) == cyclic_transpose(cyclic_transpose(A))
    assert transpose_k(A, -1) == transpose_k(A, 2)


@pytest.mark.parametrize("order", [2, 3, 4, 5])
def test_transpose_cycle_order(order):
    rng = np.random.default_rng(order)
    H = Hypermatrix(rng.normal(size=tuple(range(2, 2 + order))))
    assert transpose_k(H, order) == H
    assert H.transpose(order - 1) != H


def test_product3_symbolic_entry():
    P = bm_product3(A, B, C)
    assert str(P[0, 0, 0]) == "a000*b000*c000 + a010*b001*c100"
    assert P == Hypermatrix(oracles.product3(A.tolist(), B.tolist(), C.tolist()))


def test_product3_rectangular_against_oracle():
    rng = np.random.default_rng(1)
    X, Y, Z = (random_rational(rng, s) for s in ([2, 3, 2], [2, 2, 3], [3, 2, 2]))
    P = bm_product3(X, Y, Z)
    assert P.shape == (2, 2, 2)
    assert P == Hypermatrix(oracles.product3(X.tolist(), Y.tolist(), Z.tolist()))


@pytest.mark.parametrize("shapes, fragment", [
    (([2, 2, 2], [3, 2, 2], [2, 2, 2]), "A rows vs B rows"),
    (([2, 2, 2], [2, 3, 2], [2, 2, 2]), "B columns vs C columns"),
    (([2, 2, 2], [2, 2, 2], [2, 2, 3]), "C depth vs A depth"),
    (([2, 3, 2], [2, 2, 2], [2, 2, 2]), "A columns vs B depth"),
    (([2, 2, 2], [2, 2, 2], [3, 2, 2]), "B depth vs C rows"),
])
def test_product3_names_failing_constraint(shapes, fragment):
    with pytest.raises(DimensionError, match=fragment):
        bm_product3(*(zeros(*s) for s in shapes))


def test_delta_is_product_fixed_point():
    for n in (2, 3):
        D = kronecker_delta(n)
        assert bm_product3(D, transpose_k(D, 2), transpose_k(D, 1)) == D


def test_background_product():
    assert bm_product3_background(A, B, C, kronecker_delta(2)) == bm_product3(A, B, C)
    Q = bm_product3_background(A, B, C, T)
    assert Q[0, 0, 0].num_terms == 8
    assert Q == Hypermatrix(oracles.product3_background(A.tolist(), B.tolist(), C.tolist(), T.tolist()))
    assert bm_product3_background(A, B, C, zeros(2, 2, 2)) == zeros(2, 2, 2)
    with pytest.raises(DimensionError, match="background"):
        bm_product3_background(A, B, C, zeros(3, 3, 3))


def test_general_product_order_two_is_matmul():
    rng = np.random.default_rng(7)
    X, Y = rng.normal(size=(4, 4)), rng.normal(size=(4, 4))
    got = general_bm_product(Hypermatrix(X), Hypermatrix(Y)).array
    assert np.allclose(got, oracles.matmul(X.tolist(), Y.tolist()), rtol=0, atol=1e-12)
    rect = general_bm_product(Hypermatrix(rng.normal(size=(2, 5))), Hypermatrix(rng.normal(size=(5, 3))))
    assert rect.shape == (2, 3)


def test_general_product_order_three_equals_product3():
    rng = np.random.default_rng(3)
    for _ in range(5):
        X, Y, Z = (random_rational(rng, [2, 2, 2]) for _ in range(3))
        assert general_bm_product(X, Y, Z) == bm_product3(X, Y, Z)
    assert general_bm_product(A, B, C) == bm_product3(A, B, C)


def test_general_product_order_four_against_oracle():
    ops = [generate_labeled([2, 2, 2, 2], name) for name in "pqrs"]
    got = general_bm_product(*ops)
    assert got == Hypermatrix(oracles.general_product(*[H.tolist() for H in ops]))


def test_general_product_rectangular_order_four():
    rng = np.random.default_rng(11)
    out, K = [2, 3, 1, 2], 3
    shapes = []
    for s in range(4):
        dims = list(out)
        dims[(s + 1) % 4] = K
        shapes.append(dims)
    ops = [random_rational(rng, s) for s in shapes]
    got = general_bm_product(*ops)
    assert got.shape == tuple(out)
    assert got == Hypermatrix(oracles.general_product(*[H.tolist() for H in ops]))


def test_general_product_errors():
    with pytest.raises(DimensionError, match="number of operands must be >= 2"):
        general_bm_product(A)
    with pytest.raises(DimensionError):
        general_bm_product(A, B)
    with pytest.raises(DimensionError):
        general_bm_product(zeros(2, 2, 2), zeros(2, 2, 3), zeros(2, 2, 2))


def test_call_sugar():
    assert A(B, C) == bm_product3(A, B, C)


def test_non_associativity_witness():
    rng = np.random.default_rng(0)
    X = Hypermatrix(rng.uniform(size=(2, 2, 2)))
    left = bm_product3(bm_product3(X, X, X), X, X)
    middle = bm_product3(X, bm_product3(X, X, X), X)
    assert not np.allclose(left.array, middle.array)


def test_algebraic_laws_symbolic():
    assert hm_add(A, B) == hm_add(B, A)
    assert hm_add(hm_add(A, B), C) == hm_add(A, hm_add(B, C))
    assert hm_hadamard(A, B) == hm_hadamard(B, A)
    k = atom("k")
    assert hm_scale(hm_add(A, B), k) == hm_add(hm_scale(A, k), hm_scale(B, k))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=2, max_size=5), st.integers(0, 2**32 - 1))
def test_transpose_cycle_property(dims, seed):
    H = Hypermatrix(np.random.default_rng(seed).normal(size=dims))
    assert transpose_k(H, len(dims)) == H
    assert transpose_k(H, 1).shape == tuple(dims[1:] + dims[:1])


def test_float_products_are_reproducible():
    rng = np.random.default_rng(5)
    X, Y, Z = (Hypermatrix(rng.normal(size=(3, 3, 3))) for _ in range(3))
    assert bm_product3(X, Y, Z).array.tobytes() == bm_product3(X, Y, Z).array.tobytes()
    assert np.allclose(bm_product3(X, Y, Z).array, np.einsum("itk,ijt,tjk->ijk", X.array, Y.array, Z.array))
