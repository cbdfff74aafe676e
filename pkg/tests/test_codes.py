import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gtcodes import (
    CodeSpec,
    Codeword,
    ContextMismatch,
    EmptyPolytope,
    EmptyU,
    ExponentSet,
    LengthMismatch,
    Polytope,
    control_matrix,
    convolve,
    encode,
    ev_monomial,
    evaluate_polynomial,
    evaluation_matrix,
    generator_matrix,
    is_codeword,
    make_field,
    polytope_code,
    reduce_set,
    shift,
)
from gtcodes.linalg import rank, row_space_contains

from golden import CONTROL_ROWS, EXAMPLE_U, GENERATOR_ROWS, PRINTED_M
from oracles import naive_eval_matrix, prime_powers


def random_spec(rng, q, r, k=None):
    n = (q - 1) ** r
    k = int(rng.integers(1, n + 1)) if k is None else k
    H = list(itertools.product(range(q - 1), repeat=r))
    idx = rng.choice(n, size=k, replace=False)
    return CodeSpec.build(q, r, [H[i] for i in idx])


def random_message(rng, spec):
    return rng.integers(0, spec.q, size=spec.k)


def test_matrix_f5_examples():
    E = evaluation_matrix(5, 2)
    M = E.entries
    assert np.all(M[0] == 1) and np.all(M[:, 0] == 1)
    j, l, l3 = (E.order.position[u] for u in [(0, 1), (0, 1), (0, 3)])
    assert M[j, l] == 2 and M[j, l3] == 3
    assert np.array_equal(M, PRINTED_M)


def test_matrix_f3():
    assert evaluation_matrix(3, 1).entries.tolist() == [[1, 1], [1, 2]]


@pytest.mark.parametrize("q,r", [(3, 1), (3, 2), (4, 2), (5, 2), (7, 1), (8, 1), (9, 2), (4, 3)])
def test_matrix_matches_naive(q, r):
    E = evaluation_matrix(q, r)
    assert np.array_equal(E.entries, naive_eval_matrix(E.field, E.order.points))


@pytest.mark.parametrize("q", prime_powers(3, 9))
@pytest.mark.parametrize("r", [1, 2])
def test_gram_identity(q, r):
    E = evaluation_matrix(q, r)
    M = E.entries
    assert np.array_equal(M, M.T)
    sign = E.field.minus_one if r % 2 else 1
    expected = E.field.mul(sign, E.sigma_matrix())
    assert np.array_equal(E.gram(), expected)
    assert np.array_equal(E.field.matmul(E.inverse(), M), np.eye(E.n, dtype=np.int64))
    zero_row = E.order.position[(0,) * r]
    assert np.all(M[zero_row] == 1)


def test_generator_matrix_example():
    spec = CodeSpec.build(5, 2, EXAMPLE_U)
    G = generator_matrix(spec)
    assert np.array_equal(G, PRINTED_M[[j - 1 for j in GENERATOR_ROWS]])
    Hc = control_matrix(spec)
    assert Hc.shape == (10, 16)
    assert np.array_equal(Hc, PRINTED_M[[j - 1 for j in CONTROL_ROWS]])
    assert rank(spec.field, G) == 6


def test_generator_matrix_trivial_cases():
    one = CodeSpec.build(5, 2, [(0, 0)])
    assert generator_matrix(one).tolist() == [[1] * 16]
    full = CodeSpec.build(5, 2, ExponentSet.full(5, 2))
    assert np.array_equal(generator_matrix(full), evaluation_matrix(5, 2).entries)
    assert control_matrix(full).shape == (0, 16)
    with pytest.raises(EmptyU):
        generator_matrix(CodeSpec.build(5, 2, []))


def test_control_matrix_f3():
    spec = CodeSpec.build(3, 1, [(0,)])
    assert control_matrix(spec).tolist() == [[1, 2]]


def test_encode_examples():
    spec = CodeSpec.build(5, 2, [(0, 0)])
    assert encode(spec, [1]).tolist() == [1] * 16
    ex = CodeSpec.build(5, 2, EXAMPLE_U)
    assert encode(ex, [0] * 6).is_zero()
    spec = CodeSpec.build(3, 1, [(1,)])
    assert encode(spec, [1]).tolist() == [1, 2]
    assert encode(spec, {(1,): 1}) == encode(spec, [1])
    with pytest.raises(LengthMismatch):
        encode(ex, [1, 2])


def test_evaluate_polynomial_examples():
    assert evaluate_polynomial(5, 2, {(4, 4): 1}).tolist() == [1] * 16
    for q in (3, 4, 5, 7, 8, 9):
        F = make_field(q)
        c = evaluate_polynomial(F, 1, {(1,): 1, (q,): F.minus_one})
        assert c.is_zero()
    assert evaluate_polynomial(3, 1, {(1,): 1}).tolist() == [1, 2]


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(3, 1), (3, 2), (4, 2), (5, 2), (7, 1), (8, 1), (9, 1)]),
    st.data(),
)
def test_polynomial_reduction_equivalence(ctx, data):
    q, r = ctx
    vec = st.tuples(*[st.integers(-3 * q, 3 * q)] * r)
    terms = data.draw(st.dictionaries(vec, st.integers(1, q - 1), min_size=1, max_size=5))
    direct = evaluate_polynomial(q, r, terms)
    # collapse terms sharing a reduced exponent, then encode through C_U
    F = make_field(q)
    collapsed: dict = {}
    for v, c in terms.items():
        u = tuple(x % (q - 1) for x in v)
        collapsed[u] = F.add(collapsed.get(u, 0), c)
    spec = CodeSpec.build(q, r, reduce_set(list(terms), q, r))
    assert direct == encode(spec, collapsed)


def test_shift_examples():
    F = make_field(5)
    c = ev_monomial(F, 2, (0, 1))
    assert shift(c, (0, 0)) == c
    assert shift(c, (0, 1)) == c.scale(3)
    d = Codeword(np.random.default_rng(0).integers(0, 5, 16), F, 2)
    assert shift(shift(d, (1, 3)), (3, 1)) == d


def test_shift_moves_coefficients():
    F = make_field(7)
    E = evaluation_matrix(F, 1)
    c = Codeword(np.arange(6) % 7, F, 1)
    s = shift(c, (2,))
    for j, (i,) in enumerate(E.order.points):
        src = E.order.position[((i - 2) % 6,)]
        assert s.values[j] == c.values[src]


@pytest.mark.parametrize("q,r", [(5, 2), (4, 3), (7, 1)])
def test_shift_eigenvectors(q, r):
    F = make_field(q)
    order = evaluation_matrix(F, r).order
    rng = np.random.default_rng(q * 10 + r)
    for _ in range(20):
        u = order[int(rng.integers(order.n))]
        a = tuple(int(x) for x in rng.integers(-q, q, size=r))
        expected = ev_monomial(F, r, u).scale(F.alpha_pow(-int(np.dot(u, a))))
        assert shift(ev_monomial(F, r, u), a) == expected


@pytest.mark.parametrize("q,r", [(5, 2), (4, 2), (8, 1), (3, 3)])
def test_multicyclic(q, r):
    rng = np.random.default_rng(q + 100 * r)
    for _ in range(10):
        spec = random_spec(rng, q, r)
        c = encode(spec, random_message(rng, spec))
        for axis in range(r):
            a = [0] * r
            a[axis] = 1
            assert is_codeword(spec, shift(c, a))


def test_convolve_examples():
    F = make_field(5)
    u, v = (0, 1), (2, 3)
    eu, ev = ev_monomial(F, 2, u), ev_monomial(F, 2, v)
    assert convolve(eu, ev).is_zero()
    assert convolve(eu, eu) == eu
    c = Codeword(np.random.default_rng(1).integers(0, 5, 16), F, 2)
    assert convolve(Codeword.unit(F, 2), c) == c
    with pytest.raises(ContextMismatch):
        convolve(eu, ev_monomial(5, 1, (1,)))


@pytest.mark.parametrize("q,r", [(5, 1), (4, 2), (3, 2), (9, 1)])
def test_convolve_ring_laws(q, r):
    F = make_field(q)
    n = (q - 1) ** r
    rng = np.random.default_rng(q * r)
    a, b, c = (Codeword(rng.integers(0, q, n), F, r) for _ in range(3))
    assert convolve(a, b) == convolve(b, a)
    assert convolve(convolve(a, b), c) == convolve(a, convolve(b, c))
    assert convolve(a, b + c) == convolve(a, b) + convolve(a, c)
    assert convolve(a.scale(2 % q or 1), b) == convolve(a, b).scale(2 % q or 1)
    # X^e * c equals shift(c, e)
    E = evaluation_matrix(F, r)
    x = np.zeros(n, dtype=np.int64)
    e = E.order[n - 1]
    x[n - 1] = 1
    assert convolve(Codeword(x, F, r), a) == shift(a, e)


@pytest.mark.parametrize("q,r", [(5, 2), (4, 2), (7, 1), (3, 3)])
def test_ideal_closure(q, r):
    rng = np.random.default_rng(7 * q + r)
    F = make_field(q)
    for _ in range(5):
        spec = random_spec(rng, q, r)
        c = encode(spec, random_message(rng, spec))
        x = Codeword(rng.integers(0, q, spec.n), F, r)
        assert is_codeword(spec, convolve(c, x))


def test_is_codeword_examples():
    spec = CodeSpec.build(5, 2, EXAMPLE_U)
    assert is_codeword(spec, Codeword.zero(5, 2))
    assert is_codeword(spec, encode(spec, [1, 2, 3, 4, 0, 1]))
    G = generator_matrix(spec)
    for v in spec.order.points:
        if v in spec.U:
            continue
        ev = ev_monomial(spec.field, 2, v)
        assert not is_codeword(spec, ev)
        assert rank(spec.field, np.vstack([G, ev.values])) == 7
    with pytest.raises(ContextMismatch):
        is_codeword(spec, Codeword.zero(3, 4))


@pytest.mark.parametrize("q,r", [(4, 2), (5, 2), (9, 1)])
def test_membership_agrees_with_row_space(q, r):
    rng = np.random.default_rng(q + r)
    F = make_field(q)
    for _ in range(6):
        spec = random_spec(rng, q, r)
        G = spec.rows()
        for _ in range(5):
            x = Codeword(rng.integers(0, q, spec.n), F, r)
            assert is_codeword(spec, x) == row_space_contains(F, G, x.values)


@pytest.mark.parametrize("q,r", [(3, 1), (3, 2), (3, 3), (4, 1), (5, 1), (9, 1)])
def test_rank_equals_k_exhaustive(q, r):
    H = list(itertools.product(range(q - 1), repeat=r))
    F = make_field(q)
    for mask in itertools.product([0, 1], repeat=len(H)):
        U = [u for u, b in zip(H, mask) if b]
        if U:
            spec = CodeSpec.build(q, r, U)
            assert rank(F, spec.rows()) == len(U)


@pytest.mark.parametrize("q,r", [(5, 2), (4, 2), (7, 2), (8, 2)])
def test_full_rank_evaluation_matrix(q, r):
    # rank(M) = n means every row subset, i.e. every G_U, has rank |U|
    E = evaluation_matrix(q, r)
    assert rank(E.field, E.entries) == E.n


def test_encode_injective():
    rng = np.random.default_rng(5)
    spec = random_spec(rng, 4, 2, k=3)
    words = {tuple(encode(spec, m).tolist()) for m in itertools.product(range(4), repeat=3)}
    assert len(words) == 4**3


def test_polytope_code_examples():
    seg = polytope_code(5, Polytope.box([(0, 4)]))
    assert (seg.n_lattice_points, seg.k) == (5, 4)
    rect = polytope_code(5, Polytope.box([(0, 2), (0, 1)]))
    assert rect.k == 6 and rect.spec.U == ExponentSet(EXAMPLE_U, 5, 2)
    simplex = Polytope(2, (((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)), ((-2, 2), (-2, 2)))
    assert polytope_code(5, simplex).k == 3
    with pytest.raises(EmptyPolytope):
        polytope_code(5, Polytope(1, (((1,), -1),), ((0, 3),)))


def test_codeword_validation():
    with pytest.raises(LengthMismatch):
        Codeword([1, 2, 3], 5, 1)
    with pytest.raises(ValueError):
        Codeword([0, 1, 2, 9], 5, 1)
