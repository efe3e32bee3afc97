import math

import numpy as np
import pytest

from qflag.errors import (DimensionMismatch, MalformedM2C, NonSquare,
                          NotGroupElement, NotHyperHermitian, SingularInvSqrt)
from qflag.quaternion import I, J, K, Quaternion
from qflag.quatmat import (GroupElement, QuatMatrix, block_matrix,
                           eigvals_hyperhermitian, expm, func_hermitian,
                           interleave_to_block_permutation,
                           random_group_element, random_quatmat,
                           random_skew_adjoint, sp2nc_form, to_sp2nc)

rng = np.random.default_rng(202)


def series_exp(m: QuatMatrix, order: int = 36) -> QuatMatrix:
    """Independent oracle: scaled power series at double the library order."""
    norm1 = float(np.linalg.norm(m.embed(), 1))
    squarings = max(0, int(np.ceil(np.log2(max(norm1, 1e-30) / 0.25))))
    scaled = m * (0.5 ** squarings)
    acc = QuatMatrix.identity(m.rows)
    term = QuatMatrix.identity(m.rows)
    for k in range(1, order + 1):
        term = (term @ scaled) * (1.0 / k)
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def test_matmul_identity_and_scalar_case():
    m = random_quatmat(rng, 3, 3)
    assert (QuatMatrix.identity(3) @ m).allclose(m)
    prod = QuatMatrix.from_quaternions([[I]]) @ QuatMatrix.from_quaternions([[J]])
    assert prod.entry(0, 0).is_close(K)


def test_matmul_against_complex_embedding():
    for _ in range(500):
        a = random_quatmat(rng, 3, 4)
        b = random_quatmat(rng, 4, 2)
        direct = (a @ b).embed()
        oracle = a.embed() @ b.embed()
        assert np.abs(direct - oracle).max() < 1e-11


def test_matmul_dimension_gate():
    with pytest.raises(DimensionMismatch):
        random_quatmat(rng, 2, 3) @ random_quatmat(rng, 2, 3)


def test_adjoint():
    q = Quaternion(1.0, 2.0, -1.0, 0.5)
    single = QuatMatrix.from_quaternions([[q]])
    assert single.adjoint().entry(0, 0).is_close(q.conj())
    assert QuatMatrix.identity(4).adjoint().allclose(QuatMatrix.identity(4))
    for _ in range(500):
        a = random_quatmat(rng, 3, 2)
        b = random_quatmat(rng, 2, 4)
        lhs = (a @ b).adjoint()
        rhs = b.adjoint() @ a.adjoint()
        assert (lhs - rhs).max_abs() < 1e-12
        assert a.adjoint().adjoint().allclose(a)


def test_embedding_projection_round_trip():
    for _ in range(100):
        a = random_quatmat(rng, 3, 2)
        assert QuatMatrix.project(a.embed()).allclose(a, tol=1e-14)
    with pytest.raises(MalformedM2C):
        QuatMatrix.project(np.arange(16.0).reshape(4, 4) + 0j)


def test_embedding_block_almost_complex_structure():
    # J' E J = conj(E) with J = 1 (x) j, blockwise for any shape
    jblock = np.array([[0.0, 1.0], [-1.0, 0.0]])
    for _ in range(100):
        a = random_quatmat(rng, 3, 2)
        emb = a.embed()
        j_left = np.kron(np.eye(3), jblock)
        j_right = np.kron(np.eye(2), jblock)
        assert np.abs(j_left.T @ emb @ j_right - emb.conj()).max() < 1e-14


def test_exp_zero_and_block_trig():
    assert expm(QuatMatrix.zeros(2, 2)).allclose(QuatMatrix.identity(2))
    t = 1.3
    gen = QuatMatrix.from_real([[0.0, t], [-t, 0.0]])
    got = expm(gen)
    expect = QuatMatrix.from_real([[math.cos(t), math.sin(t)],
                                   [-math.sin(t), math.cos(t)]])
    assert (got - expect).max_abs() < 1e-13


def test_exp_inverse_and_oracle():
    for _ in range(200):
        gen = random_skew_adjoint(rng, 3)
        assert (expm(gen) @ expm(-gen)
                - QuatMatrix.identity(3)).max_abs() < 1e-10
        assert (expm(gen) - series_exp(gen)).max_abs() < 1e-12


def test_exp_group_membership_across_scales():
    gen = random_skew_adjoint(rng, 3)
    for t in (0.1, 1.0, 10.0):
        g = expm(gen * t)
        assert g.is_unitary(1e-10)
    with pytest.raises(NonSquare):
        expm(random_quatmat(rng, 2, 3))


def test_eigvals_identity_and_psd():
    assert np.allclose(eigvals_hyperhermitian(QuatMatrix.identity(3)),
                       [1.0, 1.0, 1.0])
    for _ in range(200):
        q = random_quatmat(rng, 2, 3)
        evs = eigvals_hyperhermitian(q @ q.adjoint())
        assert evs.min() >= -1e-12
        # Rayleigh-quotient oracle for positive semidefiniteness
        emb = (q @ q.adjoint()).embed()
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        rayleigh = (v.conj() @ emb @ v).real / (v.conj() @ v).real
        assert rayleigh >= -1e-12
        assert evs.min() - 1e-9 <= rayleigh <= evs.max() + 1e-9


def test_eigvals_pairing_of_embedding():
    for _ in range(100):
        q = random_quatmat(rng, 3, 3)
        p = q @ q.adjoint()
        lam = np.linalg.eigvalsh(p.embed())
        assert np.abs(lam[0::2] - lam[1::2]).max() < 1e-9 * max(1.0, lam.max())


def test_eigvals_rejects_non_hermitian():
    with pytest.raises(NotHyperHermitian):
        eigvals_hyperhermitian(random_quatmat(rng, 3, 3))


def test_eigvals_pairing_gate():
    from qflag.config import Tolerances
    from qflag.errors import PairingFailure
    q = random_quatmat(rng, 3, 3)
    p = q @ q.adjoint()
    # a zero pairing tolerance trips on the solver's rounding noise
    with pytest.raises(PairingFailure):
        eigvals_hyperhermitian(p, Tolerances(pairing_rel=0.0))


def test_func_hermitian():
    assert func_hermitian(QuatMatrix.zeros(2, 2), "cos_sqrt").allclose(
        QuatMatrix.identity(2))
    # scalar case: sinc_sqrt of t^2 gives sin(t)/t
    t = 0.73
    p = QuatMatrix.from_real([[t * t]])
    got = func_hermitian(p, "sinc_sqrt").entry(0, 0).w
    assert abs(got - math.sin(t) / t) < 1e-14
    assert abs(func_hermitian(p, "sin_sqrt").entry(0, 0).w - math.sin(t)) < 1e-14
    for _ in range(200):
        q = random_quatmat(rng, 3, 3)
        p = q @ q.adjoint()
        r = func_hermitian(p, "sqrt")
        assert (r @ r - p).max_abs() < 1e-9 * max(1.0, p.max_abs())
        inv_root = func_hermitian(p + QuatMatrix.identity(3), "invsqrt")
        check = inv_root @ (p + QuatMatrix.identity(3)) @ inv_root
        assert (check - QuatMatrix.identity(3)).max_abs() < 1e-9


def test_func_hermitian_small_argument_series():
    # cos_sqrt agrees with its truncated power series for small norms
    q = random_quatmat(rng, 2, 2, 0.05)
    p = q @ q.adjoint()
    series = (QuatMatrix.identity(2) - p * 0.5 + (p @ p) * (1.0 / 24.0)
              - (p @ p @ p) * (1.0 / 720.0))
    assert (func_hermitian(p, "cos_sqrt") - series).max_abs() < 1e-9


def test_func_hermitian_gates():
    singular = QuatMatrix.zeros(2, 2)
    with pytest.raises(SingularInvSqrt):
        func_hermitian(singular, "invsqrt")
    with pytest.raises(NotHyperHermitian):
        func_hermitian(random_quatmat(rng, 2, 2), "sqrt")
    with pytest.raises(ValueError):
        func_hermitian(QuatMatrix.identity(2), "nope")


def test_group_element_gate_and_inverse():
    g = random_group_element(rng, 3)
    assert (g.inverse().m @ g.m).allclose(QuatMatrix.identity(3), tol=1e-10)
    with pytest.raises(NotGroupElement):
        GroupElement(random_quatmat(rng, 3, 3))


def test_unit_determinant_of_group_embedding():
    for _ in range(100):
        g = random_group_element(rng, 3)
        assert abs(abs(np.linalg.det(g.m.embed())) - 1.0) < 1e-9


def test_permutation_carries_structure():
    n = 3
    perm = interleave_to_block_permutation(n)
    jn = np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))
    assert np.abs(perm @ jn @ perm.T - sp2nc_form(n)).max() == 0.0


def test_sp2nc_identity_and_conditions():
    eye = GroupElement(QuatMatrix.identity(2))
    assert np.abs(to_sp2nc(eye) - np.eye(4)).max() == 0.0
    form = sp2nc_form(2)
    for _ in range(200):
        g = random_group_element(rng, 2)
        big = to_sp2nc(g)
        assert np.abs(big.T @ form @ big - form).max() < 1e-10
        assert np.abs(big.conj().T @ big - np.eye(4)).max() < 1e-10


def test_sp2nc_algebra_block_structure():
    n = 3
    perm = interleave_to_block_permutation(n)
    for _ in range(100):
        gen = random_skew_adjoint(rng, n)
        alg = perm @ gen.embed() @ perm.T
        a = alg[:n, :n]
        b = alg[:n, n:]
        assert np.abs(a + a.conj().T).max() < 1e-11       # a* = -a
        assert np.abs(b - b.T).max() < 1e-11              # b' = b
        assert np.abs(alg[n:, :n] + b.conj().T).max() < 1e-11
        assert np.abs(alg[n:, n:] + a.T).max() < 1e-11


def test_block_matrix_assembly():
    a = random_quatmat(rng, 2, 2)
    b = random_quatmat(rng, 2, 3)
    c = random_quatmat(rng, 1, 2)
    d = random_quatmat(rng, 1, 3)
    m = block_matrix([[a, b], [c, d]])
    assert m.shape == (3, 5)
    assert m.entry(0, 0).is_close(a.entry(0, 0))
    assert m.entry(2, 4).is_close(d.entry(0, 2))
