"""Coset geometry of the quaternionic Grassmannian.

The quotient of the unitary quaternion group U(j+k, H) by its block-diagonal
subgroup U(j, H) x U(k, H) carries inhomogeneous coordinates X (a j x k
quaternion matrix) on which the full group acts by linear fractional
transformations

    Y = (A X + B)(C X + D)^{-1} = (-X B* + A*)^{-1}(X D* - C*).

This module provides the exponential coset parameterisation, the action and
its projective transport identities, the invariant metric in two equivalent
forms, trace/determinant curvature invariants, and Monte-Carlo averaging of
equivariant functions over the internal-motion fibers.
"""

from __future__ import annotations

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import (DegenerateQuadruple, DimensionMismatch, PairingFailure,
                     ShapeMismatch, SingularDenominator)
from .quaternion import Quaternion, random_unit_quaternion
from .quatmat import (GroupElement, QuatMatrix, block_matrix, expm,
                      eigvals_hyperhermitian, func_hermitian)


class GrassmannPoint:
    """Inhomogeneous coset coordinates: a j x k quaternion matrix."""

    __slots__ = ("x",)

    def __init__(self, x: QuatMatrix):
        self.x = x

    @property
    def j(self) -> int:
        return self.x.rows

    @property
    def k(self) -> int:
        return self.x.cols

    @classmethod
    def origin(cls, j: int, k: int) -> "GrassmannPoint":
        return cls(QuatMatrix.zeros(j, k))

    def __repr__(self) -> str:
        return f"GrassmannPoint(j={self.j}, k={self.k})"


def coset_element(xi: QuatMatrix, tol: Tolerances = DEFAULT) -> GroupElement:
    """Exponential of the off-diagonal generator [[0, xi], [-xi*, 0]].

    Built in closed form from scalar functions of xi xi*:

        [[cos sqrt(xi xi*),  Z       ],
         [-Z*,               cos sqrt(xi* xi)]]

    with Z = sinc_sqrt(xi xi*) xi = (xi xi*)^{-1/2} sin (xi xi*)^{1/2} xi.
    """
    left = xi @ xi.adjoint()
    right = xi.adjoint() @ xi
    z = func_hermitian(left, "sinc_sqrt", tol) @ xi
    top = [func_hermitian(left, "cos_sqrt", tol), z]
    bottom = [-z.adjoint(), func_hermitian(right, "cos_sqrt", tol)]
    return GroupElement(block_matrix([top, bottom]), tol=tol.structure * 10)


def coset_generator(xi: QuatMatrix) -> QuatMatrix:
    """The skew block matrix [[0, xi], [-xi*, 0]] itself."""
    j, k = xi.rows, xi.cols
    return block_matrix([[QuatMatrix.zeros(j, j), xi],
                         [-xi.adjoint(), QuatMatrix.zeros(k, k)]])


def grassmann_from_coset(xi: QuatMatrix, tol: Tolerances = DEFAULT) -> GrassmannPoint:
    """X = Z (1 - Z* Z)^{-1/2} for the coset element generated by ``xi``."""
    left = xi @ xi.adjoint()
    z = func_hermitian(left, "sinc_sqrt", tol) @ xi
    gram = QuatMatrix.identity(z.cols) - z.adjoint() @ z
    return GrassmannPoint(z @ func_hermitian(gram, "invsqrt", tol))


def _checked_inverse(m: QuatMatrix, tol: Tolerances, err) -> QuatMatrix:
    emb = m.embed()
    if np.linalg.cond(emb) > tol.cond_limit:
        raise err
    sol = np.linalg.solve(emb, np.eye(emb.shape[0], dtype=complex))
    return QuatMatrix.project(sol, tol=tol.structure)


def lft_apply(g: GroupElement, point: GrassmannPoint,
              tol: Tolerances = DEFAULT) -> GrassmannPoint:
    """Linear fractional action Y = (A X + B)(C X + D)^{-1}."""
    x = point.x
    a, b, c, d = g.blocks(point.j, point.k)
    den = c @ x + d
    den_inv = _checked_inverse(den, tol, SingularDenominator(
        "C X + D is singular; the point is mapped to infinity"))
    return GrassmannPoint((a @ x + b) @ den_inv)


def lft_apply_second_form(g: GroupElement, point: GrassmannPoint,
                          tol: Tolerances = DEFAULT) -> GrassmannPoint:
    """Equivalent left-quotient form Y = (-X B* + A*)^{-1}(X D* - C*)."""
    x = point.x
    a, b, c, d = g.blocks(point.j, point.k)
    den = -(x @ b.adjoint()) + a.adjoint()
    den_inv = _checked_inverse(den, tol, SingularDenominator(
        "A* - X B* is singular; the point is mapped to infinity"))
    return GrassmannPoint(den_inv @ (x @ d.adjoint() - c.adjoint()))


def transport_identities(g: GroupElement, pa: GrassmannPoint, pb: GrassmannPoint,
                         tol: Tolerances = DEFAULT) -> dict:
    """Residuals of the four projective transport identities.

    With Ya, Yb the images of Xa, Xb the identities factor 1 + Ya Yb*,
    1 + Ya* Yb and (twice, with the roles of the two points exchanged in the
    flanking inverses) Ya - Yb through the group blocks.
    """
    if (pa.j, pa.k) != (pb.j, pb.k):
        raise ShapeMismatch("points live on different Grassmannians")
    xa, xb = pa.x, pb.x
    a, b, c, d = g.blocks(pa.j, pa.k)
    ya = lft_apply(g, pa, tol).x
    yb = lft_apply(g, pb, tol).x
    eye_j = QuatMatrix.identity(pa.j)
    eye_k = QuatMatrix.identity(pa.k)

    err = SingularDenominator("transport factor is singular")
    la = _checked_inverse(-(xa @ b.adjoint()) + a.adjoint(), tol, err)
    lb = _checked_inverse(-(xb @ b.adjoint()) + a.adjoint(), tol, err)
    ra = _checked_inverse(c @ xa + d, tol, err)
    rb = _checked_inverse(c @ xb + d, tol, err)
    rb_star = _checked_inverse(-(b @ xb.adjoint()) + a, tol, err)
    la_star = _checked_inverse(xa.adjoint() @ c.adjoint() + d.adjoint(), tol, err)

    res = {}
    lhs = eye_j + ya @ yb.adjoint()
    rhs = la @ (eye_j + xa @ xb.adjoint()) @ rb_star
    res["one_plus_y_ystar"] = (lhs - rhs).max_abs()

    lhs = eye_k + ya.adjoint() @ yb
    rhs = la_star @ (eye_k + xa.adjoint() @ xb) @ rb
    res["one_plus_ystar_y"] = (lhs - rhs).max_abs()

    diff = ya - yb
    rhs = la @ (xa - xb) @ rb
    res["difference_a"] = (diff - rhs).max_abs()

    rhs = lb @ (xa - xb) @ ra
    res["difference_b"] = (diff - rhs).max_abs()
    return res


def cross_ratio(pa: GrassmannPoint, pb: GrassmannPoint,
                pc: GrassmannPoint, pd: GrassmannPoint,
                tol: Tolerances = DEFAULT) -> float:
    """Scalar part of tr[(Ya-Yb)(Yc-Yb)^{-1}(Yc-Yd)(Ya-Yd)^{-1}].

    Invariant under simultaneous group action on all four points.  The two
    inverted differences must be nonsingular; a vanishing non-inverted
    difference simply gives zero.
    """
    err = DegenerateQuadruple("inverted difference of points is singular")
    inv_cb = _checked_inverse(pc.x - pb.x, tol, err)
    inv_ad = _checked_inverse(pa.x - pd.x, tol, err)
    prod = (pa.x - pb.x) @ inv_cb @ (pc.x - pd.x) @ inv_ad
    return prod.trace().w


def metric_form(point: GrassmannPoint, dx: QuatMatrix,
                tol: Tolerances = DEFAULT) -> float:
    """Invariant line element tr[(1+XX*)^{-1} dX (1+X*X)^{-1} dX*].

    The scalar part of the quaternion trace is returned.  Quaternion traces
    are cyclic only in their scalar part, so the vector part of this
    particular product ordering is an artifact; the scalar part coincides
    with the manifestly real form tr(w w*) for w = (1+XX*)^{-1/2} dX
    (1+X*X)^{-1/2} (see :func:`metric_form_hermitian`).
    """
    x = point.x
    if dx.shape != x.shape:
        raise ShapeMismatch(f"tangent shape {dx.shape} != point shape {x.shape}")
    left = (QuatMatrix.identity(point.j) + x @ x.adjoint()).inv(tol)
    right = (QuatMatrix.identity(point.k) + x.adjoint() @ x).inv(tol)
    return (left @ dx @ right @ dx.adjoint()).trace().w


def metric_form_hermitian(point: GrassmannPoint, dx: QuatMatrix,
                          tol: Tolerances = DEFAULT) -> float:
    """Same line element as tr(w w*) with w = A* dX D, manifestly real.

    Here A* = (1+XX*)^{-1/2} and D = (1+X*X)^{-1/2} are the diagonal blocks
    of the coset representative through X, so w is the off-diagonal block of
    the pulled-back invariant form and tr(w w*) is a sum of squared norms.
    """
    x = point.x
    if dx.shape != x.shape:
        raise ShapeMismatch(f"tangent shape {dx.shape} != point shape {x.shape}")
    astar = func_hermitian(QuatMatrix.identity(point.j) + x @ x.adjoint(),
                           "invsqrt", tol)
    dmat = func_hermitian(QuatMatrix.identity(point.k) + x.adjoint() @ x,
                          "invsqrt", tol)
    w = astar @ dx @ dmat
    return float((w.a ** 2).sum())


def metric_form_expanded(point: GrassmannPoint, dx: QuatMatrix,
                         tol: Tolerances = DEFAULT) -> float:
    """Second form of the line element, with (1+X*X)^{-1} eliminated:

    tr[(1+XX*)^{-1} dX dX* - (1+XX*)^{-1} dX X* (1+XX*)^{-1} X dX*].
    """
    x = point.x
    if dx.shape != x.shape:
        raise ShapeMismatch(f"tangent shape {dx.shape} != point shape {x.shape}")
    left = (QuatMatrix.identity(point.j) + x @ x.adjoint()).inv(tol)
    term1 = left @ dx @ dx.adjoint()
    term2 = left @ dx @ x.adjoint() @ left @ x @ dx.adjoint()
    return (term1 - term2).trace().w


def pushforward_tangent(g: GroupElement, point: GrassmannPoint, dx: QuatMatrix,
                        step: float = None, tol: Tolerances = DEFAULT) -> QuatMatrix:
    """Central-difference transport of a tangent through the group action."""
    h = tol.fd_step if step is None else step
    plus = lft_apply(g, GrassmannPoint(point.x + dx * h), tol).x
    minus = lft_apply(g, GrassmannPoint(point.x - dx * h), tol).x
    return (plus - minus) * (0.5 / h)


def metric_invariance_residual(g: GroupElement, point: GrassmannPoint,
                               dx: QuatMatrix, step: float = None,
                               tol: Tolerances = DEFAULT) -> float:
    """|ds^2 at (X, dX) - ds^2 at (g X, g_* dX)| with finite-difference g_*."""
    before = metric_form(point, dx, tol)
    image = lft_apply(g, point, tol)
    dy = pushforward_tangent(g, point, dx, step, tol)
    after = metric_form(image, dy, tol)
    return abs(after - before)


def inversion_invariance_residual(q: Quaternion, dq: Quaternion,
                                  tol: Tolerances = DEFAULT) -> float:
    """Rank-one case: the metric is invariant under X -> X^{-1}.

    The tangent transports exactly as d(X^{-1}) = -X^{-1} dX X^{-1}.
    """
    p = GrassmannPoint(QuatMatrix.from_quaternions([[q]]))
    before = metric_form(p, QuatMatrix.from_quaternions([[dq]]), tol)
    qi = q.inverse()
    dq_inv = -(qi * dq * qi)
    p_inv = GrassmannPoint(QuatMatrix.from_quaternions([[qi]]))
    after = metric_form(p_inv, QuatMatrix.from_quaternions([[dq_inv]]), tol)
    return abs(after - before)


def curvature_trace(q: QuatMatrix, n: int, k: int,
                    tol: Tolerances = DEFAULT) -> tuple:
    """Both sides of the metric-tensor trace identity.

    For a k x n quaternion matrix Q, with traces taken in the complex
    embedding so that an m x m quaternion identity contributes 2m,

        tr[(1 + Q* Q)^{-1}]  =  2(n - k) + tr[(1 + Q Q*)^{-1}].

    Returns (lhs, rhs).
    """
    if q.shape != (k, n):
        raise DimensionMismatch(f"expected a {k} x {n} matrix, got {q.shape}")
    emb = q.embed()
    lhs_mat = np.linalg.inv(np.eye(2 * n) + emb.conj().T @ emb)
    rhs_mat = np.linalg.inv(np.eye(2 * k) + emb @ emb.conj().T)
    lhs = float(np.trace(lhs_mat).real)
    rhs = 2.0 * (n - k) + float(np.trace(rhs_mat).real)
    return lhs, rhs


def curvature_det(q: QuatMatrix, n: int, k: int,
                  tol: Tolerances = DEFAULT) -> float:
    """det of the metric tensor, |1 + Q Q*|^{-(k+n)}.

    The quaternionic determinant |1 + Q Q*| is the product of the
    deduplicated real eigenvalues of Q Q*, each shifted by one; it is
    cross-checked against the square root of the complex-embedding
    determinant before exponentiation.
    """
    if q.shape != (k, n):
        raise DimensionMismatch(f"expected a {k} x {n} matrix, got {q.shape}")
    evs = eigvals_hyperhermitian(q @ q.adjoint(), tol)
    det_quat = float(np.prod(1.0 + evs))
    emb = q.embed()
    det_emb = float(np.linalg.det(np.eye(2 * k) + emb @ emb.conj().T).real)
    ref = np.sqrt(max(det_emb, 0.0))
    if abs(det_quat - ref) > 1e-8 * max(1.0, abs(ref)):
        raise PairingFailure(
            f"eigenvalue product {det_quat:.12g} disagrees with embedding "
            f"determinant root {ref:.12g}")
    return det_quat ** (-(k + n))


# -- Haar averaging over the internal fibers ---------------------------------

def fundamental_action(eta, vec):
    """Componentwise left multiplication: the fundamental unit-quaternion action."""
    return [e * v for e, v in zip(eta, vec)]


def trivial_action(eta, vec):
    return list(vec)


def fiber_element(units) -> GroupElement:
    """Block-diagonal group element from a tuple of unit quaternions."""
    return GroupElement(QuatMatrix.diag(list(units)), check=False)


def haar_average(alpha, sigma, x: GroupElement, samples: int, seed: int = 0):
    """Monte-Carlo average of sigma(eta) alpha(x eta) over the fiber torus.

    ``eta`` is drawn uniformly from the product of unit-quaternion fibers
    (one factor per row of ``x``, via normalised 4d Gaussians); ``alpha``
    maps a group element to a list of quaternions and ``sigma`` is a unitary
    action on such lists.  The average f satisfies
    f(x xi) = sigma(xi^{-1}) f(x) up to O(1/sqrt(samples)).

    The fiber products x @ diag(eta) for all draws are batched into a single
    contraction; ``alpha`` and ``sigma`` are still invoked per draw.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    n = x.n
    etas = rng.normal(0.0, 1.0, (samples, n, 4))
    etas /= np.linalg.norm(etas, axis=2, keepdims=True)
    # (x eta)[r, c] = x[r, c] * eta[c] for the block-diagonal fiber element
    from .quaternion import MUL_TABLE
    shifted_all = np.einsum("rcp,Ncq,pqs->Nrcs", x.m.a, etas, MUL_TABLE,
                            optimize=True)
    acc = None
    for idx in range(samples):
        eta = [Quaternion.from_array(etas[idx, c]) for c in range(n)]
        shifted = GroupElement(QuatMatrix(shifted_all[idx]), check=False)
        val = sigma(eta, alpha(shifted))
        if acc is None:
            acc = list(val)
        else:
            acc = [a + v for a, v in zip(acc, val)]
    inv = 1.0 / samples
    return [a * inv for a in acc]


def inner_product(u, v) -> float:
    """Scalar part of sum_i conj(u_i) v_i."""
    total = Quaternion()
    for a, b in zip(u, v):
        total = total + a.conj() * b
    return total.w
