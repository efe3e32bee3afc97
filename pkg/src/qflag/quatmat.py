"""Rectangular quaternion matrices and the compact symplectic group.

Entries are stored as an ``(rows, cols, 4)`` float array in the basis order
(e, i, j, k).  All spectral work routes through the doubled complex
embedding: each quaternion entry is replaced by its 2x2 image, giving a
``(2 rows, 2 cols)`` complex matrix on which standard dense solvers apply.
The embedding is a faithful ring homomorphism, and a hyper-Hermitian
quaternion matrix embeds to a complex Hermitian matrix whose spectrum
consists of doubled real eigenvalues.
"""

from __future__ import annotations

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import (DimensionMismatch, MalformedM2C, NonSquare,
                     NotGroupElement, NotHyperHermitian, NotSkewAdjoint,
                     PairingFailure, SingularInvSqrt)
from .quaternion import MUL_TABLE, Quaternion


class QuatMatrix:
    """Dense matrix of quaternions with value semantics."""

    __slots__ = ("a",)

    def __init__(self, a):
        a = np.asarray(a, dtype=float)
        if a.ndim != 3 or a.shape[2] != 4:
            raise DimensionMismatch(f"expected shape (rows, cols, 4), got {a.shape}")
        self.a = a

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QuatMatrix":
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def identity(cls, n: int) -> "QuatMatrix":
        a = np.zeros((n, n, 4))
        a[np.arange(n), np.arange(n), 0] = 1.0
        return cls(a)

    @classmethod
    def from_quaternions(cls, rows) -> "QuatMatrix":
        """Build from a nested list of :class:`Quaternion`."""
        data = [[q.to_array() for q in row] for row in rows]
        return cls(np.array(data))

    @classmethod
    def from_real(cls, m) -> "QuatMatrix":
        """Real matrix into the e-component."""
        m = np.asarray(m, dtype=float)
        a = np.zeros(m.shape + (4,))
        a[..., 0] = m
        return cls(a)

    @classmethod
    def diag(cls, entries) -> "QuatMatrix":
        n = len(entries)
        a = np.zeros((n, n, 4))
        for i, q in enumerate(entries):
            a[i, i] = q.to_array()
        return cls(a)

    # -- basic queries ----------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape[:2]

    def entry(self, i: int, j: int) -> Quaternion:
        return Quaternion.from_array(self.a[i, j])

    def submatrix(self, rows: slice, cols: slice) -> "QuatMatrix":
        return QuatMatrix(self.a[rows, cols])

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix(self.a + other.a)

    def __sub__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix(self.a - other.a)

    def __neg__(self) -> "QuatMatrix":
        return QuatMatrix(-self.a)

    def __mul__(self, s):
        if isinstance(s, (int, float)):
            return QuatMatrix(self.a * float(s))
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "QuatMatrix") -> "QuatMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.shape} by {other.shape}")
        prod = np.einsum("ilp,ljq,pqr->ijr", self.a, other.a, MUL_TABLE,
                         optimize=True)
        return QuatMatrix(prod)

    def scale_left(self, q: Quaternion) -> "QuatMatrix":
        """Left multiplication of every entry by the quaternion ``q``."""
        out = np.einsum("p,ijq,pqr->ijr", q.to_array(), self.a, MUL_TABLE)
        return QuatMatrix(out)

    def adjoint(self) -> "QuatMatrix":
        """Conjugate transpose."""
        out = self.a.transpose(1, 0, 2).copy()
        out[..., 1:] *= -1.0
        return QuatMatrix(out)

    def trace(self) -> Quaternion:
        if not self.is_square():
            raise NonSquare("trace of a non-square matrix")
        n = self.rows
        return Quaternion.from_array(self.a[np.arange(n), np.arange(n)].sum(axis=0))

    def frobenius_norm(self) -> float:
        return float(np.sqrt((self.a ** 2).sum()))

    def max_abs(self) -> float:
        """Largest magnitude over all real components."""
        return float(np.abs(self.a).max()) if self.a.size else 0.0

    def allclose(self, other: "QuatMatrix", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol

    # -- complex embedding --------------------------------------------------------

    def embed(self) -> np.ndarray:
        """(2 rows, 2 cols) complex matrix with one 2x2 block per entry."""
        w, x, y, z = (self.a[..., c] for c in range(4))
        blocks = np.empty((self.rows, self.cols, 2, 2), dtype=complex)
        blocks[..., 0, 0] = w + 1j * z
        blocks[..., 0, 1] = x + 1j * y
        blocks[..., 1, 0] = -x + 1j * y
        blocks[..., 1, 1] = w - 1j * z
        return blocks.transpose(0, 2, 1, 3).reshape(2 * self.rows, 2 * self.cols)

    @classmethod
    def project(cls, emb, tol: float = None, strict: bool = True) -> "QuatMatrix":
        """Back from a complex embedding, checking the block structure.

        The residual against the quaternionic structure (m22 = conj(m11),
        m21 = -conj(m12) per block) must stay below ``tol`` relative to the
        matrix scale when ``strict``.
        """
        tol = DEFAULT.structure if tol is None else tol
        emb = np.asarray(emb, dtype=complex)
        r2, c2 = emb.shape
        if r2 % 2 or c2 % 2:
            raise MalformedM2C("embedding dimensions must be even")
        blocks = emb.reshape(r2 // 2, 2, c2 // 2, 2).transpose(0, 2, 1, 3)
        m11, m12 = blocks[..., 0, 0], blocks[..., 0, 1]
        m21, m22 = blocks[..., 1, 0], blocks[..., 1, 1]
        if strict:
            scale = max(1.0, float(np.abs(emb).max()))
            res = max(float(np.abs(m22 - m11.conj()).max()),
                      float(np.abs(m21 + m12.conj()).max()))
            if res > tol * scale:
                raise MalformedM2C(
                    f"structure residual {res:.3e} exceeds {tol:.1e} * scale")
        a = np.empty((r2 // 2, c2 // 2, 4))
        a[..., 0] = (m11.real + m22.real) / 2.0
        a[..., 1] = (m12.real - m21.real) / 2.0
        a[..., 2] = (m12.imag + m21.imag) / 2.0
        a[..., 3] = (m11.imag - m22.imag) / 2.0
        return cls(a)

    def inv(self, tol: Tolerances = DEFAULT) -> "QuatMatrix":
        """Inverse via the complex embedding (solve, project back)."""
        if not self.is_square():
            raise NonSquare("inverse of a non-square matrix")
        emb = self.embed()
        sol = np.linalg.solve(emb, np.eye(2 * self.rows, dtype=complex))
        return QuatMatrix.project(sol, tol=tol.structure)

    # -- structure predicates ----------------------------------------------------------

    def is_hermitian(self, tol: float = None) -> bool:
        tol = DEFAULT.identity if tol is None else tol
        return (self - self.adjoint()).max_abs() <= tol * max(1.0, self.max_abs())

    def is_skew_adjoint(self, tol: float = None) -> bool:
        tol = DEFAULT.identity if tol is None else tol
        return (self + self.adjoint()).max_abs() <= tol * max(1.0, self.max_abs())

    def is_unitary(self, tol: float = None) -> bool:
        tol = DEFAULT.identity if tol is None else tol
        delta = self.adjoint() @ self - QuatMatrix.identity(self.rows)
        return delta.max_abs() <= tol

    def __repr__(self) -> str:
        return f"QuatMatrix(shape={self.shape})"


def block_matrix(blocks) -> QuatMatrix:
    """Assemble from a 2d grid of conforming QuatMatrix blocks."""
    rows = [np.concatenate([b.a for b in row], axis=1) for row in blocks]
    return QuatMatrix(np.concatenate(rows, axis=0))


def matmul(a: QuatMatrix, b: QuatMatrix) -> QuatMatrix:
    return a @ b


def adjoint(m: QuatMatrix) -> QuatMatrix:
    return m.adjoint()


def expm(m: QuatMatrix, order: int = 18) -> QuatMatrix:
    """Matrix exponential by scaling and squaring.

    The argument is halved until the 1-norm of its complex embedding drops
    below 0.5, the truncated power series of the stated order is summed with
    quaternion products, and the result is squared back up.
    """
    if not m.is_square():
        raise NonSquare("exponential of a non-square matrix")
    norm1 = float(np.linalg.norm(m.embed(), 1)) if m.rows else 0.0
    squarings = 0
    if norm1 > 0.5:
        squarings = int(np.ceil(np.log2(norm1 / 0.5)))
    scaled = m * (0.5 ** squarings)
    result = QuatMatrix.identity(m.rows)
    term = QuatMatrix.identity(m.rows)
    for k in range(1, order + 1):
        term = (term @ scaled) * (1.0 / k)
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result


def eigvals_hyperhermitian(p: QuatMatrix, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Real eigenvalues of a hyper-Hermitian matrix, ascending.

    The 2n complex-embedding eigenvalues come in equal pairs; each pair is
    collapsed to a single quaternionic eigenvalue.
    """
    if not p.is_square():
        raise NonSquare("eigenvalues of a non-square matrix")
    if not p.is_hermitian(tol.identity * 10):
        raise NotHyperHermitian("matrix is not equal to its conjugate transpose")
    emb = p.embed()
    emb = (emb + emb.conj().T) / 2.0
    lam = np.linalg.eigvalsh(emb)
    even, odd = lam[0::2], lam[1::2]
    gap = np.abs(even - odd)
    scale = np.maximum(1.0, np.abs(even))
    if np.any(gap > tol.pairing_rel * scale):
        raise PairingFailure(
            f"embedding spectrum does not pair: max gap {gap.max():.3e}")
    return (even + odd) / 2.0


_SMALL = 1e-8


def _sinc_sqrt(lam: np.ndarray) -> np.ndarray:
    """sin(sqrt(t))/sqrt(t), extended as an entire function of t."""
    out = np.empty_like(lam)
    tiny = np.abs(lam) < _SMALL
    out[tiny] = 1.0 - lam[tiny] / 6.0 + lam[tiny] ** 2 / 120.0
    pos = (~tiny) & (lam > 0)
    neg = (~tiny) & (lam < 0)
    out[pos] = np.sin(np.sqrt(lam[pos])) / np.sqrt(lam[pos])
    out[neg] = np.sinh(np.sqrt(-lam[neg])) / np.sqrt(-lam[neg])
    return out


def _cos_sqrt(lam: np.ndarray) -> np.ndarray:
    """cos(sqrt(t)) as an entire function of t."""
    out = np.empty_like(lam)
    pos = lam >= 0
    out[pos] = np.cos(np.sqrt(lam[pos]))
    out[~pos] = np.cosh(np.sqrt(-lam[~pos]))
    return out


def func_hermitian(p: QuatMatrix, kind: str, tol: Tolerances = DEFAULT) -> QuatMatrix:
    """Apply a scalar function to a hyper-Hermitian matrix spectrally.

    ``kind`` is one of ``sqrt``, ``invsqrt``, ``cos_sqrt``, ``sin_sqrt``,
    ``sinc_sqrt``; the last three treat the eigenvalue as a squared argument
    (cos_sqrt of P gives cos of the operator square root of P) and are the
    pieces needed for the exponential coset parameterisation, where
    ``sinc_sqrt(x xi*) @ xi`` stays finite for rank-deficient arguments.
    """
    if not p.is_square():
        raise NonSquare("matrix function of a non-square matrix")
    if not p.is_hermitian(tol.identity * 10):
        raise NotHyperHermitian("matrix function requires a hyper-Hermitian input")
    emb = p.embed()
    emb = (emb + emb.conj().T) / 2.0
    lam, vec = np.linalg.eigh(emb)
    if kind == "sqrt":
        vals = np.sqrt(np.maximum(lam, 0.0))
    elif kind == "invsqrt":
        if np.any(lam <= tol.identity):
            raise SingularInvSqrt(f"minimum eigenvalue {lam.min():.3e}")
        vals = 1.0 / np.sqrt(lam)
    elif kind == "cos_sqrt":
        vals = _cos_sqrt(lam)
    elif kind == "sin_sqrt":
        vals = np.sin(np.sqrt(np.maximum(lam, 0.0)))
    elif kind == "sinc_sqrt":
        vals = _sinc_sqrt(lam)
    else:
        raise ValueError(f"unknown scalar function tag {kind!r}")
    out = (vec * vals) @ vec.conj().T
    return QuatMatrix.project(out, tol=tol.structure)


class GroupElement:
    """Member of the unitary quaternion group: square with g* g = 1."""

    __slots__ = ("m",)

    def __init__(self, m: QuatMatrix, tol: float = None, check: bool = True):
        if check:
            if not m.is_square():
                raise NotGroupElement("group elements are square matrices")
            if not m.is_unitary(DEFAULT.identity if tol is None else tol):
                res = (m.adjoint() @ m - QuatMatrix.identity(m.rows)).max_abs()
                raise NotGroupElement(f"unitarity residual {res:.3e}")
        self.m = m

    @property
    def n(self) -> int:
        return self.m.rows

    def inverse(self) -> "GroupElement":
        return GroupElement(self.m.adjoint(), check=False)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.m @ other.m, check=False)

    def blocks(self, j: int, k: int):
        """Conforming partition into (A, B, C, D) with A of size j x j."""
        if j + k != self.n:
            raise DimensionMismatch(f"partition {j}+{k} != {self.n}")
        a = self.m.a
        return (QuatMatrix(a[:j, :j]), QuatMatrix(a[:j, j:]),
                QuatMatrix(a[j:, :j]), QuatMatrix(a[j:, j:]))

    def __repr__(self) -> str:
        return f"GroupElement(n={self.n})"


def require_skew_adjoint(m: QuatMatrix, tol: float = None) -> QuatMatrix:
    tol = DEFAULT.identity if tol is None else tol
    if not m.is_skew_adjoint(tol):
        raise NotSkewAdjoint("generator must satisfy g* = -g")
    return m


def interleave_to_block_permutation(n: int) -> np.ndarray:
    """Permutation matrix sending index 2i+s to s*n+i.

    Conjugation by it carries the block-diagonal almost complex structure
    1_n (x) j into the symplectic form j (x) 1_n.
    """
    perm = np.zeros((2 * n, 2 * n))
    for i in range(n):
        for s in range(2):
            perm[s * n + i, 2 * i + s] = 1.0
    return perm


def to_sp2nc(g: GroupElement) -> np.ndarray:
    """Complex 2n x 2n form of a group element.

    The result G satisfies both G' J G = J for J = j (x) 1_n and G* G = 1,
    i.e. it is simultaneously complex symplectic and unitary.
    """
    perm = interleave_to_block_permutation(g.n)
    return perm @ g.m.embed() @ perm.T


def sp2nc_form(n: int) -> np.ndarray:
    """The symplectic form j (x) 1_n preserved by :func:`to_sp2nc`."""
    return np.kron(np.array([[0.0, 1.0], [-1.0, 0.0]]), np.eye(n))


# -- random draws -------------------------------------------------------------

def random_quatmat(rng: np.random.Generator, rows: int, cols: int,
                   scale: float = 1.0) -> QuatMatrix:
    return QuatMatrix(rng.normal(0.0, scale, (rows, cols, 4)))


def random_skew_adjoint(rng: np.random.Generator, n: int,
                        scale: float = 1.0) -> QuatMatrix:
    m = random_quatmat(rng, n, n, scale)
    return (m - m.adjoint()) * 0.5


def random_group_element(rng: np.random.Generator, n: int,
                         scale: float = 0.7) -> GroupElement:
    return GroupElement(expm(random_skew_adjoint(rng, n, scale)))
