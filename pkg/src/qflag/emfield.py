"""Quaternionic first-order operator on polynomial fields.

A field psi = A0 e + A1 i + A2 j + A3 k has polynomial components in the
four real coordinates (x0, x1, x2, x3), with x0 the cyclic time variable.
The conjugated linear operator p* = d0 + grad acts by quaternion
multiplication of the operator against the field,

    p* psi = (A0,0 - div A) - E + B,

with E = -A,0 - grad A0 and B = curl A.  Components are exact polynomials
(rational coefficients), so the decomposition identity is checked as
coefficient equality, not numerically.  The sign convention embeds the
electric field with a minus, exactly as the vector part -E + B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quaternion import Quaternion

_QUAT_SIGNS = {
    # (r, s) -> (component, sign) for e_r * e_s in basis order (e, i, j, k)
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


class RealPoly:
    """Exact polynomial in (x0, x1, x2, x3): {exponent 4-tuple: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for expo, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[expo] = clean.get(expo, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, c) -> "RealPoly":
        return cls({(0, 0, 0, 0): Fraction(c)})

    @classmethod
    def x(cls, axis: int) -> "RealPoly":
        expo = [0, 0, 0, 0]
        expo[axis] = 1
        return cls({tuple(expo): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, o: "RealPoly") -> "RealPoly":
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return RealPoly(out)

    def __sub__(self, o: "RealPoly") -> "RealPoly":
        return self + (-o)

    def __neg__(self) -> "RealPoly":
        return RealPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, o) -> "RealPoly":
        if not isinstance(o, RealPoly):
            return RealPoly({e: c * Fraction(o) for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return RealPoly(out)

    __rmul__ = __mul__

    def __eq__(self, o) -> bool:
        return isinstance(o, RealPoly) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def diff(self, axis: int) -> "RealPoly":
        out = {}
        for expo, c in self.terms.items():
            p = expo[axis]
            if p == 0:
                continue
            e = list(expo)
            e[axis] = p - 1
            e = tuple(e)
            out[e] = out.get(e, 0) + c * p
        return RealPoly(out)

    def eval(self, point) -> float:
        total = 0.0
        for expo, c in self.terms.items():
            v = float(c)
            for xi, p in zip(point, expo):
                v *= xi ** p
            total += v
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for expo, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}" + (f"^{p}" if p > 1 else "")
                            for i, p in enumerate(expo) if p)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


@dataclass
class QPolyField:
    """psi = A0 e + A1 i + A2 j + A3 k with polynomial components."""

    components: tuple

    def __post_init__(self):
        if len(self.components) != 4:
            raise ValueError("a field has exactly four components")
        self.components = tuple(self.components)

    @classmethod
    def zero(cls) -> "QPolyField":
        return cls(tuple(RealPoly() for _ in range(4)))

    @classmethod
    def from_component(cls, index: int, poly: RealPoly) -> "QPolyField":
        comps = [RealPoly() for _ in range(4)]
        comps[index] = poly
        return cls(tuple(comps))

    def __add__(self, o: "QPolyField") -> "QPolyField":
        return QPolyField(tuple(a + b for a, b in
                                zip(self.components, o.components)))

    def __eq__(self, o) -> bool:
        return (isinstance(o, QPolyField)
                and all(a == b for a, b in zip(self.components, o.components)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def eval(self, point) -> Quaternion:
        return Quaternion(*(c.eval(point) for c in self.components))


@dataclass
class FieldDecomposition:
    """Scalar term A0,0 - div A plus the two field vectors."""

    scalar: RealPoly
    electric: tuple   # E = -A,0 - grad A0
    magnetic: tuple   # B = curl A


def apply_pstar(psi: QPolyField) -> QPolyField:
    """(d0 + d1 i + d2 j + d3 k) * psi by exact quaternion differentiation."""
    out = [RealPoly() for _ in range(4)]
    for r in range(4):
        for s in range(4):
            d = psi.components[s].diff(r)
            if d.is_zero():
                continue
            comp, sign = _QUAT_SIGNS[(r, s)]
            out[comp] = out[comp] + (d if sign > 0 else -d)
    return QPolyField(tuple(out))


def decompose(psi: QPolyField) -> FieldDecomposition:
    """Componentwise scalar/electric/magnetic split of the potential.

    Cross-validated on every call: the scalar part of p* psi must equal
    A0,0 - div A and its vector part must equal -E + B, as exact polynomial
    identities.
    """
    a0, a1, a2, a3 = psi.components
    scalar = a0.diff(0) - (a1.diff(1) + a2.diff(2) + a3.diff(3))
    electric = (-a1.diff(0) - a0.diff(1),
                -a2.diff(0) - a0.diff(2),
                -a3.diff(0) - a0.diff(3))
    magnetic = (a3.diff(2) - a2.diff(3),
                a1.diff(3) - a3.diff(1),
                a2.diff(1) - a1.diff(2))
    image = apply_pstar(psi)
    assert image.components[0] == scalar, "scalar part mismatch"
    for axis in range(3):
        expected = magnetic[axis] - electric[axis]
        assert image.components[axis + 1] == expected, \
            f"vector part mismatch on component {axis + 1}"
    return FieldDecomposition(scalar=scalar, electric=electric,
                              magnetic=magnetic)


def quaternion_product_identity(v: Quaternion, w: Quaternion) -> float:
    """Residual of vw = (v0 w0 - v.w) + (v0 w + w0 v + v x w)."""
    import numpy as np
    direct = v * w
    vv, wv = v.vector, w.vector
    scalar = v.w * w.w - float(vv @ wv)
    vector = v.w * wv + w.w * vv + np.cross(vv, wv)
    assembled = Quaternion(scalar, *vector)
    return (direct - assembled).norm()


def random_field(rng, max_degree: int = 3, terms: int = 4,
                 coeff_range: int = 5) -> QPolyField:
    """Random integer-coefficient field for exactness tests."""
    comps = []
    for _ in range(4):
        poly = RealPoly()
        for _ in range(terms):
            expo = tuple(int(v) for v in rng.integers(0, max_degree + 1, 4))
            while sum(expo) > max_degree:
                expo = tuple(int(v) for v in rng.integers(0, max_degree + 1, 4))
            c = int(rng.integers(-coeff_range, coeff_range + 1))
            poly = poly + RealPoly({expo: Fraction(c)})
        comps.append(poly)
    return QPolyField(tuple(comps))
