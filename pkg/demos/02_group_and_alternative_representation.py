"""Quaternion matrices, the unitary quaternion group, and its complex form.

Builds group elements as exponentials of skew-adjoint matrices, checks
membership, and permutes the doubled embedding into the standard complex
symplectic shape where the algebra shows its [[a, b], [-b*, -a']] blocks.
"""

import numpy as np

from qflag import QuatMatrix, expm, random_skew_adjoint, to_sp2nc
from qflag.quatmat import (interleave_to_block_permutation,
                           random_group_element, sp2nc_form)

rng = np.random.default_rng(1)
n = 3

gen = random_skew_adjoint(rng, n)
print("skew-adjoint generator: ||gen + gen*|| =",
      (gen + gen.adjoint()).max_abs())

g = expm(gen)
print("exp(gen) is unitary:    ||g*g - 1||    =",
      (g.adjoint() @ g - QuatMatrix.identity(n)).max_abs())
print("embedding determinant modulus:",
      abs(np.linalg.det(g.embed())))

print("\npermuting 1 (x) j into j (x) 1:")
perm = interleave_to_block_permutation(n)
jn = np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))
print("  exact:", np.abs(perm @ jn @ perm.T - sp2nc_form(n)).max() == 0.0)

big = to_sp2nc(random_group_element(rng, n))
form = sp2nc_form(n)
print("\npermuted group element G:")
print("  G' J G = J residual :", np.abs(big.T @ form @ big - form).max())
print("  G* G   = 1 residual :",
      np.abs(big.conj().T @ big - np.eye(2 * n)).max())

alg = perm @ random_skew_adjoint(rng, n).embed() @ perm.T
a, b = alg[:n, :n], alg[:n, n:]
print("\npermuted algebra blocks:")
print("  a* = -a residual:", np.abs(a + a.conj().T).max())
print("  b' =  b residual:", np.abs(b - b.T).max())
print("  lower row is [-b*, -a'] :",
      max(np.abs(alg[n:, :n] + b.conj().T).max(),
          np.abs(alg[n:, n:] + a.T).max()))
