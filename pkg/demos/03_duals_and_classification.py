"""Duals, canonical maps, and the classification report.

The three-dimensional local modules M(1,-q,c) over the six-dimensional
algebra are the interesting ones: their duals are all isomorphic to a
single right module, the canonical map M -> M** has one-dimensional kernel
and cokernel, and neither M nor its dual shows an Ext witness -- yet M is
not torsionless, so it is far from Gorenstein-projective.
"""

from fractions import Fraction

from monomod import QQ, a_dual, canonical_map, classify, is_isomorphic
from monomod.duality import left_add_approximation
from monomod.gallery import generic_M_prime, lambda_q, module_M1qc

L = lambda_q(QQ, 2)

for c in (0, 1, -1):
    M = module_M1qc(L, Fraction(c))
    dd = a_dual(M)
    Mp = generic_M_prime(L, 1, Fraction(-1, 2), 0)
    v = is_isomorphic(dd.dual, Mp, seed=0)
    print(f"c = {c}: dim M* = {dd.dual.dim}, M* ~ M'(1,-q^-1,0): {v.status}")

M = module_M1qc(L, Fraction(0))
phi = canonical_map(M)
print("\ncanonical map of M: rank", phi.rank(),
      "kernel", phi.kernel_dim(), "cokernel", phi.cokernel_dim())

rep = classify(M, bound=6, seed=0)
print("torsionless:", rep.torsionless, "| reflexive:", rep.reflexive)
print("semi-GP:", rep.semi_gp.status, "| dual semi-GP:", rep.dual_semi_gp.status)
print("Gorenstein-projective:", rep.gp.status, rep.gp.witness)

ap = left_add_approximation(M)
print("\nminimal approximation M -> A^t with t =", len(ap.components))
print("the single component sends 1~ to",
      [QQ.render(v) for v in ap.components[0].matrix.column(0)])
