"""Resolutions, Ext, Tor, and bounded semi-Gorenstein-projectivity.

The simple module over k[x]/(x^2) has the classic periodic resolution with
every differential equal to multiplication by x; its Ext against the
regular module vanishes in positive degrees and the syzygy periodicity
certifies that vanishing in all degrees.
"""

from monomod import (
    AlgebraPresentation,
    QQ,
    ext_dims,
    is_semi_gp,
    k_dual,
    resolve,
    simples_and_projectives,
    regular_modules,
    tor_dims,
    validate_algebra,
)
from monomod.gallery import lsgp_example

pres = AlgebraPresentation(
    QQ, 2, ["1", "x"], [1, 0],
    [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], idempotents=[[1, 0]],
)
A = validate_algebra(pres, label="k[x]/(x^2)")
k = simples_and_projectives(A)["simples"][0]
reg = regular_modules(A)[0]

r = resolve(k, 5, minimal=True)
print("resolution of k:", [t.dim for t in r.terms])
print("certificates check:", r.check_certificates())

print("Ext^i(k, A):", ext_dims(k, reg, 6).dims)
print("Tor_i(k, k):", tor_dims(k_dual(k), k, 5))

v = is_semi_gp(k, 6)
print("k semi-Gorenstein-projective:", v.status, "| certificate:", v.certificate)

# an algebra where only the projectives survive the test
ex = lsgp_example()
print("\nloop-arrow algebra, five indecomposables:")
for name, m in zip(ex["names"], ex["modules"]):
    v = is_semi_gp(m, 6, seed=0)
    extra = v.witness if v.status == "fails" else v.certificate
    print(f"  {name}: {v.status}  {extra}")
