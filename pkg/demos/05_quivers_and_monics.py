"""Tensor algebras over quivers and the two monic checks.

Submodules of projectives are always monic; with a monomial relation the
combinatorial test sees obstructions that the gathered arrows alone miss,
as the torsionless-but-not-monic simple module here shows.
"""

import random

from monomod import (
    AlgebraPresentation,
    ModuleMap,
    QQ,
    Quiver,
    QuiverRep,
    build_tensor,
    classify,
    monic_check,
    module_to_rep,
    regular_modules,
    rep_to_module,
    validate_algebra,
    zero_module,
)
from monomod.sampling import random_submodule

pres = AlgebraPresentation(
    QQ, 2, ["1", "x"], [1, 0],
    [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], idempotents=[[1, 0]],
)
A = validate_algebra(pres, label="k[x]/(x^2)")

Q = Quiver([1, 2, 3], [("g1", 2, 1), ("g2", 3, 2)])
T = build_tensor(A, Q)
print("tensor algebra dim:", T.flat.dim, "| paths:", T.npaths)

rng = random.Random(1)
print("\nrandom submodules of the projective regular module are monic:")
regT = regular_modules(T.flat)[0]
for i in range(4):
    sub, _ = random_submodule(regT, rng)
    rep = module_to_rep(T, sub)
    v = monic_check(rep, "combinatorial")
    print(f"  submodule of dim {sub.dim}: {v.status}")

# a relation changes the picture: kill the composite 3 -> 2 -> 1
pk = AlgebraPresentation(QQ, 1, ["1"], [1], [(0, 0, 0, 1)], idempotents=[[1]])
k = validate_algebra(pk, label="k")
Qrel = Quiver([1, 2, 3], [("a", 3, 2), ("b", 2, 1)], relations=[("a", "b")])
Trel = build_tensor(k, Qrel)
kmod = regular_modules(k)[0]
z = zero_module(k)
S2 = QuiverRep(Trel, {1: z, 2: kmod, 3: z},
               {"a": ModuleMap.zero(z, kmod), "b": ModuleMap.zero(kmod, z)})
print("\nmiddle-vertex simple over the bound quiver:")
print("  combinatorial monic check:", monic_check(S2, "combinatorial").describe())
print("  homological monic check:  ", monic_check(S2, "homological", bound=6).describe())
flat = rep_to_module(S2)
print("  yet torsionless:", classify(flat, bound=3, seed=0).torsionless)
