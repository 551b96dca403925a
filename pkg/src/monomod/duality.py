"""A-duals M* = Hom(M, A), double duals, the canonical map M -> M**,
torsionless/reflexive tests, the full classification report, and left
add(A)-approximations.

Duals are realized on the coordinate space of a stored Hom basis; every
identification downstream is an explicit matrix in these coordinates.
"""

from .algebra import regular_modules
from .errors import ValidationError
from .linalg import Matrix
from .modules import (
    Module,
    ModuleMap,
    Verdict,
    direct_sum,
    hom_space,
    submodule_generated,
    zero_module,
)


class DualData:
    """M* on the coordinates of a Hom(M, A) basis.

    basis[i] is the ModuleMap M -> A that coordinate i stands for;
    evaluate() is the exact pairing M x M* -> A.  The basis is the canonical
    RREF basis of the Hom space, so coordinates of a member are read off at
    the pivot entries (and the read-off is verified exactly).
    """

    __slots__ = ("module", "dual", "basis", "_pivots")

    def __init__(self, module, dual, basis):
        self.module = module
        self.dual = dual
        self.basis = basis
        self._pivots = None

    def evaluate(self, m_vector, dual_coords):
        """The algebra element f(v) for f given by coordinates."""
        field = self.module.field
        out = [field.zero] * self.module.algebra.dim
        for c, f in zip(dual_coords, self.basis):
            if c:
                w = f.matrix.apply(m_vector)
                for r, x in enumerate(w):
                    if x:
                        out[r] = field.add(out[r], field.mul(c, x))
        return out

    def coords_of_map(self, matrix):
        """Coordinates of a Hom-space element given as a full matrix.

        The stored basis is RREF in row-major vec coordinates, so the
        coefficient on basis[i] is the entry at its pivot; the expansion is
        then verified exactly."""
        if self._pivots is None:
            pivots = []
            for f in self.basis:
                vec = [x for row in f.matrix.rows for x in row]
                pivots.append(next(j for j, x in enumerate(vec) if x))
            self._pivots = pivots
        dm = self.module.dim
        coords = []
        for p in self._pivots:
            coords.append(matrix.rows[p // dm][p % dm])
        if self.map_from_coords(coords) != matrix:
            raise ValidationError("matrix is not in the stored Hom space")
        return coords

    def map_from_coords(self, coords):
        field = self.module.field
        out = None
        for c, f in zip(coords, self.basis):
            if c:
                t = f.matrix.scale(c)
                out = t if out is None else out + t
        if out is None:
            out = Matrix.zero(field, self.module.algebra.dim, self.module.dim)
        return out


def a_dual(m):
    """DualData of m; cached on the module.  a_dual(a_dual(m).dual) is M**."""
    got = m._cache.get("a_dual")
    if got is not None:
        return got
    algebra = m.algebra
    field = m.field
    reg = regular_modules(algebra)[0 if m.side == "left" else 1]
    basis = hom_space(m, reg)
    dual_side = "right" if m.side == "left" else "left"
    h = len(basis)
    dd = DualData(m, None, basis)
    acts = []
    for i in range(algebra.dim):
        mult = algebra.right_matrix(i) if m.side == "left" else algebra.left_matrix(i)
        cols = []
        for f in basis:
            transformed = mult * f.matrix
            cols.append(dd.coords_of_map(transformed) if h else [])
        acts.append(Matrix.from_columns(field, cols, h))
    dual = Module(
        algebra, dual_side, h, acts,
        label=f"({m.label})*" if m.label else "dual",
        _validated=True,
    )
    dd.dual = dual
    m._cache["a_dual"] = dd
    return dd


def dual_map(f):
    """f*: N* -> M* for f: M -> N (precomposition on stored Hom bases)."""
    dm = a_dual(f.source)
    dn = a_dual(f.target)
    cols = [dm.coords_of_map(g.matrix * f.matrix) for g in dn.basis]
    mat = Matrix.from_columns(f.source.field, cols, len(dm.basis))
    return ModuleMap(dn.dual, dm.dual, mat, check=False)


def double_dual(m):
    """(DualData of M*, i.e. M** = its .dual)"""
    return a_dual(a_dual(m).dual)


def canonical_map(m):
    """phi_M: M -> M**, phi(v)(f) = f(v), as an explicit ModuleMap."""
    got = m._cache.get("canonical_map")
    if got is not None:
        return got
    dd = a_dual(m)
    ddd = a_dual(dd.dual)
    field = m.field
    algebra = m.algebra
    h = len(dd.basis)
    cols = []
    for j in range(m.dim):
        v = [field.zero] * m.dim
        v[j] = field.one
        # phi(v) as a map M* -> A: column i is f_i(v)
        values = Matrix.from_columns(
            field, [dd.basis[i].matrix.apply(v) for i in range(h)], algebra.dim
        )
        cols.append(ddd.coords_of_map(values) if len(ddd.basis) else [])
    mat = Matrix.from_columns(field, cols, len(ddd.basis))
    phi = ModuleMap(m, ddd.dual, mat, check=False)
    m._cache["canonical_map"] = phi
    return phi


class ClassificationReport:
    __slots__ = (
        "module", "torsionless", "reflexive", "semi_gp", "dual_semi_gp",
        "double_semi_gp", "gp", "phi_rank", "phi_kernel_dim", "phi_cokernel_dim",
        "bound",
    )

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def describe(self):
        return {
            "module": self.module.label,
            "torsionless": self.torsionless,
            "reflexive": self.reflexive,
            "semi_gp": self.semi_gp.describe(),
            "dual_semi_gp": self.dual_semi_gp.describe(),
            "double_semi_gp": self.double_semi_gp.describe(),
            "gp": self.gp.describe(),
            "phi_rank": self.phi_rank,
            "phi_kernel_dim": self.phi_kernel_dim,
            "phi_cokernel_dim": self.phi_cokernel_dim,
            "bound": self.bound,
        }


def _combine_verdicts(verdicts, bound):
    """all-of combination: fails if any fails, holds if all hold."""
    for v in verdicts:
        if v.status == Verdict.FAILS:
            return Verdict.fails(v.witness)
    if all(v.status == Verdict.HOLDS for v in verdicts):
        return Verdict.holds([v.certificate for v in verdicts])
    return Verdict.unknown(bound)


def classify(m, bound=6, seed=0):
    """Torsionless/reflexive (exact) and semi-GP structure (bounded) of m."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    from .homology import is_semi_gp

    phi = canonical_map(m)
    torsionless = phi.kernel_dim() == 0
    reflexive = torsionless and phi.is_surjective()
    semi = is_semi_gp(m, bound, seed=seed)
    dual_semi = is_semi_gp(a_dual(m).dual, bound, seed=seed)
    double = _combine_verdicts([semi, dual_semi], bound)
    if not reflexive:
        gp = Verdict.fails({"reason": "not reflexive",
                            "phi_kernel_dim": phi.kernel_dim(),
                            "phi_cokernel_dim": phi.cokernel_dim()})
    elif double.status == Verdict.FAILS:
        gp = Verdict.fails(double.witness)
    elif double.status == Verdict.HOLDS:
        gp = Verdict.holds({"reflexive": True, "double_semi_gp": double.certificate})
    else:
        gp = Verdict.unknown(bound)
    return ClassificationReport(
        module=m,
        torsionless=torsionless,
        reflexive=reflexive,
        semi_gp=semi,
        dual_semi_gp=dual_semi,
        double_semi_gp=double,
        gp=gp,
        phi_rank=phi.rank(),
        phi_kernel_dim=phi.kernel_dim(),
        phi_cokernel_dim=phi.cokernel_dim(),
        bound=bound,
    )


class ApproximationData:
    __slots__ = ("map", "components", "target", "minimal", "inclusions")

    def __init__(self, map, components, target, minimal, inclusions):
        self.map = map
        self.components = components
        self.target = target
        self.minimal = minimal
        self.inclusions = inclusions


def left_add_approximation(m):
    """phi: m -> A^t whose components generate m* (minimal when the radical
    is available).  Every map m -> A then factors through phi; verified."""
    if m.side != "left":
        raise ValidationError("left_add_approximation expects a left module")
    algebra = m.algebra
    dd = a_dual(m)
    dual = dd.dual
    field = m.field
    minimal = algebra.idempotents is not None and algebra.has_radical()
    if dual.dim == 0:
        target = zero_module(algebra, "left")
        return ApproximationData(
            ModuleMap(m, target, Matrix(field, [], m.dim), check=False),
            [], target, True, [],
        )
    if minimal:
        from .homology import _minimal_generators

        gens = [g for (_e, g) in _minimal_generators(dual)]
    else:
        gens = [list(Matrix.identity(field, dual.dim).column(j)) for j in range(dual.dim)]
    # the generators must generate m* as a module over A; verified by solving
    span, _ = submodule_generated(dual, gens)
    if span.dim != dual.dim:
        raise ValidationError("approximation components fail to generate the dual")
    comps = [ModuleMap(m, dd.basis[0].target, dd.map_from_coords(g), check=False)
             for g in gens]
    reg = dd.basis[0].target
    target, inclusions, _pr = direct_sum([reg] * len(comps), label=f"A^{len(comps)}")
    stack = comps[0].matrix
    for c in comps[1:]:
        stack = stack.vstack(c.matrix)
    phi = ModuleMap(m, target, stack, check=False)
    return ApproximationData(phi, comps, target, minimal, inclusions)
