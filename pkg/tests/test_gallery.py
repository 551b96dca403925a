import json
from fractions import Fraction

import pytest

from monomod.algebra import AlgebraPresentation, multiply, validate_algebra
from monomod.duality import classify
from monomod.errors import ValidationError
from monomod.gallery import (
    LAMBDA_LABELS,
    dual_iso_chain,
    generic_M,
    generic_M_prime,
    ideal_A_w,
    ideal_A_w_A,
    lambda_element,
    lambda_q,
    lsgp_example,
    module_M1qc,
    run_scenario,
    standard_family,
)
from monomod.linalg import GF, QQ, SpanAccumulator
from monomod.modules import Verdict, _json_safe


def test_lambda_q_structure(lambda2):
    assert lambda2.dim == 6
    assert lambda2.basis_labels == LAMBDA_LABELS
    assert not lambda2.q_finite_order_warning


def test_lambda_q_errors_and_warnings():
    with pytest.raises(ValidationError):
        lambda_q(QQ, 0)
    assert lambda_q(QQ, 1).q_finite_order_warning
    assert lambda_q(QQ, -1).q_finite_order_warning
    assert lambda_q(GF(5), 2).q_finite_order_warning
    assert not lambda_q(QQ, Fraction(3, 2)).q_finite_order_warning


def test_lambda_q_j3_vanishes(lambda2):
    rad = [list(v) for v in lambda2.radical_basis()]
    sq = [lambda2.product_vectors(u, v) for u in rad for v in rad]
    sq = [v for v in sq if any(v)]
    for u in rad:
        for v in sq:
            assert not any(lambda2.product_vectors(u, v))


def test_sign_swap_is_still_associative():
    # replacing xy = -q.yx by xy = +q.yx produces the table of the algebra
    # with parameter -q, which is associative: associativity cannot see the
    # sign because all triple products of radical elements vanish
    A = lambda_q(QQ, 2)
    consts = []
    for (i, j), terms in A.table.items():
        for k, c in terms:
            if (i, j) == (1, 2):
                consts.append((i, j, k, -c))
            else:
                consts.append((i, j, k, c))
    pres = AlgebraPresentation(QQ, 6, LAMBDA_LABELS, list(A.unit), consts,
                               idempotents=[list(A.idempotents[0])])
    B = validate_algebra(pres)
    minus2 = lambda_q(QQ, -2)
    assert B.table == minus2.table


def test_degree_one_mutation_fails():
    # a mutation that leaves the radical filtration does break associativity
    A = lambda_q(QQ, 2)
    consts = []
    for (i, j), terms in A.table.items():
        for k, c in terms:
            consts.append((i, j, k, c))
    consts.append((1, 2, 2, QQ.one))  # x.y gains a spurious y component
    pres = AlgebraPresentation(QQ, 6, LAMBDA_LABELS, list(A.unit), consts)
    with pytest.raises(ValidationError) as ei:
        validate_algebra(pres)
    assert ei.value.witness is not None


def test_M_family_dims(lambda2):
    for (a, b, c) in [(1, -2, 0), (1, -2, 5), (0, 1, 0), (3, 1, -1), (0, 0, 1)]:
        assert generic_M(lambda2, a, b, c).dim == 3
    with pytest.raises(ValidationError):
        generic_M(lambda2, 0, 0, 0)


def test_standard_family_contract(lambda2):
    fam = standard_family(QQ, 2, Fraction(1))
    assert fam["X_c"].X.dim + fam["X_c"].Y.dim == 9
    assert fam["M"].dim == 3
    f1 = fam["f1"]
    assert list(f1.matrix.column(0)) == lambda_element(lambda2, {"x": 1, "y": -1})


def test_classification_of_M_family(lambda2):
    for c in [0, 1, -1, 2, Fraction(1, 2)]:
        M = module_M1qc(lambda2, Fraction(c))
        rep = classify(M, bound=6, seed=0)
        assert not rep.torsionless
        assert rep.semi_gp.status != Verdict.FAILS
        assert rep.dual_semi_gp.status != Verdict.FAILS


def test_ideal_decomposition(lambda2):
    w = lambda_element(lambda2, {"x": 1, "y": -1})
    Aw, _ = ideal_A_w(lambda2, w)
    AwA, _ = ideal_A_w_A(lambda2, w)
    assert Aw.dim == 2 and AwA.dim == 3
    acc = SpanAccumulator(QQ, 6)
    for i in range(6):
        e = [QQ.zero] * 6
        e[i] = QQ.one
        acc.add(lambda2.product_vectors(e, w))
    assert not acc.contains(lambda_element(lambda2, {"zx": 1}))


def test_lsgp_example_shapes(loop_arrow):
    assert loop_arrow["algebra"].dim == 4
    assert [m.dim for m in loop_arrow["modules"]] == [1, 1, 3, 2, 2]


def test_dual_iso_chain_explicit(lambda2):
    fam = standard_family(QQ, 2, Fraction(0))
    theta, omega2, AwA, _ = dual_iso_chain(fam)
    assert theta.is_isomorphism_map()
    assert omega2.is_isomorphism_map()
    assert AwA.dim == 3


def test_scenarios_pass():
    for name, params in [
        ("dual-iso-family", {}),
        ("approximation-pipeline", {}),
        ("loop-arrow-sgp", {}),
        ("t2-lift-sampled", {"samples": 4}),
    ]:
        sc = run_scenario(name, params)
        assert not sc.failed, (name, sc.failed)


def test_scenario_determinism():
    a = run_scenario("dual-iso-family", {"c_values": (0,)}).describe()
    b = run_scenario("dual-iso-family", {"c_values": (0,)}).describe()
    assert json.dumps(_json_safe(a), sort_keys=True) == json.dumps(
        _json_safe(b), sort_keys=True
    )


def test_unknown_scenario():
    with pytest.raises(ValidationError):
        run_scenario("no-such-scenario")


def test_prime_field_end_to_end():
    # the whole pipeline over F_7: algebra, modules, duals, classification,
    # and a triple with its dual bundle
    from monomod.algebra import regular_modules
    from monomod.duality import canonical_map, classify
    from monomod.gallery import f1_map
    from monomod.triangular import t2_algebra, t2_dual_bundle, t2_triple

    F = GF(7)
    A = lambda_q(F, 2)
    assert A.q_finite_order_warning  # 2 has finite order mod 7
    M = module_M1qc(A, F.of(1))
    assert M.dim == 3
    rep = classify(M, bound=4, seed=0)
    assert not rep.torsionless
    phi = canonical_map(M)
    assert phi.kernel_dim() == 1 and phi.cokernel_dim() == 1
    T = t2_algebra(A)
    Xc = t2_triple(T, regular_modules(A)[0], M, f1_map(A, F.of(1)))
    b = t2_dual_bundle(Xc)  # exact identities assert internally
    assert b.dual_triple.U.dim == 3 and b.dual_triple.V.dim == 6
    Mp = generic_M_prime(A, F.one, F.neg(F.inv(F.of(2))), F.zero)
    from monomod.duality import a_dual
    from monomod.modules import is_isomorphic

    v = is_isomorphic(a_dual(M).dual, Mp, seed=0)
    assert v.status == Verdict.HOLDS


def test_finite_order_warning_is_real():
    # over F_7 the parameter 2 has multiplicative order 3 and the clean-Ext
    # expectation for the X(c) family genuinely breaks: a witness appears
    # at degree 4 -- precisely what the finite-order warning flags
    from monomod.algebra import regular_modules
    from monomod.gallery import f1_map
    from monomod.homology import is_semi_gp
    from monomod.triangular import t2_algebra, t2_triple

    F = GF(7)
    A = lambda_q(F, 2)
    assert A.q_finite_order_warning
    T = t2_algebra(A)
    Xc = t2_triple(T, regular_modules(A)[0], module_M1qc(A, F.of(0)),
                   f1_map(A, F.of(0)))
    v = is_semi_gp(Xc.flatten(), 6, seed=0)
    assert v.status == Verdict.FAILS
    assert v.witness["degree"] == 4
