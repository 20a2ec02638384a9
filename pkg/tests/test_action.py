from fractions import Fraction

from hopfact.linalg import QQ, Subspace
from hopfact.hopf import dual_hopf
from hopfact.action import (ModuleAlgebraAction, Representation, verify_action,
                            invariants, comodule_map, reconstruction_report,
                            matrix_coefficients, coefficient_comul_report,
                            coefficient_subalgebra, hit_action, dual_product,
                            star_antipode, group_coeff_antipode_check)


def test_verify_action_fixtures(ws):
    for name in ("swap", "grading", "grading2", "conj", "sweedler-act"):
        assert verify_action(ws.actions[name]).status == "pass"


def test_verify_action_bad_unit_rule(ws):
    # g.(1) = g is not eps(g) 1: fails the unit measuring rule
    tensor = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    bad = ModuleAlgebraAction(ws.hopfs["qc2"], ws.algebras["qxq"],
                              [[[1, 0], [0, 1]], [[0, 1], [0, 1]]])
    rep = verify_action(bad)
    assert rep.status == "fail"


def test_invariants(ws):
    inv = invariants(ws.actions["swap"])
    assert inv.rows == ((Fraction(1), Fraction(1)),)
    # trivial action: everything invariant
    assert invariants(ws.actions["trivial-m2"]).dim == 4
    # grading: only the identity component
    assert invariants(ws.actions["grading"]).rows == ((Fraction(1), Fraction(0)),)


def test_comodule_map_reconstruction(ws):
    for name in ("swap", "grading", "conj", "sweedler-act", "grading-s3"):
        assert reconstruction_report(ws.actions[name]).status == "pass"


def test_comodule_map_values(ws):
    act = ws.actions["swap"]
    dm = comodule_map(act).matrix
    # invariant vector (1,1): coaction is (1,1) (x) eps
    col = dm.vec_mul([1, 1])
    assert col == [1, 1, 1, 1]  # (p,q) index: eps has both dual coords one
    # a = (1,0): value at g is (0,1)
    col = dm.vec_mul([1, 0])
    assert [col[1 * 2 + 0], col[1 * 2 + 1]] == [0, 1]


def test_matrix_coefficients_sign_rep(ws):
    rep = ws.representations["signrep"]
    mc = matrix_coefficients(rep)
    assert mc[0] == [Fraction(1), Fraction(1)]      # the counit
    assert mc[3] == [Fraction(1), Fraction(-1)]     # the sign character
    assert mc[1] == [Fraction(0)] * 2 and mc[2] == [Fraction(0)] * 2
    assert coefficient_comul_report(rep).status == "pass"


def test_matrix_coefficients_identity_rep(ws):
    rep = Representation(ws.hopfs["qc2"],
                         [[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    mc = matrix_coefficients(rep)
    eps = list(ws.hopfs["qc2"].counit)
    assert mc[0] == eps and mc[3] == eps
    assert mc[1] == [Fraction(0)] * 2


def test_regular_rep_coefficients_span(ws):
    reg = Representation(ws.hopfs["qc2"], [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    span = Subspace.from_vectors(QQ, 2, matrix_coefficients(reg))
    assert span.dim == 2


def test_coefficient_subalgebra(ws):
    c2 = ws.hopfs["qc2"]
    sign = [Fraction(1), Fraction(-1)]
    assert coefficient_subalgebra(c2, [sign]).dim == 2
    assert coefficient_subalgebra(c2, [list(c2.counit)]).dim == 1
    # closure under the dual product and antipode image, counit inside
    s3 = ws.hopfs["qs3"]
    coeffs = matrix_coefficients(ws.representations["perm3"])
    sub = coefficient_subalgebra(s3, coeffs)
    # products of two coefficient indicators separate the six group
    # elements, so the closure is the whole dual
    assert sub.dim == 6
    for f in coeffs:
        assert sub.contains(star_antipode(s3, f))
    assert sub.contains(list(s3.counit))
    for f in sub.basis_vectors():
        for g in sub.basis_vectors():
            assert sub.contains(dual_product(s3, f, g))


def test_coefficient_subalgebra_character_class_functions(ws):
    # seeded with the permutation character alone the closure is the
    # three-dimensional algebra of class functions of S3
    s3 = ws.hopfs["qs3"]
    coeffs = matrix_coefficients(ws.representations["perm3"])
    char = [sum(coeffs[i * 3 + i][k] for i in range(3)) for k in range(6)]
    sub = coefficient_subalgebra(s3, [char])
    assert sub.dim == 3


def test_coefficient_subalgebra_delta_stable(ws):
    c2 = ws.hopfs["qc2"]
    sub = coefficient_subalgebra(c2, [[Fraction(1), Fraction(-1)]])
    dual = dual_hopf(c2)
    # tensor square of the subspace inside the dual of the tensor
    pair_span = Subspace.from_vectors(
        QQ, 4, [[a * b for a in f for b in g]
                for f in sub.basis_vectors() for g in sub.basis_vectors()])
    for f in sub.basis_vectors():
        assert pair_span.contains(dual.delta(f))


def test_hit_action(ws):
    c2 = ws.hopfs["qc2"]
    hit = hit_action(c2)
    assert verify_action(hit).status == "pass"
    # g moves the idempotent at the identity to the one at g
    assert hit.act_basis(1, [1, 0]) == [0, 1]
    # acting by 1 fixes everything
    assert hit.act_basis(0, [3, 5]) == [3, 5]
    # evaluation at 1 recovers the original functional evaluated at h
    f = [Fraction(2), Fraction(7)]
    for hidx in range(2):
        moved = hit.act_basis(hidx, f)
        unit_coords = c2.alg.unit
        val = sum(m * u for m, u in zip(moved, unit_coords))
        assert val == f[hidx]


def test_group_coeff_antipode_check(ws):
    assert group_coeff_antipode_check(ws.representations["signrep"]).status == "pass"
    assert group_coeff_antipode_check(ws.representations["rot3f7"]).status == "pass"
    idrep = Representation(ws.hopfs["qc2"], [[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    assert group_coeff_antipode_check(idrep).status == "pass"
    # 2x2 oracle by hand: rho(g) = diag(1,-1), cofactor_{22} = 1, det = -1
    rep = ws.representations["signrep"]
    srho22 = star_antipode(rep.hopf, matrix_coefficients(rep)[3])
    assert srho22[1] == Fraction(1) / Fraction(-1)


def test_group_coeff_check_rejects_singular(ws):
    rep = Representation(ws.hopfs["qc2"], [[[1, 0], [0, 1]], [[0, 0], [0, 0]]],
                         name="broken")
    out = group_coeff_antipode_check(rep)
    assert out.status == "error"


def test_representation_verifier(ws):
    rep = Representation(ws.hopfs["qc2"], [[[1, 0], [0, 1]], [[1, 1], [0, 1]]])
    assert rep.verify().status == "fail"   # that matrix has infinite order


def test_locally_finite_predicate(ws):
    from hopfact.action import action_is_locally_finite
    assert all(action_is_locally_finite(a) for a in ws.actions.values())


def test_verify_sub_hopf(ws):
    from hopfact.action import verify_sub_hopf, coefficient_subalgebra
    c2 = ws.hopfs["qc2"]
    whole = Subspace.full(QQ, 2)
    assert verify_sub_hopf(c2, whole).status == "pass"
    counit_line = Subspace.from_vectors(QQ, 2, [list(c2.counit)])
    assert verify_sub_hopf(c2, counit_line).status == "pass"
    # a random line through the origin is not a sub-Hopf subspace
    bad = Subspace.from_vectors(QQ, 2, [[1, 0]])
    assert verify_sub_hopf(c2, bad).status == "fail"
    # coefficient subalgebras certify by construction
    sub = coefficient_subalgebra(c2, [[Fraction(1), Fraction(-1)]])
    assert verify_sub_hopf(c2, sub).status == "pass"
