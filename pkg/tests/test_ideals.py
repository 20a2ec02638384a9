from fractions import Fraction

import pytest

from hopfact.linalg import QQ, GF, Subspace
from hopfact.hopf import (matrix_algebra, truncated_poly_algebra,
                          product_field_algebra, upper_triangular_algebra,
                          poly_quotient_algebra, group_algebra,
                          cyclic_group_table)
from hopfact.ideals import (Ideal, ideal_sum, ideal_intersect, ideal_product,
                            quotient_algebra, center_subspace, minimal_polynomial,
                            factor_irreducible, radical,
                            is_semiprime, is_prime, is_completely_prime, spectrum,
                            heart, core, core_via_psi, group_core_by_intersection,
                            h_spectrum, strata, h_ideal_generated,
                            enumerate_h_ideals_of_algebra, certify_h_prime,
                            semiprime_core_check, reformulation_check,
                            composite_core, UnsupportedComputation)


def test_ideal_construction_checks(ws):
    m2 = ws.algebras["m2q"]
    with pytest.raises(ValueError):
        Ideal(m2, Subspace.from_vectors(QQ, 4, [[0, 1, 0, 0]]))
    assert Ideal.generate(m2, [[0, 1, 0, 0]]).dim == 4


def test_ideal_ops(ws):
    split = ws.algebras["qxq"]
    e1 = Ideal.generate(split, [[1, 0]])
    e2 = Ideal.generate(split, [[0, 1]])
    assert ideal_sum(e1, e2).dim == 2
    assert ideal_intersect(e1, e2).dim == 0
    assert ideal_product(e1, e2).dim == 0
    assert ideal_product(e1, e1).space == e1.space
    # in F_2 C_2 the augmentation ideal squares to zero: (1+g)^2 = 0
    f2c2 = ws.algebras["f2c2"]
    aug = ws.ideals["aug2"]
    assert ideal_product(aug, aug).dim == 0
    assert Ideal.generate(split, []).dim == 0


def test_quotient_algebra():
    x3 = truncated_poly_algebra(QQ, 3)
    xbar = Ideal.generate(x3, [[0, 1, 0]])
    q, proj, lift = quotient_algebra(x3, xbar.space)
    assert q.dim == 1 and q.unit == [Fraction(1)]
    # modding the radical of upper triangulars leaves the split diagonal
    ut = upper_triangular_algebra(QQ)
    q2, _, _ = quotient_algebra(ut, radical(ut).space)
    assert q2.dim == 2 and q2.is_commutative()


def test_center(ws):
    assert center_subspace(ws.algebras["m2q"]).dim == 1
    assert center_subspace(ws.algebras["qc2"]).dim == 2
    assert center_subspace(ws.algebras["qs3"]).dim == 3


def test_minimal_polynomial_and_factoring():
    split = product_field_algebra(QQ, 2)
    mp = minimal_polynomial(split, [Fraction(1), Fraction(0)])
    # t^2 - t, the idempotent equation
    assert mp == [Fraction(0), Fraction(-1), Fraction(1)]
    factors = factor_irreducible(QQ, mp)
    assert sorted(len(f) for f, _ in factors) == [2, 2]
    # x in Q[x]/(x^3): t^3
    x3 = truncated_poly_algebra(QQ, 3)
    assert minimal_polynomial(x3, [0, 1, 0]) == [0, 0, 0, 1]
    fs = factor_irreducible(GF(2), [1, 0, 1])   # t^2 + 1 = (t+1)^2 mod 2
    assert fs == [([1, 1], 2)]


def test_radical_examples(ws):
    assert radical(ws.algebras["qc2"]).dim == 0          # Maschke, char 0
    assert radical(ws.algebras["f2c2"]).space.rows == ((1, 1),)
    ut = upper_triangular_algebra(QQ)
    assert radical(ut).space.rows == ((Fraction(0), Fraction(1), Fraction(0)),)
    assert radical(ws.algebras["qx3"]).dim == 2
    # radical route refusal: noncommutative over small p
    f2m2 = matrix_algebra(GF(2), 2)
    with pytest.raises(UnsupportedComputation):
        radical(f2m2)
    # trace form route over p > dim: F_7 C_3 is semisimple
    assert radical(ws.algebras["f7c3"]).dim == 0


def test_radical_power_vanishes(ws):
    for name in ("f2c2", "qx3", "upper2q", "qjet"):
        alg = ws.algebras[name]
        rad = radical(alg)
        power = rad
        for _ in range(alg.dim):
            power = ideal_product(power, rad)
        assert power.dim == 0
        q, _, _ = quotient_algebra(alg, rad.space)
        from hopfact.ideals import radical_subspace
        assert radical_subspace(q).dim == 0


def test_semiprime_prime(ws):
    m2 = ws.algebras["m2q"]
    split = ws.algebras["qxq"]
    assert is_prime(m2, Ideal.zero(m2))
    assert not is_prime(split, Ideal.zero(split))
    assert is_semiprime(split, Ideal.zero(split))
    f2c2 = ws.algebras["f2c2"]
    assert is_prime(f2c2, ws.ideals["aug2"])
    assert not is_semiprime(f2c2, Ideal.zero(f2c2))
    assert is_completely_prime(split, ws.ideals["half"])
    with pytest.raises(UnsupportedComputation):
        is_completely_prime(m2, Ideal.zero(m2))


def test_spectrum_examples(ws):
    split = ws.algebras["qxq"]
    entries = spectrum(split)
    assert len(entries) == 2
    assert all(e.simple_quotient_dim == 1 and e.heart_dim == 1 for e in entries)
    m2 = ws.algebras["m2q"]
    sp = spectrum(m2)
    assert len(sp) == 1 and sp[0].prime.dim == 0 and sp[0].simple_quotient_dim == 4
    x3 = ws.algebras["qx3"]
    sp3 = spectrum(x3)
    assert len(sp3) == 1 and sp3[0].prime.dim == 2
    # intersection of all primes is the radical
    ut = ws.algebras["upper2q"]
    inter = Subspace.full(QQ, ut.dim)
    from hopfact.linalg import subspace_intersect
    for e in spectrum(ut):
        inter = subspace_intersect(inter, e.prime.space)
    assert inter == radical(ut).space


def test_spectrum_inert_entries(ws):
    # Q C_3 = Q x Q(omega): the cyclotomic factor stays inert over Q
    entries = spectrum(ws.algebras["qc3"])
    hearts = sorted((e.heart_dim, e.inert) for e in entries)
    assert hearts == [(1, False), (2, True)]
    # Q[i] itself: spectrum is the zero ideal with an inert heart
    qi = poly_quotient_algebra(QQ, [1, 0, 1], name="qi")
    entries = spectrum(qi)
    assert len(entries) == 1 and entries[0].heart_dim == 2 and entries[0].inert
    # same phenomenon over F_2: F_2 C_3 = F_2 x F_4
    entries = spectrum(ws.algebras["f2c3"]) if "f2c3" in ws.algebras else \
        spectrum(group_algebra(cyclic_group_table(3), GF(2)).alg)
    assert sorted(e.heart_dim for e in entries) == [1, 2]


def test_heart(ws):
    m2 = ws.algebras["m2q"]
    assert heart(m2, Ideal.zero(m2)) == {"field": {"kind": "rationals"}, "dim": 1}
    x3 = ws.algebras["qx3"]
    assert heart(x3, spectrum(x3)[0].prime)["dim"] == 1
    with pytest.raises(ValueError):
        heart(ws.algebras["qxq"], Ideal.zero(ws.algebras["qxq"]))


def test_core_examples(ws):
    # trivial action: core is the ideal itself
    triv = ws.actions["trivial-m2"]
    z = Ideal.zero(ws.algebras["m2q"])
    assert core(triv, z).space == z.space
    # swap: the half ideal collapses
    swap = ws.actions["swap"]
    half = ws.ideals["half"]
    assert core(swap, half).dim == 0
    # grading in char 2: the augmentation ideal has zero core
    assert core(ws.actions["grading2"], ws.ideals["aug2"]).dim == 0


def test_core_oracle_equivalence(ws):
    for aname, act in sorted(ws.actions.items()):
        ideals = {"zero": Ideal.zero(act.alg), "full": Ideal.full(act.alg)}
        for iname, ideal in ws.ideals.items():
            if ideal.alg is act.alg:
                ideals[iname] = ideal
        for iname, ideal in sorted(ideals.items()):
            direct = core(act, ideal)
            twisted = core_via_psi(act, ideal)
            assert direct.space == twisted.space, (aname, iname)


def test_core_group_intersection(ws):
    swap = ws.actions["swap"]
    half = ws.ideals["half"]
    byint = group_core_by_intersection(swap, half)
    assert byint.space == core(swap, half).space
    with pytest.raises(ValueError):
        group_core_by_intersection(ws.actions["grading"], ws.ideals["aug"])


def test_core_idempotent_and_maximal(ws):
    act = ws.actions["grading2"]
    aug = ws.ideals["aug2"]
    c = core(act, aug)
    assert core(act, c).space == c.space
    assert c.space.le(aug.space)
    # maximality against the enumerated action-stable ideal lattice
    lattice = enumerate_h_ideals_of_algebra(act, bound=4096)
    for stable in lattice:
        if stable.le(aug.space):
            assert stable.le(c.space)


def test_h_ideal_generated(ws):
    act = ws.actions["grading2"]
    out = h_ideal_generated(act, [[1, 1]])
    # acting by the grading projections splits 1+g into components
    assert out.dim == 2


def test_certify_h_prime(ws):
    act = ws.actions["grading2"]
    cert = certify_h_prime(act, Ideal.zero(act.alg), bound=4096)
    assert cert.status == "pass" and cert.details["route"] == "lattice-products"
    cert2 = certify_h_prime(ws.actions["swap2"],
                            Ideal.zero(ws.actions["swap2"].alg), bound=4096)
    assert cert2.status == "pass"
    # over Q neither route applies to a non-prime H-prime: stays undecided
    cert3 = certify_h_prime(ws.actions["swap"], Ideal.zero(ws.actions["swap"].alg))
    assert cert3.status == "error"
    # route (a): an H-stable prime that is a core of a prime certifies directly
    aug2 = ws.ideals["aug2"]
    triv2 = None
    from hopfact.action import trivial_action
    triv2 = trivial_action(ws.hopfs["f2c2"], ws.algebras["f2c2"])
    cert4 = certify_h_prime(triv2, aug2, bound=4096)
    assert cert4.status == "pass" and cert4.details["route"] == "core-of-prime"


def test_h_spectrum_and_strata(ws):
    swap = ws.actions["swap"]
    hs = h_spectrum(swap)
    assert len(hs) == 1 and hs[0].dim == 0
    fibers = strata(swap)
    assert len(fibers) == 1 and len(fibers[0][1]) == 2
    triv = ws.actions["trivial-m2"]
    fibers = strata(triv)
    assert [len(es) for _, es in fibers] == [1]
    grading = ws.actions["grading"]
    fibers = strata(grading)
    assert len(fibers) == 1 and len(fibers[0][1]) == 2 and fibers[0][0].dim == 0
    # fibers partition the spectrum
    for act in ws.actions.values():
        entries = spectrum(act.alg)
        fibers = strata(act)
        assert sum(len(es) for _, es in fibers) == len(entries)


def test_group_core_semiprime_but_not_prime(ws):
    # both primes of Q x Q are prime; their swap-core 0 is semiprime only
    swap = ws.actions["swap"]
    for e in spectrum(swap.alg):
        c = core(swap, e.prime)
        assert c.dim == 0
        assert is_semiprime(swap.alg, c)
        assert not is_prime(swap.alg, c)


def test_semiprime_core_checks(ws):
    swap = ws.actions["swap"]
    assert semiprime_core_check(swap, ws.ideals["half"]).status == "pass"
    rep = semiprime_core_check(ws.actions["grading2"], ws.ideals["aug2"])
    assert rep.status == "counterexample"
    assert rep.details["core-semiprime"] is False
    # non-semiprime input is a usage error
    bad = semiprime_core_check(ws.actions["grading2"],
                               Ideal.zero(ws.algebras["f2c2"]))
    assert bad.status == "error"
    triv = ws.actions["trivial-m2"]
    assert semiprime_core_check(triv, Ideal.zero(triv.alg)).status == "pass"


def test_reformulation_checks(ws):
    assert reformulation_check(ws.actions["swap"], ws.ideals["half"]).status == "pass"
    assert reformulation_check(ws.actions["grading"],
                               Ideal.zero(ws.algebras["qc2"])).status == "pass"
    rep = reformulation_check(ws.actions["grading2"],
                              Ideal.zero(ws.algebras["f2c2"]))
    assert rep.status == "counterexample"
    assert rep.witnesses
    assert reformulation_check(ws.actions["grading2"],
                               Ideal.full(ws.algebras["f2c2"])).status == "pass"


def test_composite_core(ws):
    nil = ws.lie_actions["nilshift"]
    c2jet = ws.actions["c2jet"]
    assert composite_core(nil, c2jet, ws.ideals["xline"]).dim == 0
    out = composite_core(nil, c2jet, ws.ideals["xyline"])
    assert out.space == ws.ideals["xyline"].space
    triv_lie = ws.lie_actions["zeroder"]
    # with no derivations and the trivial Hopf action the ideal is returned
    from hopfact.action import trivial_action
    qx3 = ws.algebras["qx3"]
    tr = trivial_action(ws.hopfs["qc2"], qx3)
    xbar = ws.ideals["xbar"]
    assert composite_core(triv_lie, tr, xbar).space == xbar.space
