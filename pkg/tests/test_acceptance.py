"""Acceptance gate: every criterion at its stated budget, one line each.

All comparisons are exact (this is exact arithmetic end to end); the only
tolerances are the wall-clock budgets stated per battery.
"""

from hopfact.suites import (criterion_axioms, criterion_identities,
                            criterion_dotinv, criterion_lattice,
                            criterion_stability, criterion_core_oracles,
                            criterion_theorem2, criterion_lie, criterion_pbw,
                            criterion_strata)


def _run(ws, fn, label, budget_s=None):
    rep = fn(ws)
    took = rep.timing_ms / 1000.0
    status = rep.status.upper()
    print(f"[{status}] {label}  ({took:.2f}s)")
    assert rep.ok, (label, rep.witnesses[:4])
    if budget_s is not None:
        assert took < budget_s, f"{label}: {took:.2f}s over the {budget_s}s budget"
    return rep


def test_criterion_01_axiom_suite(ws):
    rep = _run(ws, criterion_axioms,
               "1: hopf axioms on the stock algebras and tensor squares "
               "over Q, F2, F3", budget_s=5.0)
    assert rep.details["verified"] == 60


def test_criterion_02_identity_suite(ws):
    rep = _run(ws, criterion_identities,
               "2: convolution identity battery, exhaustive on all fixtures",
               budget_s=10.0)
    assert set(rep.details) - {"subchecks"} >= set(ws.actions)


def test_criterion_03_dotinv(ws):
    rep = _run(ws, criterion_dotinv,
               "3: twist multiplicativity iff cocommutative, invariants",
               budget_s=10.0)
    assert rep.details["sweedler-act"]["multiplicative"] is False
    assert rep.details["conj"]["multiplicative"] is True


def test_criterion_04_ideal_lattice(ws):
    rep = _run(ws, criterion_lattice,
               "4: exhaustive three-corner ideal bijection over F2",
               budget_s=60.0)
    assert set(rep.details) >= {"swap2", "grading2", "kleinswap"}


def test_criterion_05_stability_scan(ws):
    rep = _run(ws, criterion_stability,
               "5: stability scans find exactly the W (x) H*", budget_s=60.0)
    assert rep.details["kleinswap"] == 67
    assert rep.details["swap2"] == 5


def test_criterion_06_core_oracles(ws):
    rep = _run(ws, criterion_core_oracles,
               "6: direct core = twisted core (= translate intersection)")
    assert rep.details["pairs"] >= 30


def test_criterion_07_theorem2(ws):
    rep = _run(ws, criterion_theorem2,
               "7: semiprime cores in char 0; char-2 counterexamples")
    assert rep.details["char2-semiprime-core"] == "counterexample"
    assert rep.details["char2-radical-inclusion"] == "counterexample"
    assert rep.details["char0-checks"] >= 10


def test_criterion_08_derivation_cores(ws):
    rep = _run(ws, criterion_lie,
               "8: derivation cores preserve primeness data; maximality by "
               "enumeration")
    assert rep.details["char0-transfers"] >= 9
    assert rep.details["f2nilshift-stable-ideals"] >= 1


def test_criterion_09_pbw(ws):
    rep = _run(ws, criterion_pbw,
               "9: divided-power coproduct, series isomorphism, char-p "
               "demos, lowest coefficients")
    assert rep.details["random-pairs"] == 100
    assert rep.details["lowest-coefficient-instances"] == 50
    for p in (2, 3, 5):
        assert rep.details[f"charp-{p}"] == "pass"


def test_criterion_10_strata(ws):
    rep = _run(ws, criterion_strata,
               "10: strata partition spectra; conjugation fixture realizes "
               "a verified bijection")
    assert rep.details["conj-verdict"] == "bijection-verified"
