"""Acceptance gate: each criterion runs at its full stated scope and
prints one PASS/FAIL line. Wall-clock budgets are targets and are
reported, not asserted; all mathematical assertions are exact."""

import subprocess
import sys

from braidquiver import verify


def _run(criterion, *args):
    result = criterion(*args)
    print(result.line())
    assert result.ok, result.detail
    return result


def test_criterion_mutation_involution_and_two_finiteness():
    # classes of A3-A8, D4-D8, E6-E8, every vertex; target < 2 min
    _run(verify.check_involution_two_finiteness, None)


def test_criterion_class_enumeration_stability():
    # counts match the labelled-BFS oracle (A3-A5, D4) and are stable
    # across runs and worker counts
    _run(verify.check_class_stability, None)


def test_criterion_weyl_realization_soundness():
    # all relators trivial in W; |W(A_n)| = (n+1)! for n <= 7, BFS orders
    # for D4-D6 and E6; target < 1 min
    _run(verify.check_weyl_soundness, None)


def test_criterion_phi_well_definedness_and_isomorphism():
    # A3-A6, D4-D6, E6; every relator image Garside-trivial; double
    # application is conjugation; target < 10 min
    _run(verify.check_phi_sweep, None)


def test_criterion_one_implies_all():
    # every rotated cycle relator over the D4-D5 classes is trivial
    _run(verify.check_one_implies_all, None)


def test_criterion_garside_self_consistency():
    # 1000 random words per type (A2-A5, D4, E6); target < 2 min
    _run(verify.check_garside_consistency, None, 1000)


def test_criterion_surface_model():
    # Catalan counts A2-A7, flip involution/uniqueness, the
    # flip/mutation square on A2-A6 and D4-D5, both fixture quivers;
    # target < 2 min
    _run(verify.check_surface, None)


def test_criterion_qp_canonical_form_stability():
    # every mutation path of length <= 6 in A3-A7, D4-D6; target < 5 min
    _run(verify.check_qp_stability, None, 6)


def test_criterion_dg_k0_checks():
    # d^2 = 0 over the depth-6 sweep, hom-table symmetry, identity
    # relator matrices over A3-A7, D4-D6, E6; target < 2 min
    _run(verify.check_dg_k0, None, 6)


def test_criterion_verify_all_cli_exits_zero():
    # the CLI sweep runs without the frontend built (exit 0)
    proc = subprocess.run(
        [sys.executable, "-m", "braidquiver.cli", "verify", "all", "--max-rank", "5",
         "--format", "text"],
        capture_output=True,
        text=True,
        timeout=1200,
    )
    print(proc.stdout)
    assert proc.returncode == 0, proc.stdout + proc.stderr
