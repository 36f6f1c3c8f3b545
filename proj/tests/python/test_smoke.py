"""Smoke tests for the albert extension module."""

import json

import pytest

albert = pytest.importorskip("albert")


def test_split_obstruction_exact_values():
    x0 = albert.counterexample_X0()
    assert albert.inner_product(x0, x0) == -2.0
    verdict = albert.diagonalizability_obstruction(x0)
    assert verdict.inner_square == -2.0
    assert verdict.verdict == albert.Verdict.obstructed


def test_octonion_basics():
    e4 = albert.Octonion.basis(4)
    assert (e4 * e4).coeffs[0] == -1.0
    e4s = albert.Octonion.basis(4, albert.Algebra.split)
    assert (e4s * e4s).coeffs[0] == 1.0
    with pytest.raises(albert.AlbertError):
        (e4 * e4s)


def test_diagonalize_and_replay():
    x = albert.random_jordan(12345, albert.Algebra.compact)
    t = albert.diagonalize(x)
    assert t.off_diag_residual <= 1e-9
    assert t.diagonal[0] >= t.diagonal[1] >= t.diagonal[2]
    replay = albert.apply_sequence(t.steps, x)
    assert max(abs(a - b) for a, b in zip(replay.diag, t.diagonal)) < 1e-12
    kinds = [s.kind for s in t.steps]
    assert set(kinds) <= {"delta_a", "rot_o3", "sp3", "g2"}


def test_diagonalize_rejects_split():
    x = albert.JordanElement.zero(albert.Algebra.split)
    with pytest.raises(albert.AlbertError):
        albert.diagonalize(x)


def test_invariants_of_unit():
    E = albert.unit_E()
    assert albert.trace(E) == 3.0
    assert albert.inner_product(E, E) == 3.0
    assert albert.sigma(E) == 3.0
    assert albert.det(E) == 1.0


def test_json_round_trip():
    x = albert.random_jordan(99, albert.Algebra.split)
    s = albert.jordan_to_json(x)
    parsed = json.loads(s)
    assert parsed["algebra"] == "split"
    assert list(parsed) == sorted(parsed)  # stable key order
    assert albert.jordan_from_json(s) == x


def test_transcript_json_round_trip():
    x = albert.random_jordan(7, albert.Algebra.compact)
    t = albert.diagonalize(x)
    s = albert.transcript_to_json(t)
    back = albert.transcript_from_json(s)
    assert back.diagonal == t.diagonal
    assert back.off_diag_residual == t.off_diag_residual


def test_g2_map():
    u = albert.Octonion.basis(6)
    g = albert.g2_map_to_e1(u)
    assert g.kind == "g2"
    image = g.payload.map(u)
    e1 = albert.Octonion.basis(1)
    assert (image - e1).coeff_norm() < 1e-9


def test_membership_check():
    g = albert.g2_map_to_e1(albert.Octonion.basis(5))
    r = albert.check_f4_membership(g, 25)
    assert r.jordan_dev < 1e-9
    assert r.cross_dev < 1e-9


def test_random_is_deterministic():
    a = albert.random_jordan(31337, albert.Algebra.compact)
    b = albert.random_jordan(31337, albert.Algebra.compact)
    assert a == b
