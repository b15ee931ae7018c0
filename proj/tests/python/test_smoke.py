"""Smoke tests for the pygentle module against known presentations."""

import json
import os

import pytest

import pygentle


def fixture(name):
    return os.path.join(os.environ["GENTLE_FIXTURE_DIR"], name + ".quiver")


def test_worked_example_invariant():
    p = pygentle.load(fixture("trace_showcase"))
    assert p.vertex_count == 8
    assert p.arrow_count == 9
    assert p.relation_count == 4
    assert pygentle.phi(p) == [(2, 3), (2, 4), (3, 2)]
    assert pygentle.phi_text(p) == "[(2,3),(2,4),(3,2)]"
    assert pygentle.trace_text(p).startswith("run 1:")


def test_oracle_agrees_with_walk():
    for name in ("trace_showcase", "threads_showcase", "kronecker", "loop_relation"):
        p = pygentle.load(fixture(name))
        assert pygentle.oracle(p) == pygentle.phi(p)
        assert pygentle.tau_check(p)


def test_thread_listing():
    p = pygentle.load(fixture("threads_showcase"))
    threads = pygentle.permitted(p)
    assert len(threads) == 8
    assert "a6 a5 a3" in threads
    loop = pygentle.load(fixture("loop_relation"))
    assert pygentle.relation_cycles(loop) == [["a"]]


def test_classification_round_trip():
    assert pygentle.classify_text(pygentle.load(fixture("kronecker"))) == "A_tilde(1,1)"
    assert pygentle.classify_text(pygentle.an(4)) == "A_n(4)"
    assert pygentle.classify_text(pygentle.a_tilde(2, 1)) == "A_tilde(2,1)"
    assert pygentle.classify_text(pygentle.lambda_family(2, 3, 1)) == "Lambda(2,3,1)"


def test_equivalence_verdicts():
    a = pygentle.load(fixture("equal_phi_a"))
    b = pygentle.load(fixture("equal_phi_b"))
    assert pygentle.equivalent(a, b) == "indeterminate"
    assert pygentle.equivalent(pygentle.an(3), pygentle.an(3)) == "equivalent"
    assert pygentle.equivalent(pygentle.an(3), pygentle.an(4)) == "not_equivalent"


def test_parse_render_round_trip():
    p = pygentle.load(fixture("equal_phi_b"))
    text = pygentle.render(p)
    again = pygentle.parse(text)
    assert pygentle.render(again) == text
    assert pygentle.phi(again) == pygentle.phi(p)


def test_json_and_dot_exports():
    p = pygentle.load(fixture("kronecker"))
    doc = json.loads(pygentle.to_json_text(p))
    assert doc["format"] == "gentle-quiver"
    assert len(doc["arrows"]) == 2
    assert pygentle.to_dot(p).startswith('digraph "kronecker"')


def test_generator_is_deterministic():
    p = pygentle.generate(6, cycles=1, density=0.5, seed=5)
    q = pygentle.generate(6, cycles=1, density=0.5, seed=5)
    assert pygentle.render(p) == pygentle.render(q)
    assert p.vertex_count == 6
    assert p.cycle_number == 1
    other = pygentle.generate(6, cycles=1, density=0.5, seed=6)
    assert pygentle.render(other) != pygentle.render(p)


def test_errors_surface_as_gentle_error():
    with pytest.raises(pygentle.GentleError):
        pygentle.parse("vertices: v1 v1\n")
    with pytest.raises(pygentle.GentleError):
        pygentle.an(0)
    with pytest.raises(pygentle.GentleError):
        pygentle.generate(0)
