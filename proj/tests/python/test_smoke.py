"""Smoke tests for the python bindings."""

import math

import pytest

import edqc


def test_build_and_inspect_graph():
    g = edqc.build_graph([(0, 1), (1, 2), (0, 2), (2, 2)])
    assert g.n == 3
    assert g.m == 3
    assert g.max_degree == 2
    assert g.neighbors(0) == [1, 2]
    assert g.has_edge(0, 2)


def test_subset_density_is_exact():
    g = edqc.graph_from_spec("k4me")
    num, den = edqc.subset_density(g, [0, 1, 2, 3])
    assert (num, den) == (5, 6)


def test_diffusion_conserves_mass():
    g = edqc.gen_er(80, 0.1, seed=3)
    f = edqc.energy_diffusion(g, source=0, steps=3, theta=0.001, seed=7)
    assert math.isclose(f.total(), 1.0, abs_tol=1e-9)
    assert all(e > 0 for _, e in f.entries())


def test_edqc_finds_the_complete_graph():
    g = edqc.graph_from_spec("k5")
    r = edqc.edqc(g, "1")
    assert r.size == 5
    assert r.vertices == [0, 1, 2, 3, 4]
    assert r.density == 1.0


def test_run_many_summary():
    g = edqc.graph_from_spec("k5")
    s = edqc.run_many(g, "1", runs=5)
    assert s.mean_size == 5.0
    assert s.stddev_size == 0.0
    assert len(s.runs) == 5


def test_oracle_and_feasibility():
    g = edqc.graph_from_spec("k4me")
    assert edqc.is_quasi_clique(g, [0, 1, 2, 3], "0.8")
    assert not edqc.is_quasi_clique(g, [0, 1, 2, 3], "1")
    assert len(edqc.max_quasi_clique_bruteforce(g, "0.8")) == 4


def test_oracle_size_guard():
    g = edqc.gen_er(30, 0.1, seed=1)
    with pytest.raises(ValueError):
        edqc.max_quasi_clique_bruteforce(g, "1")


def test_gamma_must_be_a_decimal_literal():
    g = edqc.graph_from_spec("k5")
    with pytest.raises(ValueError):
        edqc.edqc(g, "1.5")


def test_pearson():
    assert edqc.pearson([1.0, 2.0, 3.0], [2.0, 4.0, 6.0]) == 1.0
    assert edqc.pearson([1.0, 2.0, 3.0], [6.0, 4.0, 2.0]) == -1.0


def test_variants_agree_on_a_clique():
    g = edqc.graph_from_spec("k5")
    for variant in (
        "full",
        "no-seed-ordering",
        "no-activation-threshold",
        "no-spectral-breakpoint",
    ):
        assert edqc.run_variant(g, variant, "1").size == 5


def test_graph_file_roundtrip(tmp_path):
    g = edqc.gen_planted_clique(30, 0.1, 5, seed=2)
    path = str(tmp_path / "g.mtx")
    edqc.write_graph(g, path, format="mtx")
    h = edqc.load_graph(path)
    assert h.n == g.n
    assert h.m == g.m
    assert [h.degree(v) for v in range(h.n)] == [g.degree(v) for v in range(g.n)]
