"""Generation, recognition and invariants of the colored unicyclic family."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critindep import (BuildScript, Graph, NotUnicyclicError,
                       PreconditionError, ScriptError, alpha,
                       critical_difference, disconnected_invariants, generate,
                       generate_random, is_ke, mu, parse_script, recognize,
                       script_to_text)
from critindep.unicyclic import coloring_from_json, validate_script

from common import c3_with_pendant, cycle, figure2_script, path


class TestGenerate:
    def test_bare_odd_cycle(self):
        cu = generate(BuildScript(cycle_length=3, steps=()))
        assert cu.graph == cycle(3)
        assert cu.blue == {0, 1, 2}
        assert cu.red == cu.black == frozenset()
        assert cu.m == 1

    def test_rejects_even_or_short_cycle(self):
        with pytest.raises(ScriptError):
            generate(BuildScript(cycle_length=4, steps=()))
        with pytest.raises(ScriptError):
            generate(BuildScript(cycle_length=1, steps=()))

    def test_single_path_attachment(self):
        cu = generate(BuildScript(cycle_length=5, steps=(("p2", 0),)))
        g = cu.graph
        assert g.n == 7
        assert cu.red == {5} and cu.black == {6}
        assert alpha(g) == 3 and mu(g) == 3
        assert critical_difference(g) == 0
        assert alpha(g) + mu(g) == g.n - 1

    def test_leaf_on_non_red_vertex_names_step(self):
        script = BuildScript(cycle_length=3, steps=(("leaf", 0),))
        with pytest.raises(ScriptError) as err:
            generate(script)
        assert "step 0" in str(err.value)

    def test_target_must_exist(self):
        with pytest.raises(ScriptError):
            generate(BuildScript(cycle_length=3, steps=(("p2", 9),)))

    def test_figure2_counts(self):
        cu = generate(figure2_script())
        assert cu.graph.n == 21
        assert len(cu.black) == 9
        assert len(cu.red) == 7
        assert len(cu.blue) == 5


class TestGenerateRandom:
    def test_sized_example(self):
        script, cu = generate_random(5, 2, 3, seed=1)
        assert cu.graph.n == 12
        assert len(cu.black) == 5 and len(cu.red) == 2
        assert critical_difference(cu.graph) == 3

    def test_deterministic_per_seed(self):
        first, _ = generate_random(5, 2, 3, seed=42)
        second, _ = generate_random(5, 2, 3, seed=42)
        assert first == second

    def test_leaf_requires_a_path_step(self):
        with pytest.raises(PreconditionError):
            generate_random(3, 0, 2, seed=0)


class TestRecognize:
    def test_bare_c7_all_blue(self):
        cu = recognize(cycle(7))
        assert cu is not None
        assert cu.blue == frozenset(range(7))
        assert cu.m == 3

    def test_leaf_on_cycle_is_ke(self):
        assert recognize(c3_with_pendant()) is None

    def test_even_cycle_is_ke(self):
        assert recognize(cycle(6)) is None

    def test_rejects_tree(self):
        with pytest.raises(NotUnicyclicError):
            recognize(path(4))

    def test_rejects_disconnected(self):
        g = Graph.build(8, [(i, (i + 1) % 5) for i in range(5)] + [(6, 7)])
        with pytest.raises(NotUnicyclicError):
            recognize(g)

    @settings(max_examples=80, deadline=None)
    @given(cyc=st.sampled_from([3, 5, 7]),
           n_p2=st.integers(1, 5), n_leaf=st.integers(0, 5),
           seed=st.integers(0, 10 ** 6))
    def test_roundtrip_and_order_invariance(self, cyc, n_p2, n_leaf, seed):
        _, cu = generate_random(cyc, n_p2, n_leaf, seed=seed)
        got = recognize(cu.graph)
        assert got is not None
        assert (got.blue, got.red, got.black) == (cu.blue, cu.red, cu.black)
        shuffled = recognize(cu.graph, order_seed=seed + 1)
        assert shuffled is not None
        assert (shuffled.red, shuffled.black) == (cu.red, cu.black)

    def test_figure2_roundtrip(self):
        cu = generate(figure2_script())
        got = recognize(cu.graph)
        assert got is not None
        assert got.coloring_dict() == cu.coloring_dict()


class TestIsKe:
    def test_bipartite_graph(self):
        assert is_ke(path(5))

    def test_c5(self):
        assert not is_ke(cycle(5))

    def test_c3_with_pendant(self):
        assert is_ke(c3_with_pendant())


class TestDisconnectedInvariants:
    def test_c5_plus_edge(self):
        g = Graph.build(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 6)])
        stats = disconnected_invariants(g)
        assert stats["whole"]["alpha"] == 3
        assert stats["whole"]["mu"] == 3
        assert stats["whole"]["d_c"] == 0
        assert all(stats["checks"].values())

    def test_generated_plus_isolated_vertex(self):
        _, cu = generate_random(3, 1, 1, seed=5)
        shift = cu.graph.n
        g = Graph.build(shift + 1, list(cu.graph.edges))
        stats = disconnected_invariants(g)
        assert stats["whole"]["d_c"] == stats["cycle_component"]["d_c"] + 1
        assert all(stats["checks"].values())

    def test_rejects_connected_input(self):
        with pytest.raises(PreconditionError):
            disconnected_invariants(cycle(5))


class TestScriptFormat:
    def test_round_trip(self):
        script = figure2_script()
        assert parse_script(script_to_text(script)) == script

    def test_comments_ignored(self):
        text = "# build\ncycle 3\n# attach\np2 0\n"
        assert parse_script(text) == BuildScript(3, (("p2", 0),))

    def test_missing_header(self):
        with pytest.raises(ScriptError):
            parse_script("p2 0\n")

    def test_bad_step_reports_line(self):
        with pytest.raises(ScriptError) as err:
            parse_script("cycle 3\nattach 0\n")
        assert err.value.line == 2

    def test_even_cycle_rejected(self):
        with pytest.raises(ScriptError):
            parse_script("cycle 4\n")

    def test_validate_script_delegates(self):
        with pytest.raises(ScriptError):
            validate_script(BuildScript(3, (("leaf", 0),)))

    def test_coloring_json_round_trip(self):
        cu = generate(figure2_script())
        assert coloring_from_json(cu.coloring_json()) == cu.coloring_dict()
