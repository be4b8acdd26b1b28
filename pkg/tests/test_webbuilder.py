from itertools import combinations

import pytest

from bsnet.builders import (
    assign_roles,
    base_common_neighbours_n4,
    base_three_copies_n4,
    base_web_n3,
    check_fan,
    copy_groups,
    search_web,
    select_border_sets,
    split_lengths,
)
from bsnet.builders.fallback import fallback_web, required_spares
from bsnet.errors import ConstructionError, DimensionError, FallbackExhaustedError, TerminalError
from bsnet.graph import build, parse
from bsnet.models import TerminalTriple, target_counts
from bsnet.services import WebService, random_triples, verify_web
from tests.conftest import labels

BS3_TRIPLES = list(combinations(build(3).vertices(), 3))


def assert_valid(g, triple, web):
    report = verify_web(g, triple, web)
    assert report.passed, report.failure


@pytest.mark.parametrize(
    "n, counts",
    [(3, (0, 0, 2)), (4, (2, 2, 2)), (5, (2, 2, 4)), (6, (4, 4, 4)), (7, (4, 4, 6)), (8, (6, 6, 6)), (9, (6, 6, 8))],
)
def test_target_counts(n, counts):
    assert target_counts(n) == counts


def test_required_spares():
    assert [required_spares(m) for m in range(3, 10)] == [0, 0, 2, 0, 2, 0, 2]


class TestRoles:
    def test_lone_vertex_of_a_two_copy_split_is_b(self, bs4):
        triple = assign_roles(bs4, labels("1234", "2134", "1243"))
        assert triple.b == parse("1243")
        assert (triple.a, triple.c) == (parse("1234"), parse("2134"))

    def test_otherwise_ascending_rank(self, bs4):
        triple = assign_roles(bs4, labels("2413", "1234", "1432"))
        assert triple.vertices == tuple(labels("1234", "1432", "2413"))
        assert len(copy_groups(bs4.view, triple)) == 3

    def test_rejects_repeats(self, bs4):
        with pytest.raises(TerminalError):
            assign_roles(bs4, labels("1234", "1234", "2134"))

    def test_rejects_foreign_vertices(self, bs4):
        with pytest.raises(TerminalError):
            assign_roles(bs4.view.copy_view(4), labels("1234", "2134", "1243"))


class TestBaseCases:
    @pytest.mark.parametrize("raw", BS3_TRIPLES, ids=lambda raw: "-".join(map(str, raw)))
    def test_every_bs3_triple(self, bs3, web_service, raw):
        triple = assign_roles(bs3, raw)
        web = web_service.build_web(bs3, triple)
        assert_valid(bs3, triple, web)
        assert web.counts() == (0, 0, 2)
        assert len(web.spares) <= 2

    def test_direct_edge_when_a_and_c_are_adjacent(self, bs3):
        for raw in combinations(bs3.vertices(), 3):
            triple = assign_roles(bs3, raw)
            web = base_web_n3(bs3.view, triple)
            if bs3.adjacent(triple.a, triple.c):
                assert (triple.a, triple.c) in web.ac
            else:
                # bipartite: paths between equal parities have even length
                assert all((len(p) - 1) % 2 == 0 for p in web.ac)

    def test_bs3_web_inside_a_copy(self, bs4):
        frame = bs4.view.copy_view(4)
        triple = assign_roles(frame, labels("1234", "2314", "3124"))
        web = base_web_n3(frame, triple)
        assert web.n == 3
        assert web.trace[0].startswith("base:n3")
        assert_valid(frame, triple, web)

    def test_three_copy_bs4_instance(self, bs4, web_service):
        triple = assign_roles(bs4, labels("1234", "1432", "2413"))
        assert (triple.b, triple.c) == (parse("1432"), parse("2413"))
        web = web_service.build_web(bs4, triple)
        assert_valid(bs4, triple, web)
        assert web.counts() == (2, 2, 2)
        assert web.spares == []

    def test_three_copy_base_directly(self, bs4, settings):
        triple = assign_roles(bs4, labels("1234", "1432", "2413"))
        web = base_three_copies_n4(bs4, triple, settings)
        assert_valid(bs4, triple, web)
        assert sum(web.counts()) == 6

    def test_three_copy_base_preconditions(self, bs4, bs5):
        with pytest.raises(ConstructionError):
            base_three_copies_n4(bs4, assign_roles(bs4, labels("1234", "2134", "3214")))
        with pytest.raises(DimensionError):
            base_three_copies_n4(bs5, assign_roles(bs5, labels("12345", "12354", "12543")))

    @pytest.mark.parametrize("raw", [("1234", "2314", "3124"), ("1234", "3241", "4213")])
    def test_three_common_neighbours(self, bs4, web_service, raw):
        triple = assign_roles(bs4, labels(*raw))
        assert len(bs4.common_neighbors(triple.vertices)) == 3
        web = web_service.build_web(bs4, triple)
        assert_valid(bs4, triple, web)
        assert web.counts() == (2, 2, 2)
        assert web.trace == ["base:n4 common-neighbours"]

    def test_every_bs4_triple_with_three_common_neighbours(self, bs4, web_service):
        shared = [
            assign_roles(bs4, raw) for raw in combinations(bs4.vertices(), 3) if len(bs4.common_neighbors(raw)) == 3
        ]
        assert {1, 3} <= {len(copy_groups(bs4.view, triple)) for triple in shared}
        for triple in shared:
            assert_valid(bs4, triple, web_service.build_web(bs4, triple))

    def test_common_neighbour_base_preconditions(self, bs4, bs5):
        with pytest.raises(ConstructionError):
            base_common_neighbours_n4(bs4, assign_roles(bs4, labels("1234", "2143", "3412")))
        with pytest.raises(DimensionError):
            base_common_neighbours_n4(bs5, assign_roles(bs5, labels("12345", "12354", "12543")))

    @pytest.mark.slow
    def test_every_bs4_three_copy_triple(self, bs4, settings):
        for raw in combinations(bs4.vertices(), 3):
            triple = assign_roles(bs4, raw)
            if len(copy_groups(bs4.view, triple)) == 3:
                assert_valid(bs4, triple, base_three_copies_n4(bs4, triple, settings))

    @pytest.mark.slow
    def test_every_bs4_triple(self, bs4, web_service):
        for raw in combinations(bs4.vertices(), 3):
            triple = assign_roles(bs4, raw)
            assert_valid(bs4, triple, web_service.build_web(bs4, triple))


class TestBorderSets:
    @pytest.fixture
    def triple(self, bs5) -> TerminalTriple:
        return assign_roles(bs5, labels("12345", "12354", "12543"))

    def test_candidates_are_large_and_disjoint(self, bs5, triple):
        borders = select_border_sets(bs5.view, triple, {})
        assert all(len(H) >= 4 for H in borders.H.values())
        assert not set(borders.H["ab"]) & set(borders.H["ac"])
        for name, H in borders.H.items():
            s, t = triple.pair_ends(name)
            for v in H:
                assert bs5.copy_of(v) == bs5.copy_of(s) and v != s
                assert bs5.copy_of(bs5.out_plus(v)) == bs5.copy_of(t)
                assert t not in (bs5.out_plus(v), bs5.out_minus(v))

    def test_selection(self, bs5, triple):
        sizes = {"ab": 1, "ac": 2, "bc": 1}
        borders = select_border_sets(bs5.view, triple, sizes)
        chosen = []
        for name, need in sizes.items():
            assert len(borders.M[name]) == need
            assert set(borders.M[name]) <= set(borders.H[name])
            assert borders.M_out[name] == [bs5.out_plus(v) for v in borders.M[name]]
            chosen += borders.M[name] + borders.M_out[name]
        assert len(chosen) == len(set(chosen))
        assert not set(chosen) & set(triple.vertices)

    def test_shortfall(self, bs5, triple):
        with pytest.raises(ConstructionError):
            select_border_sets(bs5.view, triple, {"ab": 100})


class TestFallback:
    def test_bs3(self, bs3, settings):
        for raw in combinations(bs3.vertices(), 3):
            triple = assign_roles(bs3, raw)
            assert_valid(bs3, triple, fallback_web(bs3, triple, (0, 0, 2), settings))

    def test_bs4_sample(self, bs4, settings):
        for raw in random_triples(4, 10, settings.seed):
            triple = assign_roles(bs4, raw)
            web = search_web(bs4.view, triple, (2, 2, 2), settings)
            assert web.trace[0].startswith("fallback:")
            assert_valid(bs4, triple, web)

    def test_seeded_routing_for_three_common_neighbours(self, bs4, settings):
        triple = assign_roles(bs4, labels("1234", "3241", "4213"))
        web = search_web(bs4.view, triple, (2, 2, 2), settings)
        assert_valid(bs4, triple, web)

    def test_impossible_counts(self, bs4, settings):
        triple = assign_roles(bs4, labels("1234", "2143", "3412"))
        with pytest.raises(FallbackExhaustedError) as excinfo:
            search_web(bs4.view, triple, (9, 9, 9), settings)
        assert "n=4" in excinfo.value.fingerprint

    @pytest.mark.slow
    def test_every_bs4_triple(self, bs4, settings):
        for raw in combinations(bs4.vertices(), 3):
            triple = assign_roles(bs4, raw)
            assert_valid(bs4, triple, search_web(bs4.view, triple, (2, 2, 2), settings))


class TestRecursiveCases:
    @pytest.mark.parametrize(
        "raw",
        [
            ("12345", "21345", "13245"),
            ("12345", "21345", "12354"),
            ("12345", "12354", "12543"),
            ("54321", "12345", "31425"),
            ("25314", "32514", "53214"),
        ],
    )
    def test_bs5(self, bs5, web_service, raw):
        triple = assign_roles(bs5, labels(*raw))
        web = web_service.build_web(bs5, triple)
        assert_valid(bs5, triple, web)
        assert web.counts() == (2, 2, 4)
        assert len(web.spares) == 2

    @pytest.mark.parametrize(
        "raw",
        [
            ("123456", "213456", "132456"),
            ("123456", "213456", "123465"),
            ("123456", "123465", "123654"),
        ],
    )
    def test_bs6(self, bs6, web_service, raw):
        triple = assign_roles(bs6, labels(*raw))
        web = web_service.build_web(bs6, triple)
        assert_valid(bs6, triple, web)
        assert web.counts() == (4, 4, 4)
        assert web.spares == []
        lengths = split_lengths(web)
        if lengths is not None:
            assert all(length >= 3 for length in lengths)

    def test_construction_is_deterministic(self, bs5, settings):
        raw = labels("12345", "21345", "12354")
        first = WebService(settings).build_web(bs5, raw)
        second = WebService(settings).build_web(bs5, raw)
        assert first == second

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6])
    def test_random_sweep(self, web_service, settings, n):
        g = web_service.graph(n)
        for raw in random_triples(n, settings.sample_triples, settings.seed):
            triple = assign_roles(g, raw)
            web = web_service.build_web(g, triple)
            assert_valid(g, triple, web)
            lengths = split_lengths(web)
            if lengths is not None:
                assert all(length >= 3 for length in lengths)


def test_fan_guard_rejects_more_targets_than_connectivity(bs4, web_service):
    frame = bs4.view.copy_view(4)
    check_fan(frame, 3, 3)
    with pytest.raises(ConstructionError, match="4 targets exceed connectivity 3"):
        check_fan(frame, 4, 3)
    builder = web_service.builders[-1]
    with pytest.raises(ConstructionError, match=builder.name):
        builder.fan_budget(frame, 5, 2)
