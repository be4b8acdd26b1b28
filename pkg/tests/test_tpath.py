from itertools import combinations

import pytest

from bsnet.builders import assign_roles
from bsnet.errors import DimensionError, WitnessFormatError
from bsnet.graph import build
from bsnet.models import AuditMode, WitnessDocument
from bsnet.services import assemble, pi3_formula, random_triples, upper_bound, verify_web, verify_witness
from bsnet.services.tpath_service import embedded_triple, pairing_counts
from tests.conftest import labels


@pytest.mark.parametrize("n, value", [(3, 1), (4, 3), (5, 4), (6, 6), (7, 7), (8, 9), (9, 10)])
def test_formula(n, value):
    assert pi3_formula(n) == value


def test_formula_below_range():
    with pytest.raises(ValueError):
        pi3_formula(2)


def test_pairing_counts(web_service, bs5, bs6):
    odd = web_service.build_web(bs5, labels("12345", "21345", "12354"))
    even = web_service.build_web(bs6, labels("123456", "213456", "123465"))
    assert pairing_counts(odd) == (0, 2, 2)
    assert pairing_counts(even) == (2, 2, 2)
    assert sum(pairing_counts(odd)) == pi3_formula(5)


def test_bs3_witness_is_one_direct_t_path(bs3, web_service):
    triple = assign_roles(bs3, labels("123", "231", "312"))
    witness = assemble(web_service.build_web(bs3, triple), bs3)
    assert len(witness.t_paths) == 1
    assert witness.provenance[0].startswith("direct via")
    assert verify_witness(bs3, triple, witness).passed


def test_provenance_names_the_joined_paths(bs4, web_service):
    triple = assign_roles(bs4, labels("1234", "1432", "2413"))
    witness = assemble(web_service.build_web(bs4, triple), bs4)
    assert witness.provenance == ["ab[0]+bc[0]", "ab[1]+ac[0]", "bc[1]+ac[1]"]
    for path in witness.t_paths:
        assert set(triple.vertices) <= set(path)


class TestUpperBound:
    def test_bs3_exhaustive(self, bs3):
        report = upper_bound(bs3, AuditMode.EXHAUSTIVE)
        assert (report.cmax, report.upper_bound, report.triples_checked) == (3, 1, 20)

    def test_bs4_exhaustive(self, bs4):
        report = upper_bound(bs4, AuditMode.EXHAUSTIVE)
        assert report.cmax == 3
        assert report.upper_bound == 3 == pi3_formula(4)

    def test_bs5_sampled(self, bs5, settings):
        report = upper_bound(bs5, AuditMode.SAMPLED, settings)
        assert report.cmax == 3
        assert report.upper_bound == 4
        assert report.triples_checked == settings.sample_triples + 1

    def test_exhaustive_limited_to_bs4(self, bs5):
        with pytest.raises(DimensionError):
            upper_bound(bs5, AuditMode.EXHAUSTIVE)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_bound_meets_formula_when_three_neighbours_are_shared(self, n):
        assert (3 * (2 * n - 3) - 3) // 4 == pi3_formula(n)

    def test_embedded_triple_shares_three_neighbours(self, bs6):
        assert len(bs6.common_neighbors(embedded_triple(bs6))) == 3


def test_random_triples_are_seeded_and_distinct():
    first = random_triples(5, 50, seed=7)
    assert first == random_triples(5, 50, seed=7)
    assert first != random_triples(5, 50, seed=8)
    assert len({tuple(sorted(t)) for t in first}) == 50
    assert all(len(set(t)) == 3 for t in first)


def test_random_triples_capped_by_population():
    assert len(random_triples(3, 100, seed=1)) == 20


class TestVerifierRejects:
    @pytest.fixture
    def bs4_case(self, bs4, web_service):
        triple = assign_roles(bs4, labels("1234", "2143", "3412"))
        web = web_service.build_web(bs4, triple)
        return triple, web, assemble(web, bs4)

    @pytest.fixture
    def bs5_case(self, bs5, web_service):
        triple = assign_roles(bs5, labels("12345", "12354", "12543"))
        return triple, web_service.build_web(bs5, triple)

    def test_valid_witness_passes(self, bs4, bs4_case):
        triple, _, witness = bs4_case
        report = verify_witness(bs4, triple, witness)
        assert report.passed
        assert "pairwise disjointness" in report.checked

    def test_wrong_count(self, bs4, bs4_case):
        triple, _, witness = bs4_case
        broken = witness.model_copy(update={"t_paths": witness.t_paths[:2]})
        assert "count" in verify_witness(bs4, triple, broken).failure

    def test_shared_interior(self, bs4, bs4_case):
        triple, _, witness = bs4_case
        long_path = next(p for p in witness.t_paths if len(p) > 3)
        broken = witness.model_copy(update={"t_paths": [long_path] * 3})
        assert "vertex intersection exceeds T" in verify_witness(bs4, triple, broken).failure

    def test_non_edge(self, bs4, bs4_case):
        triple, _, witness = bs4_case
        jump = (triple.a, triple.b, triple.c)
        broken = witness.model_copy(update={"t_paths": [jump, *witness.t_paths[1:]]})
        assert "non-adjacent" in verify_witness(bs4, triple, broken).failure

    def test_even_web_with_spares(self, bs4, bs4_case):
        triple, web, _ = bs4_case
        broken = web.model_copy(update={"spares": [bs4.neighbors(triple.b)[0]]})
        assert "spare count" in verify_web(bs4, triple, broken).failure

    def test_missing_spare(self, bs5, bs5_case):
        triple, web = bs5_case
        broken = web.model_copy(update={"spares": web.spares[:1]})
        assert "spare count" in verify_web(bs5, triple, broken).failure

    def test_spare_on_a_path(self, bs5, bs5_case):
        triple, web = bs5_case
        used = next(p[-2] for p in web.ab if len(p) > 2)
        broken = web.model_copy(update={"spares": [used, web.spares[1]]})
        assert "spare appears on path" in verify_web(bs5, triple, broken).failure

    def test_wrong_family_size(self, bs5, bs5_case):
        triple, web = bs5_case
        broken = web.model_copy(update={"ac": web.ac[:3]})
        assert "path counts" in verify_web(bs5, triple, broken).failure


def test_witness_document_requires_roles(bs4, bs4_web_document):
    document = bs4_web_document.model_copy(update={"roles": {"b": "1234", "c": "2143"}})
    with pytest.raises(WitnessFormatError):
        document.to_witness()


@pytest.fixture
def bs4_web_document(bs4, web_service):
    raw = labels("1234", "2143", "3412")
    triple = assign_roles(bs4, raw)
    witness = assemble(web_service.build_web(bs4, triple), bs4)
    return WitnessDocument.from_witness(witness, pi3_formula(4), True, raw)


def test_witness_document_reads_back(bs4, bs4_web_document):
    witness = bs4_web_document.to_witness()
    assert verify_witness(bs4, witness.terminals, witness).passed
    assert verify_web(bs4, witness.terminals, witness.web).passed


@pytest.mark.parametrize("n", [3, 4])
def test_end_to_end_small(tpaths, n):
    g = build(n)
    for raw in random_triples(n, 20, seed=n):
        witness, verified = tpaths.witness(g, raw)
        assert verified
        assert len(witness.t_paths) == pi3_formula(n)


@pytest.mark.slow
def test_end_to_end_every_bs4_triple(tpaths, bs4):
    for raw in combinations(bs4.vertices(), 3):
        _, verified = tpaths.witness(bs4, raw)
        assert verified


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_end_to_end_sampled(tpaths, settings, n):
    g = build(n)
    for raw in random_triples(n, settings.sample_triples, settings.seed):
        _, verified = tpaths.witness(g, raw)
        assert verified


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_end_to_end_large(tpaths, n):
    g = build(n)
    for raw in random_triples(n, 3, seed=n):
        witness, verified = tpaths.witness(g, raw)
        assert verified
        assert len(witness.t_paths) == pi3_formula(n)
