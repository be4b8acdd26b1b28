from itertools import combinations

import pytest

from bsnet.builders import assign_roles
from bsnet.config import Settings
from bsnet.errors import DimensionError, OracleBudgetError
from bsnet.services import OracleService, brute_force_pi3, pi3_formula, random_triples
from tests.conftest import labels


def test_bs3_minimum_over_triples_is_the_formula(bs3):
    values = {}
    for raw in combinations(bs3.vertices(), 3):
        result = brute_force_pi3(bs3, assign_roles(bs3, raw))
        assert result.exact
        assert result.max_length is None
        assert result.value >= pi3_formula(3)
        values[frozenset(raw)] = result.value
    assert min(values.values()) == pi3_formula(3) == 1
    assert values[frozenset(labels("123", "132", "213"))] == 2
    assert values[frozenset(labels("123", "231", "312"))] == 1


def test_bs4_reaches_the_formula(bs4, settings):
    for raw in random_triples(4, 2, settings.seed):
        result = OracleService(settings).brute_force_pi3(bs4, assign_roles(bs4, raw))
        assert result.value == pi3_formula(4)
        assert result.exact
        assert result.upper_bound == 3
        assert result.max_length == settings.oracle_max_length


def test_budget_exhaustion_reports_best(bs4):
    triple = assign_roles(bs4, labels("1234", "2143", "3412"))
    with pytest.raises(OracleBudgetError) as excinfo:
        OracleService(Settings(oracle_node_budget=1)).brute_force_pi3(bs4, triple)
    assert excinfo.value.best <= 1


def test_oracle_refuses_large_graphs(bs5):
    triple = assign_roles(bs5, labels("12345", "21345", "12354"))
    with pytest.raises(DimensionError):
        brute_force_pi3(bs5, triple)


@pytest.mark.slow
def test_bs4_sample(bs4, settings):
    service = OracleService(settings)
    for raw in random_triples(4, 50, settings.seed):
        assert service.brute_force_pi3(bs4, assign_roles(bs4, raw)).value == 3
