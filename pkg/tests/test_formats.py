import pytest

from maxext.errors import InputError
from maxext.finset import FinSet
from maxext.formats import (
    load_closure_operator,
    load_nd_operator,
    load_poset,
    load_semilattice,
    parse_function,
    parse_rules,
)


def test_rules():
    rules = parse_rules("# c\n{1,2} -> 5\n\n{} -> {3,4}  # choose\n")
    assert rules == [(FinSet.of([1, 2]), 5), (FinSet(0), FinSet.of([3, 4]))]


def test_rule_errors_report_line():
    with pytest.raises(InputError) as e:
        parse_rules("{1} -> 2\n  {1 -> 3\n", source="x.ops")
    assert (e.value.line, e.value.column) == (2, 3) and e.value.source == "x.ops"
    with pytest.raises(InputError):
        load_closure_operator("{1} -> {2,3}\n")
    with pytest.raises(InputError):
        load_closure_operator("{5} -> 1\n", universe=3)


def test_operator_universe_defaults_to_mentioned_elements():
    assert load_closure_operator("{1} -> 4\n").universe.size == 5
    assert load_nd_operator("{} -> 2\n").rules == ((FinSet(0), FinSet.of([2])),)
    assert load_closure_operator("").universe.size == 1


def test_functions():
    assert parse_function("0:3, 1:3,2:5") == [(0, 3), (1, 3), (2, 5)]
    assert parse_function("") == [] and parse_function("{}") == []
    assert parse_function("{0:1}") == [(0, 1)]
    for bad in ("0-3", "0:1,0:2", "a:1"):
        with pytest.raises(InputError):
            parse_function(bad)


def test_orders():
    P = load_poset("elements 3\n0 <= 1\n1 <= 2\n")
    assert P.leq(0, 2)
    L = load_semilattice("elements 3\n0 <= 2\n1 <= 2\njoin 0 1 = 2\n")
    assert L.top == 2
    assert load_semilattice("elements 2\n0 <= 1\njoin auto\n").join[0][1] == 1
    for bad in (
        "0 <= 1\n",
        "elements 2\n0 <= 2\n",
        "elements 2\n0 <= 1\n1 <= 0\n",
        "",
    ):
        with pytest.raises(InputError):
            load_poset(bad)
    with pytest.raises(InputError):
        load_semilattice("elements 2\n0 <= 1\n")
    with pytest.raises(InputError) as e:
        load_semilattice("elements 3\n0 <= 2\n1 <= 2\njoin 0 1 = 1\n")
    assert e.value.line == 4
    with pytest.raises(InputError):
        load_semilattice("elements 2\njoin auto\n")
