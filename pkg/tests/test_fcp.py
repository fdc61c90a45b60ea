import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import SEED, fc_pool, random_prefix_predicate
from maxext.errors import BudgetError, PreconditionError
from maxext.fcp import (
    PrefixPredicate,
    Property,
    greedy_maximal,
    greedy_stages,
    range_gadget_fcp,
    sigma1_maximal,
)
from maxext.finset import FinSet, Universe
from maxext.formula import parse
from maxext.oracles import all_pass, fcp_checks, maximal_admissible, sigma1_checks

NO_CONSECUTIVE = parse("forall y < u . (y in X -> not y + 1 in X)")
POOL = fc_pool(random.Random(SEED), 8, 20)


def prop(text, u):
    return Property.from_formula(parse(text), Universe(u))


def test_greedy_examples():
    phi = Property.from_formula(NO_CONSECUTIVE, Universe(5))
    assert greedy_maximal(FinSet.of([0, 1, 2]), phi) == FinSet.of([0, 2])
    assert greedy_maximal(FinSet.of([0, 1, 2]), phi, order=[1, 0, 2]) == FinSet.of([1])
    assert greedy_maximal(FinSet(0), phi) == FinSet(0)


def test_order_must_be_permutation_of_A():
    phi = prop("true", 4)
    with pytest.raises(PreconditionError):
        greedy_maximal(FinSet.of([0, 1]), phi, order=[0])
    with pytest.raises(PreconditionError):
        greedy_maximal(FinSet.of([0, 1]), phi, order=[0, 1, 1])
    with pytest.raises(PreconditionError):
        greedy_maximal(FinSet.of([4]), phi)


def test_property_rejects_non_finite_character():
    with pytest.raises(PreconditionError, match="fails on {}"):
        prop("0 in X", 3)
    with pytest.raises(PreconditionError, match="subset"):
        prop("1 in X -> 2 in X", 3)
    with pytest.raises(PreconditionError):
        Property.from_predicate(lambda X: len(X) != 1, 3)


def test_from_predicate_with_support():
    phi = Property.from_predicate(lambda X: 7 not in X, 100, support=[7])
    assert phi(FinSet.of([1, 2])) and not phi(FinSet.of([7]))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, len(POOL) - 1), st.integers(0, 255), st.randoms(use_true_random=False))
def test_greedy_is_maximal(k, A, rnd):
    _, phi = POOL[k]
    order = list(FinSet(A))
    rnd.shuffle(order)
    W = greedy_maximal(FinSet(A), phi, order)
    assert all_pass(fcp_checks(W, A, phi))
    assert W in maximal_admissible(A, phi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(POOL) - 1), st.integers(0, 255))
def test_stages_form_a_chain(k, A):
    _, phi = POOL[k]
    stages = greedy_stages(FinSet(A), phi)
    assert stages[0] == FinSet(0)
    assert len(stages) == len(FinSet(A)) + 1
    for a, b in zip(stages, stages[1:]):
        assert a <= b and len(b) - len(a) <= 1 and phi(b)


def test_every_maximal_set_is_reachable():
    # each maximal subset comes out of the greedy scan for a suitable order
    phi = Property.from_formula(NO_CONSECUTIVE, Universe(4))
    A = FinSet.of(range(4))
    reached = set()
    for order in itertools.permutations(range(4)):
        reached.add(greedy_maximal(A, phi, order))
    assert reached == set(maximal_admissible(A, phi))


# ---------------------------------------------------------------------------
# prefix predicates


def test_sigma1_examples():
    # phi(X) = "0 not in X", witnessed from length 1 on
    rho = PrefixPredicate(lambda s: len(s) >= 1 and s[0] == 0)
    res = sigma1_maximal(FinSet.of([0, 1, 2]), rho)
    assert res.c_phi == 1 and res.result == FinSet.of([1, 2])
    # true on the empty string: c = 0
    res = sigma1_maximal(FinSet.of([0, 3]), PrefixPredicate(lambda s: True))
    assert res.c_phi == 0 and res.result == FinSet.of([0, 3])


def test_sigma1_budget():
    with pytest.raises(BudgetError):
        sigma1_maximal(FinSet.of([0]), PrefixPredicate(lambda s: False), search_cap=10)


def test_prefix_from_formula():
    rho = PrefixPredicate.from_formula(parse("0 < m and not 0 in X", free=["m"]))
    assert rho((0,)) and not rho(()) and not rho((1, 0))
    assert rho.witness(FinSet.of([3]), 8) == 1
    assert rho.witness(FinSet.of([0]), 8) is None
    with pytest.raises(PreconditionError):
        PrefixPredicate.from_formula(parse("a in X", free=["a"]))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 511), st.randoms(use_true_random=False))
def test_sigma1_is_maximal(c, A, rnd):
    rho = random_prefix_predicate(rnd, c)
    res = sigma1_maximal(FinSet(A), rho, search_cap=12)
    assert res.c_phi == c
    assert all_pass(sigma1_checks(res.result, A, rho, 12))


# ---------------------------------------------------------------------------
# sequential gadget


@pytest.mark.parametrize(
    "f, u",
    [([], 5), ([(0, 3), (1, 3), (7, 1)], 5), ([(0, 0)], 1), ([(i, i) for i in range(6)], 6)],
)
def test_range_gadget_fcp(f, u):
    B = range_gadget_fcp(f, u)
    values = {v for _, v in f}
    assert len(B) == u
    for i in range(u):
        assert B[i] == (FinSet.of([i]) if i in values else FinSet(0))


def test_range_gadget_rejects_bad_functions():
    with pytest.raises(PreconditionError):
        range_gadget_fcp([(0, 1), (0, 2)], 4)
    with pytest.raises(PreconditionError):
        range_gadget_fcp([(0, 9)], 4)
