"""Maximal subsets for properties of finite character, finitary closure
operators (deterministic and nondeterministic) and maximal ideals, on finite
universes, with brute-force oracles for every construction."""

from .closure import ClosureOperator, ce_maximal, cl, closure_stages, is_closed, range_gadget_operator
from .errors import BudgetError, IndexRangeError, InputError, MaxExtError, PreconditionError
from .fcp import PrefixPredicate, Property, greedy_maximal, range_gadget_fcp, sigma1_maximal
from .finset import FinSet, Universe, contains, index_of, members, parse_set, subsets
from .formula import check_finite_character, eval_direct, eval_hat, parse, to_text
from .ndclosure import NdClosureOperator, determinize, is_nclosed, nce_maximal, nclosed_family
from .orders import (
    JoinSemilattice,
    Poset,
    extend_to_maximal_ideal_poset,
    extend_to_maximal_ideal_semilattice,
    is_poset_ideal,
    is_semilattice_ideal,
    poset_ideal_operator,
    semilattice_ideal_operator,
)

__version__ = "0.1.0"
