"""Exit criteria of the build, each reported as one PASS/FAIL line.

Every check here compares a construction against an exhaustive oracle built
only from definitions, on seeded random instances.
"""

import random
import re
import time

import pytest

from gen import (
    SEED,
    fc_pool,
    random_closure_operator,
    random_function,
    random_nd_operator,
    random_prefix_predicate,
    random_subset,
)
from maxext.closure import ce_maximal, cl, solve_range_gadget
from maxext.errors import PreconditionError
from maxext.fcp import Property, greedy_maximal, range_gadget_fcp, sigma1_maximal
from maxext.finset import FinSet, Universe, iter_bits, members, subset_masks
from maxext.formula import eval_direct, eval_hat, parse
from maxext.ndclosure import NdClosureOperator, determinize, nce_maximal, nclosed_family
from maxext.oracles import (
    all_pass,
    ce_checks,
    fcp_checks,
    fcp_exhaustive_maximal,
    ideal_checks,
    least_closed_superset,
    maximal_admissible,
    sigma1_checks,
)
from maxext.orders import (
    extend_to_maximal_ideal_poset,
    extend_to_maximal_ideal_semilattice,
    ideals,
    is_poset_ideal,
    is_prime_ideal,
    is_semilattice_ideal,
    m3,
    poset_catalog,
    poset_ideal_operator,
    semilattice_catalog,
    semilattice_ideals,
    semilattice_ideal_operator,
)

pytestmark = pytest.mark.acceptance

EVAL_CORPUS = [
    "0 in X",
    "true",
    "false -> 2 in X",
    "not 3 in X or 4 in X",
    "1 in X and (5 in X or not 7 in X)",
    "(1 in X <-> 2 in X) <-> 3 in X",
    "forall y < u . (y in X -> not y + 1 in X)",
    "exists y < 10 . (y in X and y * y = 9)",
    "forall y < 5 . (y in X <-> y + 5 in X)",
    "exists y < u . (exists z < u . (y in X and z in X and y < z and z = y + y))",
    "exists y < 4 . (y + 3 in X)",
    "forall y < u . (forall z < y . (y in X and z in X -> not y = z + 2))",
    "exists y < u . (y * 2 in X and y * 3 in X)",
    "forall y < u . (y * y in X -> y in X)",
    "exists y < 12 . (y in X and 9 < y)",
    "not exists y < u . (y in X)",
    "exists y < u . (y in X and forall z < u . (z in X -> z < y + 1))",
    "forall y < u . (y in X -> exists z < u . (z in X and (z = y + 1 or y = z + 1)))",
    "forall y < u . (y in X -> y < a)",
    "forall y < a + 1 . (y in X)",
    "exists y < u . (y in X and y + y = a)",
    "exists y < u . (y in P0 and y in X)",
    "forall y < u . (y in X -> y in P0 or y in P1)",
    "0 < a -> a in X or a in P0",
]
PARAMS = {"P0": FinSet.of([1, 3, 5]), "P1": FinSet.of([2, 4, 6, 8])}


def test_criterion_01_evaluation_equivalence(report):
    start = time.perf_counter()
    mismatches = []
    for text in EVAL_CORPUS:
        phi = parse(text, free=("a",) if re.search(r"\ba\b", text) else (), params=PARAMS)
        for a in (0, 3, 7):
            env = {k: v for k, v in {"u": 10, "a": a}.items() if k in phi.free_vars}
            for n in range(1 << 10):
                fast = eval_hat(phi, n, env, PARAMS)
                slow = eval_direct(phi, members(n).elements, env, {k: v.elements for k, v in PARAMS.items()})
                if fast != slow:
                    mismatches.append((text, env, n))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 10 and len(EVAL_CORPUS) >= 20
    report("criterion 1 evaluation equivalence", ok,
           f"{len(EVAL_CORPUS)} formulas x 1024 indices, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok, mismatches[:5]


def test_criterion_02_greedy_maximality(report):
    start = time.perf_counter()
    rng = random.Random(SEED + 2)
    pool = fc_pool(rng, 12, 60)
    failures = []
    for _ in range(500):
        text, phi = rng.choice(pool)
        A = random_subset(rng, 12, rng.choice([0.3, 0.6, 0.9]))
        order = None
        if rng.random() < 0.5:
            order = list(iter_bits(A))
            rng.shuffle(order)
        W = greedy_maximal(FinSet(A), phi, order)
        if not (all_pass(fcp_checks(W, A, phi)) and fcp_exhaustive_maximal(W, A, phi)):
            failures.append((text, A, order))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    report("criterion 2 greedy maximality", ok, f"500 instances, {len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:5]


def test_criterion_03_sigma1(report):
    rng = random.Random(SEED + 3)
    failures = []
    for _ in range(100):
        c = rng.randint(0, 8)
        rho = random_prefix_predicate(rng, c)
        A = random_subset(rng, 12, rng.choice([0.4, 0.7, 1.0]))
        res = sigma1_maximal(FinSet(A), rho, search_cap=16)
        low = (1 << (c + 1)) - 1
        admissible = lambda m: rho.holds(m, 16)  # noqa: E731
        best = max((m & low).bit_count() for m in subset_masks(A) if admissible(m))
        brute = maximal_admissible(A, admissible)
        ok = (
            res.c_phi == c
            and (res.result.index & low).bit_count() == best
            and res.result in brute
            and all_pass(sigma1_checks(res.result, A, rho, 16))
        )
        if not ok:
            failures.append((rho.name, A))
    ok = not failures
    report("criterion 3 sigma1 maximal", ok, f"100 instances, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_04_closure_laws(report):
    rng = random.Random(SEED + 4)
    failures = []
    for t in range(500):
        u = rng.randint(1, 10)
        D = random_closure_operator(rng, u, max_rules=10, max_premise=3)
        for _ in range(3):
            X = FinSet(random_subset(rng, u, rng.choice([0.1, 0.3, 0.6])))
            Y = FinSet(X.index | random_subset(rng, u, 0.3))
            cx, cy = cl(X, D), cl(Y, D)
            laws = (
                X <= cx,
                cx <= cy,
                cl(cx, D) == cx,
                cx == least_closed_superset(X, D),
            )
            if not all(laws):
                failures.append((t, X, laws))
    ok = not failures
    report("criterion 4 closure laws and leastness", ok, f"500 operators, {len(failures)} failures")
    assert ok, failures[:5]


def _closed_start(rng, A, phi, close, tries=20):
    """A closed subset of ``A`` satisfying ``phi``, from closures of small sets."""
    for _ in range(tries):
        seed = FinSet.of(rng.sample(list(iter_bits(A)), min(rng.randint(0, 2), A.bit_count())))
        C = close(seed)
        if C is not None and C.index & ~A == 0 and phi(C):
            return C
    return None


def test_criterion_05_ce_construction(report):
    rng = random.Random(SEED + 5)
    pools = {u: fc_pool(rng, u, 25) for u in (6, 9, 12)}
    failures = []
    done = 0
    while done < 300:
        u = rng.choice(list(pools))
        D = random_closure_operator(rng, u, max_rules=8)
        _, phi = rng.choice(pools[u])
        A = random_subset(rng, u, rng.choice([0.6, 0.8, 1.0]))
        C = _closed_start(rng, A, phi, lambda s: cl(s, D))
        if C is None:
            continue
        done += 1
        order = None
        if rng.random() < 0.3:
            order = list(iter_bits(A))
            rng.shuffle(order)
        W = ce_maximal(FinSet(A), C, phi, D, order)
        if not all_pass(ce_checks(W, A, C, phi, D)):
            failures.append((D.to_text(), A, C))
    ok = not failures
    report("criterion 5 CE construction", ok, f"300 instances, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_06_range_reduction(report):
    start = time.perf_counter()
    u = 7**5 + 1  # p_3^5 = 7^5 fits
    values = [None, 0, 1, 2, 3]
    failures = []
    cases = 0
    for code in range(5**4):
        f = []
        for n in range(4):
            v = values[(code // 5**n) % 5]
            if v is not None:
                f.append((n, v))
        cases += 1
        B = solve_range_gadget(f, u)
        rng_f = {v for _, v in f}
        if any((i in rng_f) != (p not in B) for i, p in enumerate((2, 3, 5, 7))):
            failures.append(f)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    report("criterion 6 range reduction", ok, f"{cases} functions, {len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:5]


def test_criterion_07_sequential_gadget(report):
    rng = random.Random(SEED + 7)
    failures = []
    for _ in range(100):
        u = rng.randint(4, 16)
        f = random_function(rng, u)
        B = range_gadget_fcp(f, u)
        values = {v for _, v in f}
        if any((i in values) != (i in B[i]) for i in range(u)):
            failures.append((u, f))
    ok = not failures
    report("criterion 7 sequential gadget", ok, f"100 functions, {len(failures)} failures")
    assert ok, failures[:5]


def upset_operator(k: int, u: int | None = None) -> NdClosureOperator:
    """``{} -> {0..k}`` and ``{i} -> {j}`` for ``i < j <= k``."""
    rules = [(FinSet(0), FinSet.of(range(k + 1)))]
    rules += [(FinSet.of([i]), FinSet.of([j])) for i in range(k + 1) for j in range(i + 1, k + 1)]
    return NdClosureOperator(rules, Universe(u or k + 1))


def test_criterion_08_upset_family(report):
    bad = []
    for k in range(7):
        family = nclosed_family(upset_operator(k), range(k + 1))
        segments = sorted((FinSet.of(range(i, k + 1)) for i in range(k + 1)), key=lambda s: s.index)
        if family != segments:
            bad.append(k)
    ok = not bad
    report("criterion 8 upset family", ok, f"k = 0..6, mismatches at {bad}")
    assert ok


def test_criterion_09_nce_construction(report):
    rng = random.Random(SEED + 9)
    pools = {u: fc_pool(rng, u, 25) for u in (5, 7, 10)}
    failures = []
    done = 0
    while done < 200:
        u = rng.choice(list(pools))
        N = random_nd_operator(rng, u)
        _, phi = rng.choice(pools[u])
        A = random_subset(rng, u, rng.choice([0.6, 0.8, 1.0]))
        starts = [C for C in nclosed_family(N, A) if phi(C)]
        if not starts:
            continue
        done += 1
        C = rng.choice(starts)
        W = nce_maximal(FinSet(A), C, phi, N)
        if not all_pass(ce_checks(W, A, C, phi, N)):
            failures.append((N.to_text(), A, C))
    ok = not failures
    report("criterion 9 NCE construction", ok, f"200 instances, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_10_determinize_pitfall(report):
    # one rule {} -> {0, 1}; the property forbids 0
    N = NdClosureOperator([(FinSet(0), FinSet.of([0, 1]))], Universe(2))
    phi = Property.from_formula(parse("not 0 in X"), Universe(2))
    A = FinSet.of([0, 1])
    D = determinize(N, "least")
    no_start = not any(D.is_closed_mask(m) and phi(m) for m in subset_masks(A.index))
    try:
        ce_maximal(A, FinSet(0), phi, D)
        rejected = False
    except PreconditionError:
        rejected = True
    W = nce_maximal(A, FinSet.of([1]), phi, N)
    ok = no_start and rejected and W == FinSet.of([1]) and all_pass(ce_checks(W, A, FinSet.of([1]), phi, N))
    report("criterion 10 determinize pitfall", ok, "least-choice operator has no valid start; nce gives {1}")
    assert ok


def test_criterion_11_ideal_encodings(report):
    start = time.perf_counter()
    problems = []
    lattices = semilattice_catalog(6)
    posets = poset_catalog(5)
    for L in lattices:
        D = semilattice_ideal_operator(L)
        for m in subset_masks((1 << L.size) - 1):
            if D.is_closed_mask(m) != is_semilattice_ideal(m, L):
                problems.append(("faithful", L.relations(), m))
        for I in (I for I in semilattice_ideals(L) if L.top not in I):
            J = extend_to_maximal_ideal_semilattice(L, I)
            ok = all_pass(ideal_checks(J, I, L.size, lambda h: is_semilattice_ideal(h, L), L.top))
            if not ok:
                problems.append(("maximal", L.relations(), I))
    for P in posets:
        N = poset_ideal_operator(P)
        t = P.size
        for m in subset_masks((1 << (t + 1)) - 1):
            # closed sets avoiding the top are exactly the ideals of P
            if not (m >> t) & 1 and N.is_closed_mask(m) != is_poset_ideal(m, P):
                problems.append(("faithful", P.relations(), m))
        whole = (1 << t) - 1
        for I in ideals(P):
            J = extend_to_maximal_ideal_poset(P, I)
            # a maximal ideal of P avoids nothing inside P; the forbidden bit is t
            ok = all_pass(ideal_checks(J, I, t + 1, lambda h: h & ~whole == 0 and is_poset_ideal(h, P), t))
            if not ok:
                problems.append(("maximal", P.relations(), I))
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 300
    report("criterion 11 ideal encodings", ok,
           f"{len(lattices)} semilattices, {len(posets)} posets, {len(problems)} problems, {elapsed:.1f}s")
    assert ok, problems[:5]


def test_criterion_12_maximal_not_prime(report):
    L = m3()
    J = extend_to_maximal_ideal_semilattice(L, FinSet.of([0, 1]))
    maximal = all_pass(ideal_checks(J, FinSet.of([0, 1]), L.size, lambda h: is_semilattice_ideal(h, L), L.top))
    # 2 meet 3 = 0 lies in J while neither 2 nor 3 does
    ok = J == FinSet.of([0, 1]) and maximal and not is_prime_ideal(J, L)
    report("criterion 12 maximal ideal that is not prime", ok, f"M3, ideal {J}")
    assert ok
