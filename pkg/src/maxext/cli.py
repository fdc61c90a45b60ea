"""Command line interface: ``maxext <subcommand> ...``.

Exit status: 0 success, 1 input or precondition error, 2 budget exhausted,
3 an oracle check failed (``verify``).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .closure import ce_maximal, cl, range_from_gadget, range_gadget_operator, solve_range_gadget
from .errors import BudgetError, InputError, MaxExtError, PreconditionError
from .fcp import PrefixPredicate, Property, greedy_maximal, range_gadget_fcp, sigma1_maximal
from .finset import DEFAULT_ENUMERATION_CAP, FinSet, Universe, format_set, parse_set
from .formats import load_closure_operator, load_nd_operator, load_poset, load_semilattice, parse_function
from .formula import bind_hat, check_finite_character, environment, parse_file
from .ndclosure import DEFAULT_NODE_BUDGET, determinize, is_nclosed, nce_maximal, nclosed_family
from .orders import (
    extend_to_maximal_ideal_poset,
    extend_to_maximal_ideal_semilattice,
    is_poset_ideal,
    is_semilattice_ideal,
)
from . import oracles

DEFAULT_SEED = 0


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def _set(text: str | None, what: str) -> FinSet | None:
    if text is None:
        return None
    try:
        return parse_set(text)
    except InputError as e:
        raise InputError(f"--{what}: {e.message}") from None


def _universe(args, *sets: FinSet | None, at_least: int = 1) -> Universe:
    """``--universe`` if given, else one past the largest element mentioned."""
    top = max([s.max() for s in sets if s is not None] + [at_least - 1, 0])
    if args.universe is not None:
        U = Universe(args.universe)
        for s in sets:
            if s is not None and not U.admits(s):
                raise InputError(f"{s} does not fit in --universe {args.universe}")
        return U
    return Universe(top + 1)


def _formula(path: str):
    return parse_file(_read(path), source=path)


def _property(path: str, U: Universe) -> Property:
    ff = _formula(path)
    return Property.from_formula(ff.formula, U, ff.params)


def _order(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--order must be a comma separated list of naturals: {text!r}") from None


def _budget(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_NODE_BUDGET


def _print_set(s) -> None:
    print(format_set(s))


# ---------------------------------------------------------------------------
# subcommands


def cmd_fcp(args) -> int:
    A = _set(args.set, "set")
    U = _universe(args, A)
    phi = _property(args.formula, U)
    _print_set(greedy_maximal(A, phi, _order(args.order)))
    return 0


def _prefix(path: str) -> PrefixPredicate:
    ff = parse_file(_read(path), source=path, free=("m",))
    return PrefixPredicate.from_formula(ff.formula, ff.params)


def cmd_sigma1(args) -> int:
    A = _set(args.set, "set")
    res = sigma1_maximal(A, _prefix(args.formula), args.cap)
    _print_set(res.result)
    print(f"c_phi {res.c_phi}")
    return 0


def cmd_close(args) -> int:
    X = _set(args.set, "set")
    D = load_closure_operator(_read(args.op), args.universe, source=args.op)
    if not D.universe.admits(X):
        raise InputError(f"{X} leaves the operator's universe")
    _print_set(cl(X, D))
    return 0


def cmd_nclose(args) -> int:
    N = load_nd_operator(_read(args.op), args.universe, source=args.op)
    if args.set is not None:
        print("true" if is_nclosed(_set(args.set, "set"), N) else "false")
    else:
        within = _set(args.within, "within") if args.within else N.universe.all()
        for S in nclosed_family(N, within):
            _print_set(S)
    return 0


def _ce_inputs(args, nd: bool):
    A = _set(args.within, "within")
    C = _set(args.start, "start") or FinSet(0)
    load = load_nd_operator if nd else load_closure_operator
    op_text = _read(args.op)
    ff = _formula(args.formula)
    size = args.universe
    if size is None:
        probe = load(op_text, None, source=args.op)
        size = max(probe.universe.size, A.max() + 1, C.max() + 1)
    op = load(op_text, size, source=args.op)
    U = op.universe
    for s, what in ((A, "--within"), (C, "--start")):
        if not U.admits(s):
            raise InputError(f"{what} {s} leaves the universe of size {U.size}")
    phi = Property.from_formula(ff.formula, U, ff.params)
    return A, C, phi, op


def cmd_ce(args) -> int:
    A, C, phi, D = _ce_inputs(args, nd=False)
    _print_set(ce_maximal(A, C, phi, D))
    return 0


def cmd_nce(args) -> int:
    A, C, phi, N = _ce_inputs(args, nd=True)
    _print_set(nce_maximal(A, C, phi, N, _budget(args)))
    return 0


def _order_input(args):
    if (args.poset is None) == (args.semilattice is None):
        raise InputError("give exactly one of --poset and --semilattice")
    if args.poset is not None:
        return "poset", load_poset(_read(args.poset), source=args.poset)
    return "semilattice", load_semilattice(_read(args.semilattice), source=args.semilattice)


def cmd_ideal(args) -> int:
    kind, P = _order_input(args)
    I = _set(args.start, "start") or FinSet(0)
    if kind == "poset":
        _print_set(extend_to_maximal_ideal_poset(P, I, _budget(args)))
    else:
        _print_set(extend_to_maximal_ideal_semilattice(P, I))
    return 0


def cmd_eval(args) -> int:
    ff = _formula(args.formula)
    if args.index is not None:
        X = FinSet(args.index)
    else:
        X = _set(args.set, "set") or FinSet(0)
    U = _universe(args, X)
    env = environment(U)
    if args.check:
        report = check_finite_character(ff.formula, U, ff.params, env)
        print(report.describe())
    hat = bind_hat(ff.formula, env, ff.params)
    print("true" if hat(X.index) else "false")
    return 0


def cmd_gadget_fcp(args) -> int:
    f = parse_function(args.function)
    U = _universe(args, FinSet.of(v for _, v in f))
    for i, B in enumerate(range_gadget_fcp(f, U)):
        print(f"{i} {format_set(B)}")
    return 0


def cmd_gadget_op(args) -> int:
    f = parse_function(args.function)
    if args.universe is None:
        raise InputError("gadget-range-op needs --universe")
    U = Universe(args.universe)
    if args.solve:
        B = solve_range_gadget(f, U)
        k = max([v for _, v in f] + [0]) + 1
        print(f"range {format_set(range_from_gadget(B, k))}")
    else:
        sys.stdout.write(range_gadget_operator(f, U).to_text())
    return 0


def cmd_determinize(args) -> int:
    N = load_nd_operator(_read(args.op), args.universe, source=args.op)
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    sys.stdout.write(determinize(N, args.strategy, seed=seed).to_text())
    return 0


def cmd_verify(args) -> int:
    W = _set(args.witness, "witness")
    kind = args.kind
    cap = DEFAULT_ENUMERATION_CAP
    if kind == "fcp":
        A = _set(args.set, "set")
        U = _universe(args, A, W)
        checks = oracles.fcp_checks(W, A, _property(args.formula, U))
    elif kind == "sigma1":
        A = _set(args.set, "set")
        checks = oracles.sigma1_checks(W, A, _prefix(args.formula), args.cap)
    elif kind == "close":
        X = _set(args.set, "set")
        D = load_closure_operator(_read(args.op), args.universe, source=args.op)
        checks = oracles.closure_checks(W, X, D, cap)
    elif kind in ("ce", "nce"):
        A, C, phi, op = _ce_inputs(args, nd=kind == "nce")
        checks = oracles.ce_checks(W, A, C, phi, op, cap)
    elif kind == "ideal":
        which, P = _order_input(args)
        I = _set(args.start, "start") or FinSet(0)
        if which == "poset":
            checks = oracles.ideal_checks(W, I, P.size + 1, lambda h: is_poset_ideal(h, P.with_top()), P.size)
        else:
            checks = oracles.ideal_checks(W, I, P.size, lambda h: is_semilattice_ideal(h, P), P.top)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown kind {kind}")
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if oracles.all_pass(checks) else 3


# ---------------------------------------------------------------------------
# argument parsing


class _ArgumentParser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); 2 is reserved for budgets
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--universe", type=int, default=default, help="universe size u (ground set 0..u-1)")
    p.add_argument("--budget", type=int, default=default, help=f"search node budget (default {DEFAULT_NODE_BUDGET})")
    p.add_argument("--seed", type=int, default=default, help=f"seed for randomized choices (default {DEFAULT_SEED})")
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgumentParser(
        prog="maxext",
        description="Maximal subsets, closures and maximal closed extensions on finite universes.",
        parents=[_common(False)],
    )
    sub = ap.add_subparsers(dest="cmd", required=True)
    common = [_common(True)]

    def add(name, func, help):
        p = sub.add_parser(name, help=help, parents=common)
        p.set_defaults(func=func)
        return p

    p = add("fcp", cmd_fcp, "greedy maximal subset for a finite-character formula")
    p.add_argument("--set", required=True)
    p.add_argument("--formula", required=True)
    p.add_argument("--order", help="enumeration of the set, e.g. '3,1,0,2'")

    p = add("sigma1", cmd_sigma1, "maximal subset for exists m. rho(X[m])")
    p.add_argument("--set", required=True)
    p.add_argument("--formula", required=True, help="prefix formula; 'm' is the prefix length")
    p.add_argument("--cap", type=int, default=64, help="largest prefix length searched")

    p = add("close", cmd_close, "least closed superset under a deterministic operator")
    p.add_argument("--op", required=True)
    p.add_argument("--set", required=True)

    p = add("nclose", cmd_nclose, "closedness test or closed family for a nondeterministic operator")
    p.add_argument("--op", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--set")
    g.add_argument("--within")

    for name, func, help in (
        ("ce", cmd_ce, "maximal closed extension, deterministic operator"),
        ("nce", cmd_nce, "maximal closed extension, nondeterministic operator"),
    ):
        p = add(name, func, help)
        p.add_argument("--op", required=True)
        p.add_argument("--formula", required=True)
        p.add_argument("--within", required=True)
        p.add_argument("--start", default="{}")

    p = add("ideal", cmd_ideal, "extend an ideal to a maximal (proper) ideal")
    p.add_argument("--poset")
    p.add_argument("--semilattice")
    p.add_argument("--start", default="{}")

    p = add("eval", cmd_eval, "evaluate a formula on a finite set")
    p.add_argument("--formula", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--set")
    g.add_argument("--index", type=int)
    p.add_argument("--check", action="store_true", help="also check finite character on the universe")

    p = add("gadget-range-fcp", cmd_gadget_fcp, "sequential range gadget: B_i for each i")
    p.add_argument("--function", required=True, help="finite function, e.g. '0:3,1:3,2:5'")

    p = add("gadget-range-op", cmd_gadget_op, "prime-power range gadget operator")
    p.add_argument("--function", required=True)
    p.add_argument("--solve", action="store_true", help="run the maximal extension and print the recovered range")

    p = add("determinize", cmd_determinize, "choose one conclusion per nondeterministic rule")
    p.add_argument("--op", required=True)
    p.add_argument("--strategy", choices=["least", "greatest", "random"], default="least")

    p = add("verify", cmd_verify, "check a claimed answer against brute-force oracles")
    p.add_argument("--kind", required=True, choices=["fcp", "sigma1", "close", "ce", "nce", "ideal"])
    p.add_argument("--witness", required=True)
    p.add_argument("--set")
    p.add_argument("--formula")
    p.add_argument("--op")
    p.add_argument("--within")
    p.add_argument("--start", default="{}")
    p.add_argument("--poset")
    p.add_argument("--semilattice")
    p.add_argument("--cap", type=int, default=64)
    return ap


_REQUIRED_FOR_VERIFY = {
    "fcp": ("set", "formula"),
    "sigma1": ("set", "formula"),
    "close": ("set", "op"),
    "ce": ("op", "formula", "within"),
    "nce": ("op", "formula", "within"),
    "ideal": (),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "verify":
        missing = [f"--{k}" for k in _REQUIRED_FOR_VERIFY[args.kind] if getattr(args, k) is None]
        if missing:
            parser.error(f"verify --kind {args.kind} needs {', '.join(missing)}")
    try:
        return args.func(args)
    except BudgetError as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 2
    except (InputError, PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except MaxExtError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
