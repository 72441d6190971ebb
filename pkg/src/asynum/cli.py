"""Command-line front end: ``python -m asynum <command> ...``.

Exit codes: 0 success, 2 domain or input error, 3 work budget or horizon
exhausted.  Verdict commands always print the machine-readable line first;
without ``--machine`` the evidence table follows.
"""

import argparse
import os
import sys

from . import numerosity as num
from . import oracle as orc
from . import qselect as qs
from . import ramsey as rm
from . import series as ser
from .errors import AsynumError, Budget, ResourceError
from .parsing import parse_expr, parse_func, parse_nat_set, parse_series
from .pointset import count, counting_sequence
from .sampling import random_expr, random_model
from .seqring import parse_index_set

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3


class Session:
    def __init__(self, args):
        if args.horizon < 0:
            raise ValueError("--horizon must be >= 0")
        if args.budget < 1:
            raise ValueError("--budget must be >= 1")
        self.H = args.horizon
        self.limit = args.budget
        self.machine = args.machine
        self.seed = args.seed
        self.oracle_path = args.oracle
        if args.oracle and os.path.exists(args.oracle):
            self.model = orc.load_file(args.oracle)
        else:
            self.model = orc.FilterModel(name=args.oracle or "session")

    def budget(self):
        return Budget(self.limit)


def _verdict(s, v, out):
    print(v.machine_line(), file=out)
    if not s.machine:
        print(v.table(), file=out)


# ---------------------------------------------------------------------------
# command handlers; each takes (session, args, out)


def cmd_count(s, a, out):
    print(count(parse_expr(a.expr), a.n, s.budget()), file=out)


def cmd_seq(s, a, out):
    print(counting_sequence(parse_expr(a.expr), s.H, s.budget()).text(), file=out)


def cmd_cmp(s, a, out):
    _verdict(s, num.compare(parse_expr(a.x), parse_expr(a.y), s.model, s.H, s.budget()), out)


def cmd_equinum(s, a, out):
    _verdict(s, num.equinumerous(parse_expr(a.x), parse_expr(a.y), s.model, s.H, s.budget()), out)


def _arith(op):
    def run(s, a, out):
        b = s.budget()
        x = num.numerosity(parse_expr(a.x), s.H, b)
        y = num.numerosity(parse_expr(a.y), s.H, b)
        r = op(x, y, b)
        if not s.machine:
            print(f"set: {r.provenance}", file=out)
        print(r.representative.text(), file=out)
    return run


def cmd_subset_rep(s, a, out):
    r = num.build_subset_representative(parse_expr(a.x), parse_expr(a.y), s.model, s.H, s.budget())
    print(f"Z={r.Z}", file=out)
    print("checkpoints=" + ",".join(map(str, r.checkpoints)), file=out)
    if not s.machine:
        print(f"continuation: {r.continuation}", file=out)


def cmd_congruence(s, a, out):
    X, Y = parse_expr(a.x), parse_expr(a.y)
    c = num.build_u_congruence(X, Y, s.model, s.H, s.budget())
    print("W=" + ",".join(map(str, c.W)), file=out)
    for p, q in sorted(c.sigma.items()):
        print(f"{p} -> {q}", file=out)


def cmd_nu(s, a, out):
    print(f"nu={rm.nu(parse_nat_set(a.set), s.budget())}", file=out)


def cmd_rho(s, a, out):
    ok, col = rm.in_rho(rm.Family(a.level), parse_nat_set(a.set), s.budget())
    line = f"rho={'true' if ok else 'false'}"
    if col is not None:
        line += f" coloring={col.text()}"
    print(line, file=out)


def _partition(path):
    with open(path, encoding="utf-8") as fh:
        return rm.parse_partition(fh.read())


def _gamma_line(g):
    return "gamma=" + ",".join("unknown" if v is None else str(v) for v in g)


def cmd_gamma(s, a, out):
    print(_gamma_line(rm.gamma(parse_expr(a.expr), _partition(a.partition), s.budget())), file=out)


def cmd_large(s, a, out):
    r = rm.is_large_at_horizon(parse_expr(a.expr), _partition(a.partition), s.model,
                               a.k, s.H, s.budget(), a.tail)
    print(_gamma_line(r.gammas), file=out)
    print(f"set={r.indices.descriptor()}", file=out)
    print(f"answer={r.verdict} ({r.label})", file=out)
    if r.unknown:
        print("unknown=" + ",".join(map(str, r.unknown)), file=out)


def cmd_reorder(s, a, out):
    f = parse_func(a.func, s.budget())
    if a.interval:
        r = qs.interval_to_one_reduce(f, s.model, s.H)
        print("S=" + ",".join(map(str, r.witness.elements(s.H))), file=out)
        print("g=" + ",".join(map(str, r.g.values(s.H))), file=out)
    else:
        S = qs.monotone_restriction(f, s.model, s.H)
        print("S=" + ",".join(map(str, S.elements(s.H))), file=out)


def cmd_tilde(s, a, out):
    b = s.budget()
    print(qs.tilde(parse_func(a.func, b), a.n, b), file=out)


def cmd_ackermann(s, a, out):
    print(qs.ackermann(a.m, a.n, s.budget()), file=out)


def cmd_rapid(s, a, out):
    U = qs.rapid_set(parse_func(a.func, s.budget()), s.model, s.H)
    print("U=" + ",".join(map(str, U.elements(s.H))), file=out)


def cmd_gplus(s, a, out):
    r = qs.g_plus_and_enumerator(parse_func(a.func, s.budget()), s.H)
    print("gplus=" + ",".join("open" if v is None else str(v) for v in r.gplus), file=out)
    print("enum=" + ",".join(map(str, r.enumerator)), file=out)


def cmd_phi(s, a, out):
    print(ser.phi(parse_series(a.series), a.n, s.budget()), file=out)


def _coeffs(text):
    """``(4):3 (2,3):-1`` -> {(4,): 3, (2, 3): -1}"""
    out = {}
    for tok in text.split():
        pt, _, val = tok.rpartition(":")
        out[tuple(int(c) for c in pt.strip("()").split(","))] = int(val)
    return out


def cmd_decompose(s, a, out):
    d = ser.decompose_bounded(_coeffs(a.coeffs), a.bound, a.dim)
    for (i, k), X in sorted(d.X.items()):
        print(f"X[{i},{k}]={X}", file=out)
    for (i, k), Y in sorted(d.Y.items()):
        print(f"Y[{i},{k}]={Y}", file=out)
    if d.is_empty():
        print("empty decomposition", file=out)


def cmd_pos2char(s, a, out):
    r = ser.positive_to_characteristic(parse_series(a.series), a.bound, a.dim, s.H, s.budget())
    print(f"X={r.X}", file=out)
    print(f"k={r.k} n0={r.n0}", file=out)


def cmd_oracle(s, a, out):
    model = s.model
    if a.action == "commit":
        model = orc.commit(model, parse_index_set(a.arg))
        if s.oracle_path:
            orc.save_file(model, s.oracle_path)
        print(orc.dumps(model), end="", file=out)
    elif a.action == "query":
        print(orc.query(model, parse_index_set(a.arg)), file=out)
    elif a.action == "list":
        print(orc.dumps(model), end="", file=out)
    elif a.action == "save":
        orc.save_file(model, _need(a.arg))
        print(f"saved {len(model)} commitment(s) to {a.arg}", file=out)
    elif a.action == "load":
        print(orc.dumps(orc.load_file(_need(a.arg))), end="", file=out)


def _need(arg):
    if not arg:
        raise ValueError("this oracle action needs a path")
    return arg


def cmd_axiom_check(s, a, out):
    b = s.budget()
    seed = 0 if s.seed is None else s.seed
    model = s.model if not a.random_model else random_model(seed + 1)
    samples = [(random_expr(f"{seed}-{i}-x", a.dim), random_expr(f"{seed}-{i}-y", a.dim))
               for i in range(a.samples)]
    if a.axiom == "E3":
        samples = [(x, (i % 5,)) for i, (x, _) in enumerate(samples)]
    rep = num.axiom_check(a.axiom, samples, model, s.H, b)
    c = rep.counts()
    print(f"axiom={a.axiom} pass={c['pass']} fail={c['fail']} vacuous={c['vacuous']}", file=out)
    if not s.machine:
        for e in rep.entries:
            if e.status == "fail":
                print(f"  FAIL {' ; '.join(map(str, e.sample))}: {e.detail}", file=out)
    return EXIT_OK if rep.ok else EXIT_DOMAIN


# ---------------------------------------------------------------------------


def _flags(suppress):
    # subcommands repeat the global flags; their defaults are suppressed so
    # a flag given before the subcommand is not overwritten
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--horizon", type=int, default=d(64), help="horizon H (default 64)")
    common.add_argument("--budget", type=int, default=d(10**7), help="work budget in elementary steps")
    common.add_argument("--oracle", default=d(None), help="oracle file of commitments")
    common.add_argument("--machine", action="store_true", default=d(False),
                        help="machine-readable output only")
    common.add_argument("--seed", type=int, default=d(None), help="seed for randomized commands")
    return common


def build_parser():
    common = _flags(True)
    p = argparse.ArgumentParser(prog="asynum", parents=[_flags(False)],
                                description="Counting, numerosity verdicts and witnesses for point sets in N^k.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help, *args):
        sp = sub.add_parser(name, parents=[common], help=help)
        for argspec in args:
            flags, kw = argspec if isinstance(argspec, tuple) else ((argspec,), {})
            sp.add_argument(*flags, **kw)
        sp.set_defaults(fn=fn)
        return sp

    intarg = lambda name: ((name,), {"type": int})
    add("count", cmd_count, "|X_n|", "expr", intarg("n"))
    add("seq", cmd_seq, "counting sequence up to the horizon", "expr")
    add("cmp", cmd_cmp, "order verdict", "x", "y")
    add("equinum", cmd_equinum, "equinumerosity verdict", "x", "y")
    add("add", _arith(num.num_add), "numerosity of the disjoint sum", "x", "y")
    add("mul", _arith(num.num_mul), "numerosity of the product", "x", "y")
    add("subset-rep", cmd_subset_rep, "subset Z of Y matching X's counts", "x", "y")
    add("congruence", cmd_congruence, "blockwise bijection on the certificate", "x", "y")
    add("nu", cmd_nu, "Ramsey norm of a finite set", "set")
    add("rho", cmd_rho, "membership in rho(rho^level L)", "set",
        (("--level",), {"type": int, "default": 0}))
    add("gamma", cmd_gamma, "nu of X on each partition interval", "expr", "partition")
    add("large", cmd_large, "largeness index set at the horizon", "expr", "partition",
        (("--k",), {"type": int, "default": 0}),
        (("--tail",), {"choices": ("unknown", "finite", "cofinite"), "default": "unknown"}))
    add("reorder", cmd_reorder, "monotone (or interval-to-one) reduction", "func",
        (("--interval",), {"action": "store_true"}))
    add("tilde", cmd_tilde, "f iterated f(n) times", "func", intarg("n"))
    add("ackermann", cmd_ackermann, "iterated-composition Ackermann variant", intarg("m"), intarg("n"))
    add("rapid", cmd_rapid, "greedy u_{n+1} > f(u_n)", "func")
    add("gplus", cmd_gplus, "g+ and its range enumerator", "func")
    add("phi", cmd_phi, "evaluate a series at n", "series", intarg("n"))
    add("decompose", cmd_decompose, "level-set decomposition of coefficients", "coeffs",
        (("--bound",), {"type": int, "required": True}), (("--dim",), {"type": int}))
    add("pos2char", cmd_pos2char, "positive series to a characteristic one", "series",
        (("--bound",), {"type": int, "required": True}), (("--dim",), {"type": int, "required": True}))
    add("oracle", cmd_oracle, "commit/query/list/save/load",
        (("action",), {"choices": ("commit", "query", "list", "save", "load")}),
        (("arg",), {"nargs": "?"}))
    add("axiom-check", cmd_axiom_check, "check an axiom on random samples",
        (("axiom",), {"choices": ("E0", "E1", "E2", "E3", "E4")}),
        (("--samples",), {"type": int, "default": 20}), (("--dim",), {"type": int, "default": 1}),
        (("--random-model",), {"action": "store_true"}))
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        session = Session(args)
        code = args.fn(session, args, out)
        return EXIT_OK if code is None else code
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (AsynumError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
