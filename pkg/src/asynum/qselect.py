"""Horizon-bounded witness searches for quasi-selectivity arguments.

Every "there is a set U in the ultrafilter" statement becomes a
deterministic search inside the strongest certificate of a
:class:`~asynum.oracle.FilterModel` (the intersection of its commitments),
cut off at a horizon H.  Results are finite witnesses, labelled as such;
they are never claimed to be ultrafilter members.
"""

import bisect
from dataclasses import dataclass

from .errors import (Budget, NoWitnessWithinHorizon, NotIntervalToOne,
                     NotNondecreasing, OutOfDomain, HorizonTooSmall)
from .oracle import EMPTY_MODEL
from .seqring import ExplicitSet


class FuncSpec:
    """A function N -> N with a printable label.

    Wraps a callable; ``table`` specs are only defined on 0..len-1.
    """

    def __init__(self, fn, label="f"):
        self.fn = fn
        self.label = label

    @classmethod
    def table(cls, values, label=None):
        values = tuple(int(v) for v in values)

        def lookup(n):
            if not 0 <= n < len(values):
                raise OutOfDomain(f"table defined on 0..{len(values) - 1}, got {n}")
            return values[n]

        return cls(lookup, label or "table[" + ",".join(map(str, values)) + "]")

    def __call__(self, n):
        v = self.fn(n)
        if v < 0:
            raise ValueError(f"{self.label}({n}) = {v} is not a natural")
        return v

    def values(self, H):
        return [self(n) for n in range(H + 1)]

    def __repr__(self):
        return f"FuncSpec({self.label})"


def _candidates(where, H):
    """Elements up to H of a model's certificate, or of an index set."""
    if hasattr(where, "core"):
        where = where.core()
    return where.elements(H)


def _witness(H, members):
    return ExplicitSet(H, frozenset(members), "unknown")


# ---------------------------------------------------------------------------


def monotone_restriction(f, model=EMPTY_MODEL, H=64):
    """Longest S inside the certificate on which f is nondecreasing.

    Patience sorting over the candidates in increasing order; ties keep the
    earliest-found chain, so the result is deterministic.  ``model`` may also
    be a plain index set to search inside.
    """
    cands = _candidates(model, H)
    if not cands:
        raise NoWitnessWithinHorizon(f"certificate has no elements up to {H}")
    vals = [f(n) for n in cands]
    tops, top_idx, back = [], [], [None] * len(cands)
    for i, v in enumerate(vals):
        j = bisect.bisect_right(tops, v)
        back[i] = top_idx[j - 1] if j else None
        if j == len(tops):
            tops.append(v)
            top_idx.append(i)
        else:
            tops[j] = v
            top_idx[j] = i
    chain, i = [], top_idx[-1]
    while i is not None:
        chain.append(cands[i])
        i = back[i]
    return _witness(H, chain)


def is_interval_to_one(values):
    seen, prev = set(), object()
    for v in values:
        if v != prev:
            if v in seen:
                return False
            seen.add(v)
            prev = v
    return True


@dataclass(frozen=True)
class Reduction:
    g: FuncSpec
    witness: ExplicitSet
    least_rep: tuple


def interval_to_one_reduce(f, model=EMPTY_MODEL, H=64):
    """Interval-to-one g on 0..H agreeing with f on a monotone witness.

    Each n is mapped to the least m with f(m) = f(n); on the witness set
    this representative map is nondecreasing, so the fibres of f restricted
    to the witness are intervals.
    """
    vals = [f(n) for n in range(H + 1)]
    first = {}
    for n, v in enumerate(vals):
        first.setdefault(v, n)
    rep = tuple(first[v] for v in vals)
    S = monotone_restriction(lambda n: rep[n], model, H)
    members = S.elements(H)
    g_vals, j = [], 0
    for n in range(H + 1):
        while j + 1 < len(members) and members[j + 1] <= n:
            j += 1
        g_vals.append(vals[members[j]])
    if not is_interval_to_one(g_vals) or any(g_vals[s] != vals[s] for s in members):
        raise AssertionError("interval-to-one reduction failed its own check")
    return Reduction(FuncSpec.table(g_vals, "g"), S, rep)


@dataclass(frozen=True)
class FUCheck:
    ok: bool
    violation: tuple = None  # (index n, u_n, u_{n+1})


def check_fu_condition(f, U, H):
    """f(u_n) < u_{n+1} - u_n for consecutive elements of U up to H."""
    prev = None
    for n in range(H + 1):
        v = f(n)
        if prev is not None and v < prev:
            raise NotNondecreasing(f"f({n}) = {v} < f({n - 1}) = {prev}")
        prev = v
    elems = sorted(x for x in (U.elements(H) if hasattr(U, "elements") else U) if x <= H)
    for i in range(len(elems) - 1):
        u, w = elems[i], elems[i + 1]
        if not f(u) < w - u:
            return FUCheck(False, (i, u, w))
    return FUCheck(True)


def doubling_set(model=EMPTY_MODEL, H=100):
    """Greedy u_{n+1} > 2 u_n inside the certificate, starting at its least positive element."""
    out = []
    for n in _candidates(model, H):
        if n == 0:
            continue
        if not out or n > 2 * out[-1]:
            out.append(n)
    if len(out) < 2:
        raise NoWitnessWithinHorizon(f"fewer than two doubling elements up to {H}")
    return _witness(H, out)


def rapid_set(f, model=EMPTY_MODEL, H=100):
    """Greedy u_{n+1} > f(u_n), starting at the least certificate element."""
    out = []
    for n in _candidates(model, H):
        if not out or n > max(out[-1], f(out[-1])):
            out.append(n)
    if len(out) < 2:
        raise NoWitnessWithinHorizon(f"fewer than two rapid elements up to {H}")
    return _witness(H, out)


# ---------------------------------------------------------------------------
# the three minimal-step functions; each is a row of isosceles triangles


def _f0_k(m):
    # 2^k <= m <= 2^(k+1), k >= 1
    ks = [k for k in (m.bit_length() - 2, m.bit_length() - 1) if k >= 1 and 2**k <= m <= 2 ** (k + 1)]
    return ks, lambda k: 2 ** (k - 1) - abs(3 * 2 ** (k - 1) - m)


def _f1_k(m):
    # 3*2^(2k) <= m <= 3*2^(2k+2), k >= 1
    ks = [k for k in range(1, m.bit_length() + 1) if 3 * 4**k <= m <= 3 * 4 ** (k + 1)]
    return ks, lambda k: 9 * 2 ** (2 * k - 1) - abs(15 * 2 ** (2 * k - 1) - m)


def _f2_k(m):
    # 3*2^(2k-1) <= m <= 3*2^(2k+1), k >= 1
    ks = [k for k in range(1, m.bit_length() + 1) if 3 * 2 ** (2 * k - 1) <= m <= 3 * 2 ** (2 * k + 1)]
    return ks, lambda k: 9 * 2 ** (2 * k - 2) - abs(15 * 2 ** (2 * k - 2) - m)


DOMAIN_START = {0: 2, 1: 12, 2: 6}


def eval_f012(which, m):
    """Exact value of f0, f1 or f2 at m; shared endpoints must agree."""
    try:
        ks, formula = {0: _f0_k, 1: _f1_k, 2: _f2_k}[which](m)
    except KeyError:
        raise ValueError(f"which must be 0, 1 or 2, got {which}") from None
    if not ks:
        raise OutOfDomain(f"f{which} is defined for m >= {DOMAIN_START[which]}, got {m}")
    vals = {formula(k) for k in ks}
    if len(vals) != 1:
        raise ArithmeticError(f"f{which}({m}) ambiguous at interval endpoint: {sorted(vals)}")
    return vals.pop()


def has_minimal_steps(f, lo, hi):
    return all(abs(f(m + 1) - f(m)) <= 1 for m in range(lo, hi))


# ---------------------------------------------------------------------------


def tilde(f, n, budget=None):
    """f iterated f(n) times starting at n (zero iterations give n).

    Each step is charged by the size of its value, so explosive f runs out
    of budget instead of memory.
    """
    budget = Budget.coerce(budget)
    x = n
    for _ in range(f(n)):
        budget.charge(1 + x.bit_length() // 64)
        x = f(x)
    return x


def ackermann(m, n, budget=None):
    """f_0(n) = n + 1 and f_{m+1}(n) = f_m applied n + 1 times to 1.

    This is the iterated-composition variant, not the Ackermann-Peter
    function: f_1(n) = n + 2, f_2(n) = 2n + 3, f_3(n) = 2^(n+3) - 3.
    """
    budget = Budget.coerce(budget)
    return _ack(m, n, budget)


def _ack(m, n, budget):
    budget.charge()
    if m == 0:
        return n + 1
    if m == 1:
        return n + 2
    if m == 2:
        return 2 * n + 3
    x = 1
    for _ in range(n + 1):
        x = _ack(m - 1, x, budget)
    return x


def ackermann_unrolled(m, n, budget=None):
    """Same recursion with no closed-form shortcuts (reference path)."""
    budget = Budget.coerce(budget)

    def go(m, n):
        budget.charge()
        if m == 0:
            return n + 1
        x = 1
        for _ in range(n + 1):
            x = go(m - 1, x)
        return x

    return go(m, n)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GPlus:
    gplus: tuple      # g+(n) on 0..H; None on the class still open at H
    enumerator: tuple  # increasing enumeration of the range of g+
    open_from: int    # first n of the incomplete last class (H + 1 if none)


def g_plus_and_enumerator(g, H):
    vals = [g(n) for n in range(H + 1)]
    if not is_interval_to_one(vals):
        raise NotIntervalToOne("some fibre of g is not an interval on 0..H")
    last_of = {}
    for n, v in enumerate(vals):
        last_of[v] = n
    open_value = vals[H]
    open_from = vals.index(open_value)
    gplus = tuple(None if v == open_value else last_of[v] for v in vals)
    enum = tuple(sorted({x for x in gplus if x is not None}))
    return GPlus(gplus, enum, open_from)


@dataclass(frozen=True)
class Domination:
    V: tuple
    f_omega: tuple     # f_omega(m) for m = 0..len-1
    thresholds: tuple  # k_i per input function, None if not reached


def dominating_function(witnessed, H, V=None):
    """f_omega(m) = min{v' - v : v < v' in V, v >= m}, V inside every U_i."""
    if V is None:
        sets = [set(U.elements(H) if hasattr(U, "elements") else U) for _, U in witnessed]
        V = set(range(H + 1))
        for s in sets:
            V &= s
    V = sorted(v for v in V if v <= H)
    if len(V) < 2:
        raise HorizonTooSmall("V needs at least two elements within the horizon")
    gaps = [V[i + 1] - V[i] for i in range(len(V) - 1)]
    # suffix minima over consecutive gaps starting at or after m
    f_omega = []
    for m in range(V[-2] + 1):
        f_omega.append(min(gaps[i] for i in range(len(gaps)) if V[i] >= m))
    mmax = len(f_omega) - 1
    thresholds = []
    for f, _ in witnessed:
        k = mmax
        while k >= 0 and f_omega[k] > f(k):
            k -= 1
        thresholds.append(None if k == mmax else k)
    return Domination(tuple(V), tuple(f_omega), tuple(thresholds))
