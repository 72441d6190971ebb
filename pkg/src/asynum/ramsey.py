"""Finite Ramsey combinatorics: the family L, the operator rho and the norm nu.

L is the family of finite A with min(A) + 2 < |A|.  A set A is in rho(X)
when every 2-colouring of its pairs has a monochromatic subset in X, and
nu(A) is the least n with A outside rho^n(L).  Membership is decided by
exhaustive colouring search: a naive enumerator (the reference) and an
edge-by-edge search that backtracks as soon as some target set is
monochromatic.  Both return the lexicographically first counterexample.
"""

import itertools
from dataclasses import dataclass

from .errors import Budget, EmptySet, ResourceError
from .oracle import EMPTY_MODEL, query
from .seqring import ExplicitSet


def _norm(A):
    A = tuple(sorted(set(int(a) for a in A)))
    if any(a < 0 for a in A):
        raise ValueError("elements must be naturals")
    return A


def in_l(A):
    A = _norm(A)
    if not A:
        raise EmptySet("L is a family of nonempty sets")
    return A[0] + 2 < len(A)


@dataclass(frozen=True)
class Family:
    """rho^k(L); ``Family(0)`` is L itself."""

    k: int = 0

    def rho(self):
        return Family(self.k + 1)

    def __str__(self):
        return "L" if self.k == 0 else f"rho^{self.k}(L)"


L = Family(0)


@dataclass(frozen=True)
class Coloring:
    elements: tuple
    colors: tuple  # one colour per pair, pairs in lexicographic order

    @property
    def edges(self):
        return tuple(itertools.combinations(self.elements, 2))

    def color(self, a, b):
        return dict(zip(self.edges, self.colors))[tuple(sorted((a, b)))]

    def text(self):
        return " ".join(f"{a}-{b}:{c}" for (a, b), c in zip(self.edges, self.colors))


def parse_coloring(text):
    pairs, colors = [], []
    for tok in text.split():
        edge, _, c = tok.partition(":")
        a, _, b = edge.partition("-")
        pairs.append((int(a), int(b)))
        colors.append(int(c))
    elements = _norm(x for p in pairs for x in p)
    order = {e: i for i, e in enumerate(itertools.combinations(elements, 2))}
    if sorted(order[p] for p in pairs) != list(range(len(order))):
        raise ValueError("colouring must list every pair exactly once")
    out = [0] * len(order)
    for p, c in zip(pairs, colors):
        out[order[p]] = c
    return Coloring(elements, tuple(out))


# ---------------------------------------------------------------------------
# search


class _Engine:
    """nu with memoisation per subset, for one search method."""

    def __init__(self, method):
        if method not in ("naive", "pruned"):
            raise ValueError(f"unknown method {method!r}")
        self.method = method
        self.nu_cache = {}

    def nu(self, A, budget):
        A = _norm(A)
        if A in self.nu_cache:
            return self.nu_cache[A]
        n = 0
        # reaching level n means A is already known to lie in rho^(n-1) L
        while len(A) >= 3 + n and self.member(n, A, budget, True)[0]:
            n += 1
        self.nu_cache[A] = n
        return n

    def member(self, k, A, budget, self_below=None):
        """(A in rho^k L, counterexample colouring or None).

        ``self_below`` says whether A itself lies in rho^(k-1) L, if known.
        """
        if k == 0:
            return bool(A) and in_l(A), None
        if self_below is None:
            self_below = k - 1 == 0 and bool(A) and in_l(A) or k > 1 and self.nu(A, budget) > k - 1
        targets = self._targets(k - 1, A, budget, self_below)
        search = self._naive if self.method == "naive" else self._pruned
        bad = search(A, targets, budget)
        if bad is None:
            return True, None
        col = Coloring(A, bad)
        if _has_mono(col, targets):
            raise AssertionError("counterexample colouring has a homogeneous target")
        return False, col

    def _targets(self, k, A, budget, self_in):
        """Minimal subsets of A lying in rho^k L (the family is upward closed)."""
        found = []
        for size in range(3 + k, len(A) + 1):
            for B in itertools.combinations(A, size):
                if any(set(t) <= set(B) for t in found):
                    continue
                if (self_in if B == A else self.nu(B, budget) > k):
                    found.append(B)
        return found

    def _naive(self, A, targets, budget):
        edges = list(itertools.combinations(A, 2))
        idx = {e: i for i, e in enumerate(edges)}
        tsets = [[idx[e] for e in itertools.combinations(t, 2)] for t in targets]
        if not edges:
            return ()
        # colour swap symmetry: fix the first edge to colour 0
        for rest in itertools.product((0, 1), repeat=len(edges) - 1):
            budget.charge()
            col = (0,) + rest
            if not any(len({col[i] for i in t}) == 1 for t in tsets):
                return col
        return None

    def _pruned(self, A, targets, budget):
        edges = list(itertools.combinations(A, 2))
        idx = {e: i for i, e in enumerate(edges)}
        closing = [[] for _ in edges]  # targets completed by each edge
        for t in targets:
            es = [idx[e] for e in itertools.combinations(t, 2)]
            closing[max(es)].append(es)
        col = [0] * len(edges)

        def go(i):
            if i == len(edges):
                return True
            for c in ((0,) if i == 0 else (0, 1)):
                budget.charge()
                col[i] = c
                if any(all(col[j] == c for j in es) for es in closing[i]):
                    continue
                if go(i + 1):
                    return True
            return False

        return tuple(col) if go(0) else None


def _has_mono(col, targets):
    cmap = dict(zip(col.edges, col.colors))
    return any(len({cmap[e] for e in itertools.combinations(t, 2)}) == 1 for t in targets)


_ENGINES = {m: _Engine(m) for m in ("naive", "pruned")}


def nu(A, budget=None, method="pruned"):
    """Least n with A not in rho^n L."""
    return _ENGINES[method].nu(A, Budget.coerce(budget))


def in_family(X, A, budget=None, method="pruned"):
    A = _norm(A)
    if X.k == 0:
        return bool(A) and in_l(A)
    return nu(A, budget, method) > X.k


def in_rho(X, A, budget=None, method="pruned"):
    """(A in rho(X), counterexample colouring when it is not)."""
    A = _norm(A)
    return _ENGINES[method].member(X.k + 1, A, Budget.coerce(budget))


# ---------------------------------------------------------------------------
# richness and growth


def initial_segment_in(X, S, budget=None):
    """Least n such that the first n elements of S form a set in X."""
    budget = Budget.coerce(budget)
    it = S.iter_elements() if hasattr(S, "iter_elements") else iter(sorted(S))
    prefix = []
    for x in it:
        budget.charge()
        prefix.append(x)
        if in_family(X, prefix, budget):
            return len(prefix)
    raise ValueError("S ran out before an initial segment entered the family")


def parse_partition(lines):
    """``interval lo hi`` lines describing consecutive intervals from 0."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    out, nxt = [], 0
    for i, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 3 or line[0] != "interval":
            raise ValueError(f"line {i}: expected 'interval <lo> <hi>'")
        lo, hi = int(line[1]), int(line[2])
        if lo != nxt or hi < lo:
            raise ValueError(f"line {i}: interval [{lo},{hi}] does not continue at {nxt}")
        out.append((lo, hi))
        nxt = hi + 1
    return out


def format_partition(parts):
    return "".join(f"interval {lo} {hi}\n" for lo, hi in parts)


def _section(X, lo, hi, budget):
    if hasattr(X, "dim"):
        from .pointset import truncate
        if X.dim != 1:
            raise ValueError("gamma needs a one-dimensional set")
        return [p[0] for p in truncate(X, hi, budget) if p[0] >= lo]
    return [n for n in range(lo, hi + 1) if n in X]


def gamma(X, partition, budget=None):
    """nu(X & I_n) per interval; None where the per-entry budget runs out."""
    limit = Budget.coerce(budget).limit
    out = []
    for lo, hi in partition:
        try:
            b = Budget(limit, "gamma entry")
            out.append(nu(_section(X, lo, hi, b), b))
        except ResourceError:
            out.append(None)
    return out


@dataclass(frozen=True)
class LargenessReport:
    k: int
    H: int
    gammas: tuple
    indices: ExplicitSet
    verdict: object
    unknown: tuple
    label: str = "horizon-bounded"


def _exceeds(g, n, k):
    # g > sqrt(n) + k, exactly
    return g - k > 0 and (g - k) ** 2 > n


def is_large_at_horizon(X, partition, model=EMPTY_MODEL, k=0, H=None, budget=None, tail="unknown"):
    """{n <= H : gamma(X)(n) > sqrt(n) + k} and the model's answer for it.

    Beyond the computed entries nothing is known, so the index set's tail is
    ``tail`` (default unknown); an empty X has gamma identically 0, which
    pins the tail to finite.
    """
    parts = list(partition)
    H = len(parts) - 1 if H is None else min(H, len(parts) - 1)
    g = gamma(X, parts[:H + 1], budget)
    members = [n for n, v in enumerate(g) if v is not None and _exceeds(v, n, k)]
    empty = hasattr(X, "dim") and X.dim == 1 and _is_empty_expr(X)
    if empty or (not hasattr(X, "dim") and not X):
        tail = "finite"
    S = ExplicitSet(H, frozenset(members), tail)
    unknown = tuple(n for n, v in enumerate(g) if v is None)
    return LargenessReport(k, H, tuple(g), S, query(model, S), unknown)


def _is_empty_expr(X):
    from .pointset import decompose
    return not decompose(X)
