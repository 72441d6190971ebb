"""Symbolic point sets in N^k with exact truncation and counting.

Every expression is compiled to a disjoint union of *boxes*: tuples of
eventually periodic subsets of N, one per coordinate.  Counting a box up to
n is a product of closed forms, which is also how the counting tail is
obtained.  :func:`contains` walks the expression tree directly and serves as
the independent membership oracle.
"""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import Budget, DimensionMismatch, HeterogeneousUnion
from .seqring import CountingSequence, PeriodicSet, QuasiPolynomial


class PointSetExpr:
    """Base class; subclasses are frozen dataclasses carrying ``dim``."""

    def __mul__(self, other):
        return Product(self, other)

    def __or__(self, other):
        return Union(self, other)

    def __and__(self, other):
        return Intersect(self, other)

    def __sub__(self, other):
        return Diff(self, other)

    def __str__(self):
        return to_text(self)


def _point(p):
    p = tuple(int(c) for c in p)
    if not p:
        raise ValueError("points need at least one coordinate")
    if any(c < 0 for c in p):
        raise ValueError(f"negative coordinate in {p}")
    return p


@dataclass(frozen=True)
class Finite(PointSetExpr):
    points: tuple
    dim: int = None

    def __post_init__(self):
        pts = tuple(sorted({_point(p) for p in self.points}))
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise HeterogeneousUnion(f"finite set mixes dimensions {sorted(dims)}")
        dim = dims.pop() if dims else (self.dim or 1)
        if self.dim is not None and self.dim != dim:
            raise DimensionMismatch(f"declared dimension {self.dim} but points have {dim}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", dim)


@dataclass(frozen=True)
class Range(PointSetExpr):
    """{a, ..., b}; empty when a > b."""

    a: int
    b: int
    dim: int = field(default=1, init=False)

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("range start must be a natural")


@dataclass(frozen=True)
class AP(PointSetExpr):
    """{a + d*i : i in N}, d >= 1."""

    a: int
    d: int
    dim: int = field(default=1, init=False)

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("progression start must be a natural")
        if self.d < 1:
            raise ValueError("progression difference must be >= 1; use Finite for a point")


@dataclass(frozen=True)
class Product(PointSetExpr):
    left: PointSetExpr
    right: PointSetExpr
    dim: int = field(default=None, init=False)

    def __post_init__(self):
        object.__setattr__(self, "dim", self.left.dim + self.right.dim)


class _Boolean(PointSetExpr):
    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise HeterogeneousUnion(
                f"{type(self).__name__} of dimensions {self.left.dim} and {self.right.dim}")
        object.__setattr__(self, "dim", self.left.dim)


@dataclass(frozen=True)
class Union(_Boolean):
    left: PointSetExpr
    right: PointSetExpr
    dim: int = field(default=None, init=False)


@dataclass(frozen=True)
class Intersect(_Boolean):
    left: PointSetExpr
    right: PointSetExpr
    dim: int = field(default=None, init=False)


@dataclass(frozen=True)
class Diff(_Boolean):
    left: PointSetExpr
    right: PointSetExpr
    dim: int = field(default=None, init=False)


@dataclass(frozen=True)
class Lift(PointSetExpr):
    """{point} x inner."""

    point: tuple
    inner: PointSetExpr
    dim: int = field(default=None, init=False)

    def __post_init__(self):
        object.__setattr__(self, "point", _point(self.point))
        object.__setattr__(self, "dim", len(self.point) + self.inner.dim)


NAT = AP(0, 1)
EVENS = AP(0, 2)
ODDS = AP(1, 2)


def empty(dim=1):
    return Finite((), dim)


def dimension(expr):
    return expr.dim


def contains(expr, p):
    p = tuple(p)
    if len(p) != expr.dim:
        raise DimensionMismatch(f"point of dimension {len(p)} vs set of dimension {expr.dim}")
    return _contains(expr, p)


def _contains(e, p):
    if isinstance(e, Finite):
        return p in e.points
    if isinstance(e, Range):
        return e.a <= p[0] <= e.b
    if isinstance(e, AP):
        return p[0] >= e.a and (p[0] - e.a) % e.d == 0
    if isinstance(e, Product):
        k = e.left.dim
        return _contains(e.left, p[:k]) and _contains(e.right, p[k:])
    if isinstance(e, Union):
        return _contains(e.left, p) or _contains(e.right, p)
    if isinstance(e, Intersect):
        return _contains(e.left, p) and _contains(e.right, p)
    if isinstance(e, Diff):
        return _contains(e.left, p) and not _contains(e.right, p)
    if isinstance(e, Lift):
        k = len(e.point)
        return p[:k] == e.point and _contains(e.inner, p[k:])
    raise TypeError(f"not a point set expression: {e!r}")


# ---------------------------------------------------------------------------
# box normal form


def _singleton(c):
    return PeriodicSet.finite((c,))


def _box_empty(box):
    return any(s.is_empty() for s in box)


def _box_meet(a, b):
    return tuple(x & y for x, y in zip(a, b))


def _box_minus(a, b):
    """a \\ b as a list of pairwise disjoint boxes."""
    if _box_empty(_box_meet(a, b)):
        return [a]
    out = []
    for i in range(len(a)):
        piece = tuple(a[j] & b[j] for j in range(i)) + (a[i] - b[i],) + a[i + 1:]
        if not _box_empty(piece):
            out.append(piece)
    return out


def _minus_all(boxes, others, budget):
    for b in others:
        nxt = []
        for a in boxes:
            nxt.extend(_box_minus(a, b))
        budget.charge(len(nxt) + 1)
        boxes = nxt
    return boxes


def decompose(expr, budget=None):
    """Disjoint boxes whose union is the denotation of ``expr``."""
    budget = Budget.coerce(budget)
    return _decompose(expr, budget)


def _decompose(e, budget):
    if isinstance(e, Finite):
        budget.charge(len(e.points))
        return [tuple(_singleton(c) for c in p) for p in e.points]
    if isinstance(e, Range):
        if e.a > e.b:
            return []
        budget.charge(e.b - e.a + 1)
        return [(PeriodicSet.finite(range(e.a, e.b + 1)),)]
    if isinstance(e, AP):
        budget.charge(e.a // e.d + 1)
        s = PeriodicSet(e.d, frozenset({e.a % e.d}), frozenset(),
                        frozenset(range(e.a % e.d, e.a, e.d)))
        return [(s,)]
    if isinstance(e, Lift):
        head = tuple(_singleton(c) for c in e.point)
        return [head + b for b in _decompose(e.inner, budget)]
    left = _decompose(e.left, budget)
    right = _decompose(e.right, budget)
    if isinstance(e, Product):
        budget.charge(len(left) * len(right))
        return [a + b for a in left for b in right]
    if isinstance(e, Intersect):
        budget.charge(len(left) * len(right))
        meets = (_box_meet(a, b) for a in left for b in right)
        return [m for m in meets if not _box_empty(m)]
    if isinstance(e, Diff):
        return _minus_all(left, right, budget)
    if isinstance(e, Union):
        return left + _minus_all(right, left, budget)
    raise TypeError(f"not a point set expression: {e!r}")


@lru_cache(maxsize=4096)
def _cached_boxes(expr):
    return tuple(_decompose(expr, Budget()))


def _boxes(expr, budget):
    if budget is None:
        return _cached_boxes(expr)
    return decompose(expr, budget)


# ---------------------------------------------------------------------------


def truncate(expr, n, budget=None):
    """Points of ``expr`` with every coordinate <= n, in lexicographic order."""
    budget = Budget.coerce(budget)
    out = []
    for box in _boxes(expr, budget):
        axes = [s.elements(n) for s in box]
        for p in itertools.product(*axes):
            budget.charge()
            out.append(p)
    out.sort()
    return out


def count(expr, n, budget=None):
    """|truncate(expr, n)| computed by closed forms on the box decomposition."""
    if n < 0:
        return 0
    total = 0
    for box in _boxes(expr, budget):
        c = 1
        for s in box:
            c *= s.count_upto(n)
            if not c:
                break
        total += c
    return total


def counting_tail(expr, budget=None):
    """Quasi-polynomial equal to count(expr, n) for all n >= its start."""
    tail = QuasiPolynomial.constant(0)
    for box in _boxes(expr, budget):
        term = QuasiPolynomial.constant(1)
        for s in box:
            term = term * s.counting_tail()
        tail = tail + term
    return tail


def counting_sequence(expr, horizon, budget=None):
    """Counts for n = 0..horizon together with the exact quasi-polynomial tail."""
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    tail = counting_tail(expr, budget)
    top = max(horizon, tail.start - 1)
    values = tuple(count(expr, n, budget) for n in range(top + 1))
    return CountingSequence(values, horizon, tail)


# ---------------------------------------------------------------------------
# surface syntax printer (parser lives in asynum.parsing)


def _pt(p):
    return "(" + ",".join(map(str, p)) + ")"


def to_text(e, prec=0):
    if isinstance(e, Finite):
        if not e.points:
            return f"empty({e.dim})"
        return "finite{" + ",".join(_pt(p) for p in e.points) + "}"
    if isinstance(e, Range):
        return f"range({e.a},{e.b})"
    if isinstance(e, AP):
        return f"ap({e.a},{e.d})"
    if isinstance(e, Lift):
        return f"lift({_pt(e.point)},{to_text(e.inner)})"
    ops = {Union: ("|", 1), Diff: ("\\", 2), Intersect: ("&", 3), Product: ("*", 4)}
    sym, p = ops[type(e)]
    # left-associative: the right operand needs strictly higher precedence
    text = f"{to_text(e.left, p)}{sym}{to_text(e.right, p + 1)}"
    return f"({text})" if p < prec else text
