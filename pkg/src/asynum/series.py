"""Integer combinations of characteristic series and their evaluation.

A series is ``a + sum(c_i * S[X_i])`` with S[X] the characteristic series
of a point set X.  Evaluating at the first n + 1 indeterminates set to 1
turns S[X] into |X_n|, so :func:`phi` is a ring homomorphism into integer
sequences.  Products are kept as ordered ``Product`` nodes, so X*Y and Y*X
stay distinct terms even though they evaluate identically.
"""

from dataclasses import dataclass

from .errors import BoundExceeded, DimensionMismatch, HorizonTooSmall
from .numerosity import equinumerous
from .oracle import EMPTY_MODEL
from .pointset import Finite, Lift, Product, Union, count, to_text


@dataclass(frozen=True)
class SeriesExpr:
    constant: int = 0
    terms: tuple = ()  # ((coefficient, PointSetExpr), ...), no zero coefficients

    def __post_init__(self):
        merged = {}
        for c, X in self.terms:
            merged[X] = merged.get(X, 0) + int(c)
        terms = tuple((c, X) for X, c in merged.items() if c)
        object.__setattr__(self, "constant", int(self.constant))
        object.__setattr__(self, "terms", terms)

    def __add__(self, other):
        return add_series(self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return SeriesExpr(-self.constant, tuple((-c, X) for c, X in self.terms))

    def __sub__(self, other):
        return add_series(self, -_lift(other))

    def __rsub__(self, other):
        return add_series(_lift(other), -self)

    def __mul__(self, other):
        return mul_series(self, _lift(other))

    def __rmul__(self, other):
        return mul_series(_lift(other), self)

    def is_zero(self):
        return not self.constant and not self.terms

    def text(self):
        parts = [str(self.constant)] if self.constant or not self.terms else []
        for c, X in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"S[{to_text(X)}]" if mag == 1 else f"{mag}*S[{to_text(X)}]"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.text()


def _lift(x):
    return x if isinstance(x, SeriesExpr) else SeriesExpr(int(x))


ZERO = SeriesExpr()
ONE = SeriesExpr(1)


def series_of_set(X):
    if isinstance(X, Finite) and not X.points:
        return ZERO
    return SeriesExpr(0, ((1, X),))


def add_series(S, T):
    return SeriesExpr(S.constant + T.constant, S.terms + T.terms)


def mul_series(S, T):
    terms = [(S.constant * d, Y) for d, Y in T.terms]
    terms += [(c * T.constant, X) for c, X in S.terms]
    terms += [(c * d, Product(X, Y)) for c, X in S.terms for d, Y in T.terms]
    return SeriesExpr(S.constant * T.constant, tuple(terms))


def phi(S, n, budget=None):
    return S.constant + sum(c * count(X, n, budget) for c, X in S.terms)


def phi_sequence(S, H, budget=None):
    return [phi(S, n, budget) for n in range(H + 1)]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundedDecomposition:
    constant: int
    B: int
    X: dict  # (i, k) -> Finite {x in N^k : a_x >= i}, nonempty entries only
    Y: dict  # (i, k) -> Finite {x in N^k : a_x <= -i}

    def coefficient(self, x):
        k = len(x)
        return (sum(1 for (i, kk), s in self.X.items() if kk == k and x in s.points)
                - sum(1 for (i, kk), s in self.Y.items() if kk == k and x in s.points))

    def to_series(self):
        out = SeriesExpr(self.constant)
        for s in self.X.values():
            out = out + series_of_set(s)
        for s in self.Y.values():
            out = out - series_of_set(s)
        return out

    def is_empty(self):
        return not self.X and not self.Y


def decompose_bounded(values, B, d=None, constant=0):
    """Level sets of a finitely supported coefficient map bounded by B."""
    by_dim = {}
    for x, a in values.items():
        x = tuple(x)
        if abs(a) > B:
            raise BoundExceeded(f"coefficient {a} at {x} exceeds {B}")
        if d is not None and len(x) > d:
            raise DimensionMismatch(f"point {x} has dimension above {d}")
        if a:
            by_dim.setdefault(len(x), {})[x] = a
    X, Y = {}, {}
    for k, coeffs in sorted(by_dim.items()):
        for i in range(1, B + 1):
            pos = [x for x, a in coeffs.items() if a >= i]
            neg = [x for x, a in coeffs.items() if a <= -i]
            if pos:
                X[(i, k)] = Finite(tuple(pos), k)
            if neg:
                Y[(i, k)] = Finite(tuple(neg), k)
    dec = BoundedDecomposition(constant, B, X, Y)
    for x, a in values.items():
        if dec.coefficient(tuple(x)) != a:
            raise AssertionError(f"reconstruction failed at {x}")
    return dec


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Characteristic:
    X: object
    k: int
    n0: int
    tags: tuple  # (tag, term index or None for the constant)


def _prefix_code(lengths):
    """Canonical prefix-free binary words of the given lengths (Kraft holds)."""
    order = sorted(range(len(lengths)), key=lambda i: lengths[i])
    words = [None] * len(lengths)
    nxt, cur = 0, 0
    for i in order:
        nxt <<= lengths[i] - cur
        cur = lengths[i]
        if nxt >= 1 << cur:
            raise AssertionError("Kraft inequality violated")
        words[i] = tuple(int(b) for b in format(nxt, f"0{cur}b")) if cur else ()
        nxt += 1
    return words


def positive_to_characteristic(P, B, d, H=64, budget=None):
    """A point set X with Phi(S[X]) = Phi(P) from some n0 on.

    Each of the c copies of a term S[X_i] becomes lift(t, X_i) for a distinct
    {0,1}-tag t, and the constant a becomes a points of {0,1}^k.  Tags form a
    prefix-free code, so the pieces are disjoint; since tag coordinates are
    at most 1, every piece counts like its source for n >= 1.
    """
    if P.constant < 0 or P.constant > B:
        raise BoundExceeded(f"constant {P.constant} outside 0..{B}")
    for c, X in P.terms:
        if not 0 < c <= B:
            raise BoundExceeded(f"coefficient {c} outside 1..{B}")
        if X.dim > d:
            raise DimensionMismatch(f"term of dimension {X.dim} exceeds {d}")
    if H < 1:
        raise HorizonTooSmall("agreement starts at n = 1 at the latest")
    need = P.constant + sum(c * 2 ** X.dim for c, X in P.terms)
    k = 1
    while not (2 ** k > B * 2 ** d and 2 ** k >= need):
        k += 1
    owners, lengths = [], []
    for idx, (c, X) in enumerate(P.terms):
        for _ in range(c):
            owners.append(idx)
            lengths.append(k - X.dim)
    for _ in range(P.constant):
        owners.append(None)
        lengths.append(k)
    words = _prefix_code(lengths)
    pieces, points = [], []
    for w, owner in zip(words, owners):
        if owner is None:
            points.append(w)
        else:
            X = P.terms[owner][1]
            pieces.append(Lift(w, X) if w else X)
    if points:
        pieces.append(Finite(tuple(points), k))
    if not pieces:
        pieces.append(Finite((), k))
    out = pieces[0]
    for p in pieces[1:]:
        out = Union(out, p)
    S = series_of_set(out)
    agree = [phi(S, n, budget) == phi(P, n, budget) for n in range(H + 1)]
    n0 = H + 1
    while n0 > 0 and agree[n0 - 1]:
        n0 -= 1
    if n0 > 1:
        raise AssertionError(f"characteristic form disagrees at n = {n0 - 1}")
    return Characteristic(out, k, n0, tuple(zip(words, owners)))


def ideal_membership_via_oracle(X, Y, model=EMPTY_MODEL, H=64, budget=None):
    """Whether S[X] - S[Y] lies in the gauge ideal: the equinumerosity verdict."""
    return equinumerous(X, Y, model, H, budget)
