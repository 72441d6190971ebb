"""Exact integer sequences with quasi-polynomial tails, and index sets over N.

A :class:`CountingSequence` stores exact values up to a horizon and, when
known, a :class:`QuasiPolynomial` that reproduces every later value.  Index
sets come in two flavours: :class:`PeriodicSet` decides membership for every
n, :class:`ExplicitSet` only up to its horizon plus a tail tag.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

log = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# polynomials: tuples of Fractions, lowest degree first, no trailing zeros


def poly(*coeffs):
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly(*((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)))


def poly_neg(p):
    return tuple(-c for c in p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(*out)


def poly_eval(p, n):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * n + c
    return acc


def poly_str(p):
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = "n" if k == 1 else f"n^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    text = "".join(s + b for s, b in parts)
    return text[1:] if text.startswith("+") else text


_TERM = re.compile(r"([+-]?)([0-9]+(?:/[0-9]+)?)?(\*)?(n(?:\^([0-9]+))?)?")


def poly_parse(text):
    """Inverse of :func:`poly_str`."""
    s = text.replace(" ", "")
    if s == "0":
        return ()
    pos, coeffs = 0, {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(4) is None):
            raise ValueError(f"bad polynomial {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3) and not m.group(4):
            raise ValueError(f"bad polynomial {text!r} at {pos}")
        deg = 0 if not m.group(4) else int(m.group(5) or 1)
        coeffs[deg] = coeffs.get(deg, 0) + sign * c
        pos = m.end()
    top = max(coeffs) if coeffs else -1
    return poly(*(coeffs.get(k, 0) for k in range(top + 1)))


def _sign(x):
    return (x > 0) - (x < 0)


def eventual_sign(p):
    """Return (sign, bound) with sign(p(n)) constant for every n > bound."""
    if not p:
        return 0, -1
    lead = p[-1]
    # Cauchy bound on the absolute value of real roots
    bound = 1 + max((abs(c / lead) for c in p[:-1]), default=0)
    return _sign(lead), math.floor(bound)


# ---------------------------------------------------------------------------


def _lcm(a, b):
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Value at n >= start is ``pieces[n % period](n)``."""

    period: int
    pieces: tuple
    start: int = 0

    def __post_init__(self):
        if self.period < 1 or len(self.pieces) != self.period:
            raise ValueError("period must match the number of pieces")
        if self.start < 0:
            raise ValueError("start must be >= 0")
        object.__setattr__(self, "pieces", tuple(poly(*p) for p in self.pieces))

    @classmethod
    def constant(cls, c, start=0):
        return cls(1, (poly(c),), start)

    def __call__(self, n):
        if n < self.start:
            raise ValueError(f"tail valid only from n={self.start}")
        v = poly_eval(self.pieces[n % self.period], n)
        if v.denominator != 1:
            raise ArithmeticError(f"quasi-polynomial not integral at n={n}")
        return int(v)

    @property
    def degree(self):
        return max((len(p) - 1 for p in self.pieces), default=-1)

    def is_constant(self):
        return self.degree <= 0 and len(set(self.pieces)) == 1

    def is_integral(self):
        # a degree-d polynomial taking integer values on d+1 consecutive
        # points of a residue class takes integer values on the whole class
        for s, p in enumerate(self.pieces):
            first = self.start + ((s - self.start) % self.period)
            for i in range(len(p) + 1):
                if poly_eval(p, first + i * self.period).denominator != 1:
                    return False
        return True

    def expand(self, period, start=None):
        if period % self.period:
            raise ValueError("new period must be a multiple")
        pieces = tuple(self.pieces[s % self.period] for s in range(period))
        return QuasiPolynomial(period, pieces, self.start if start is None else max(start, self.start))

    def reduced(self):
        for d in sorted(_divisors(self.period)):
            if all(self.pieces[s] == self.pieces[s % d] for s in range(self.period)):
                return QuasiPolynomial(d, self.pieces[:d], self.start)
        return self

    def combine(self, other, op):
        m = _lcm(self.period, other.period)
        a, b = self.expand(m), other.expand(m)
        pieces = tuple(op(a.pieces[s], b.pieces[s]) for s in range(m))
        return QuasiPolynomial(m, pieces, max(self.start, other.start)).reduced()

    def __add__(self, other):
        return self.combine(other, poly_add)

    def __sub__(self, other):
        return self.combine(other, lambda p, q: poly_add(p, poly_neg(q)))

    def __mul__(self, other):
        return self.combine(other, poly_mul)

    def text(self):
        body = ",".join(poly_str(p) for p in self.pieces)
        return f"qp({self.period}; {body}; from={self.start})"


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


_QP = re.compile(r"qp\(\s*(\d+)\s*;(.*);\s*from\s*=\s*(\d+)\s*\)")


def parse_tail(text):
    text = text.strip()
    if text == "unknown":
        return None
    m = _QP.fullmatch(text)
    if not m:
        raise ValueError(f"bad tail {text!r}")
    pieces = tuple(poly_parse(p) for p in m.group(2).split(","))
    return QuasiPolynomial(int(m.group(1)), pieces, int(m.group(3)))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CountingSequence:
    """Exact integer sequence: explicit values for n < len(values), tail after.

    ``horizon`` marks the end of the requested prefix; ``values`` may run past
    it (a bridge) when the tail only becomes valid later.  ``tail`` is None
    when nothing is known beyond the stored values.
    """

    values: tuple
    horizon: int
    tail: QuasiPolynomial = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.horizon < 0 or len(self.values) < self.horizon + 1:
            raise ValueError("values must cover 0..horizon")
        if self.tail is not None:
            if self.tail.start > len(self.values):
                raise ValueError("gap between stored values and tail")
            for n in range(self.tail.start, len(self.values)):
                if self.tail(n) != self.values[n]:
                    raise ValueError(f"tail disagrees with stored value at n={n}")

    @classmethod
    def from_prefix(cls, prefix, tail=None):
        return cls(tuple(prefix), len(prefix) - 1, tail)

    @property
    def prefix(self):
        return self.values[: self.horizon + 1]

    def __call__(self, n):
        if n < len(self.values):
            return self.values[n]
        if self.tail is None:
            raise ValueError(f"value at n={n} unknown beyond horizon {self.horizon}")
        return self.tail(n)

    def __len__(self):
        return self.horizon + 1

    def _binary(self, other, op, tail_op):
        if not isinstance(other, CountingSequence):
            other = constant_sequence(int(other), self.horizon)
        h = min(self.horizon, other.horizon)
        if self.horizon != other.horizon:
            log.warning("horizon mismatch %d vs %d; using %d", self.horizon, other.horizon, h)
        if self.tail is not None and other.tail is not None:
            tail = tail_op(self.tail, other.tail)
            top = max(h + 1, tail.start)
            vals = tuple(op(self(n), other(n)) for n in range(top))
            return CountingSequence(vals, h, tail)
        return CountingSequence(tuple(op(self(n), other(n)) for n in range(h + 1)), h, None)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b, QuasiPolynomial.__add__)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b, QuasiPolynomial.__sub__)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b, QuasiPolynomial.__mul__)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return constant_sequence(0, self.horizon) - self

    def text(self):
        out = "prefix=[" + ",".join(map(str, self.prefix)) + "]"
        if len(self.values) > self.horizon + 1:
            out += "; bridge=[" + ",".join(map(str, self.values[self.horizon + 1:])) + "]"
        out += "; tail=" + (self.tail.text() if self.tail is not None else "unknown")
        return out


_SEQ = re.compile(r"prefix=\[([^\]]*)\](?:;\s*bridge=\[([^\]]*)\])?;\s*tail=(.*)")


def parse_sequence(text):
    m = _SEQ.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad sequence text {text!r}")
    nums = lambda s: tuple(int(x) for x in (s or "").split(",") if x.strip())
    prefix, bridge = nums(m.group(1)), nums(m.group(2))
    return CountingSequence(prefix + bridge, len(prefix) - 1, parse_tail(m.group(3).strip()))


def constant_sequence(c, horizon):
    return CountingSequence((c,) * (horizon + 1), horizon, QuasiPolynomial.constant(c))


add = CountingSequence.__add__
sub = CountingSequence.__sub__
mul = CountingSequence.__mul__


def is_polynomially_bounded(s):
    """True for quasi-polynomial tails; None (unknown) for prefix-only data."""
    return True if s.tail is not None else None


# ---------------------------------------------------------------------------
# index sets


@dataclass(frozen=True)
class PeriodicSet:
    """Eventually periodic subset of N.

    n is a member iff n is in ``added``, or ``n % modulus in residues`` and n
    is not in ``removed``.  Instances are normalized: minimal period and no
    redundant exceptions, so equal sets compare equal.
    """

    modulus: int
    residues: frozenset
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise ValueError("modulus must be >= 1")
        res = frozenset(r % m for r in self.residues)
        for d in sorted(_divisors(m)):
            if all((r in res) == ((r % d) in res) for r in range(m)):
                m, res = d, frozenset(r % d for r in res)
                break
        added = frozenset(x for x in self.added if x % m not in res)
        removed = frozenset(x for x in self.removed if x % m in res)
        if any(x < 0 for x in added | removed):
            raise ValueError("exceptions must be naturals")
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "residues", res)
        object.__setattr__(self, "added", added)
        object.__setattr__(self, "removed", removed)

    @classmethod
    def finite(cls, elements):
        return cls(1, frozenset(), frozenset(elements))

    @classmethod
    def cofinite(cls, missing=()):
        return cls(1, frozenset({0}), frozenset(), frozenset(missing))

    @classmethod
    def residue(cls, r, m):
        return cls(m, frozenset({r % m}))

    def __contains__(self, n):
        if n in self.added:
            return True
        return n % self.modulus in self.residues and n not in self.removed

    def is_empty(self):
        return not self.residues and not self.added

    def is_finite(self):
        return not self.residues

    def is_cofinite(self):
        return len(self.residues) == self.modulus

    @property
    def threshold(self):
        """Membership is purely periodic for every n >= threshold."""
        return max(self.added | self.removed, default=-1) + 1

    def _combine(self, other, op):
        other = as_periodic(other)
        m = _lcm(self.modulus, other.modulus)
        res = frozenset(r for r in range(m) if op(r % self.modulus in self.residues,
                                                  r % other.modulus in other.residues))
        added, removed = set(), set()
        for x in self.added | self.removed | other.added | other.removed:
            actual = op(x in self, x in other)
            periodic = x % m in res
            if actual and not periodic:
                added.add(x)
            elif periodic and not actual:
                removed.add(x)
        return PeriodicSet(m, res, frozenset(added), frozenset(removed))

    def __and__(self, other):
        return self._combine(other, lambda a, b: a and b)

    def __or__(self, other):
        return self._combine(other, lambda a, b: a or b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a and not b)

    def complement(self):
        return PeriodicSet(self.modulus, frozenset(range(self.modulus)) - self.residues,
                           self.removed, self.added)

    def issubset(self, other):
        return (self - other).is_empty()

    def elements(self, upto):
        return [n for n in range(upto + 1) if n in self]

    def iter_elements(self):
        n = 0
        while True:
            if n in self:
                yield n
            elif self.is_finite() and n >= self.threshold:
                return
            n += 1

    def count_upto(self, n):
        """|{x <= n : x in self}| by closed form."""
        if n < 0:
            return 0
        m = self.modulus
        c = sum((n - r) // m + 1 for r in self.residues)
        c += sum(1 for x in self.added if x <= n)
        c -= sum(1 for x in self.removed if x <= n)
        return c

    def counting_tail(self):
        """Quasi-polynomial equal to count_upto(n) for n >= threshold - 1."""
        m, k = self.modulus, len(self.residues)
        const = len(self.added) - len(self.removed)
        pieces = tuple(poly(Fraction(-k * s, m) + sum(1 for r in self.residues if r <= s) + const,
                            Fraction(k, m))
                       for s in range(m))
        return QuasiPolynomial(m, pieces, max(self.threshold - 1, 0)).reduced()

    def descriptor(self):
        out = f"periodic mod={self.modulus} residues={','.join(map(str, sorted(self.residues)))}"
        if self.added:
            out += " add=" + ",".join(map(str, sorted(self.added)))
        if self.removed:
            out += " remove=" + ",".join(map(str, sorted(self.removed)))
        return out

    def __str__(self):
        return self.descriptor()


NATURALS = PeriodicSet.cofinite()
EMPTY = PeriodicSet.finite(())
EVENS = PeriodicSet.residue(0, 2)
ODDS = PeriodicSet.residue(1, 2)


@dataclass(frozen=True)
class ExplicitSet:
    """Membership known on 0..horizon; beyond it per ``tail``.

    ``tail`` is one of ``"finite"`` (nothing after horizon), ``"cofinite"``
    (everything after horizon) or ``"unknown"``.
    """

    horizon: int
    members: frozenset
    tail: str = "unknown"

    def __post_init__(self):
        if self.tail not in ("finite", "cofinite", "unknown"):
            raise ValueError(f"bad tail tag {self.tail!r}")
        object.__setattr__(self, "members", frozenset(n for n in self.members if 0 <= n <= self.horizon))

    @classmethod
    def from_mask(cls, mask, tail="unknown"):
        return cls(len(mask) - 1, frozenset(i for i, b in enumerate(mask) if b), tail)

    def __contains__(self, n):
        if n <= self.horizon:
            return n in self.members
        if self.tail == "unknown":
            raise ValueError(f"membership of {n} unknown beyond horizon {self.horizon}")
        return self.tail == "cofinite"

    def decided(self):
        return self.tail != "unknown"

    def to_periodic(self):
        if self.tail == "finite":
            return PeriodicSet.finite(self.members)
        if self.tail == "cofinite":
            return PeriodicSet.cofinite(set(range(self.horizon + 1)) - self.members)
        raise ValueError("undecided tail cannot be made periodic")

    def elements(self, upto):
        return sorted(n for n in self.members if n <= upto)

    def is_empty(self):
        return not self.members and self.tail == "finite"

    def is_finite(self):
        return self.tail == "finite"

    def is_cofinite(self):
        return self.tail == "cofinite"

    def descriptor(self):
        mask = "".join("1" if n in self.members else "0" for n in range(self.horizon + 1))
        return f"explicit H={self.horizon} mask={mask} tail={self.tail}"

    def __str__(self):
        return self.descriptor()


def as_periodic(s):
    if isinstance(s, PeriodicSet):
        return s
    if isinstance(s, ExplicitSet):
        return s.to_periodic()
    raise TypeError(f"not an index set: {s!r}")


_KV = re.compile(r"(\w+)=([0-9,]*)")


def parse_index_set(text):
    """Parse ``periodic mod=.. residues=.. [add=..] [remove=..]`` or a short name."""
    t = text.strip()
    named = {"odds": ODDS, "evens": EVENS, "all": NATURALS, "naturals": NATURALS, "none": EMPTY}
    if t in named:
        return named[t]
    m = re.fullmatch(r"mult\((\d+)\)", t)
    if m:
        return PeriodicSet.residue(0, int(m.group(1)))
    if not t.startswith("periodic"):
        raise ValueError(f"unknown index set {text!r}")
    rest = t[len("periodic"):]
    fields = dict(_KV.findall(rest))
    leftover = _KV.sub("", rest).strip()
    if leftover or "mod" not in fields or "residues" not in fields:
        raise ValueError(f"bad periodic descriptor {text!r}")
    ints = lambda s: frozenset(int(x) for x in s.split(",") if x)
    mod = int(fields["mod"])
    res = ints(fields["residues"])
    if any(r >= mod for r in res):
        raise ValueError(f"residue out of range in {text!r}")
    return PeriodicSet(mod, res, ints(fields.get("add", "")), ints(fields.get("remove", "")))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignCells:
    negative: object
    zero: object
    positive: object

    def __iter__(self):
        return iter((self.negative, self.zero, self.positive))


def sign_pattern(s):
    """Partition N by the sign of ``s``; exact when the tail is known."""
    if s.tail is None:
        h = s.horizon
        cells = ([n for n in range(h + 1) if s(n) < 0],
                 [n for n in range(h + 1) if s(n) == 0],
                 [n for n in range(h + 1) if s(n) > 0])
        return SignCells(*(ExplicitSet(h, frozenset(c), "unknown") for c in cells))

    tail = s.tail
    # explicit region: stored values, then the tail until every piece's sign settles
    last = len(s.values) - 1
    eventual = []
    for r, p in enumerate(tail.pieces):
        sg, bound = eventual_sign(p)
        eventual.append(sg)
        last = max(last, bound)
    m = tail.period
    cells = {}
    for sg in (-1, 0, 1):
        res = frozenset(r for r in range(m) if eventual[r] == sg)
        added, removed = set(), set()
        for n in range(last + 1):
            actual = _sign(s(n)) == sg
            periodic = (n % m) in res
            if actual and not periodic:
                added.add(n)
            elif periodic and not actual:
                removed.add(n)
        cells[sg] = PeriodicSet(m, res, frozenset(added), frozenset(removed))
    return SignCells(cells[-1], cells[0], cells[1])
