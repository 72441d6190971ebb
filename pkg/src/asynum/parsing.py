"""Recursive-descent parsers for the three surface languages.

Point sets::

    expr   := diff ('|' diff)*          lowest precedence
    diff   := inter ('\\' inter)*
    inter  := prod ('&' prod)*
    prod   := atom ('*' atom)*          highest precedence
    atom   := finite{(1,2),(3,4)} | empty(k) | range(a,b) | ap(a,d)   (b < a is empty)
            | lift((p,..), expr) | nat | evens | odds | '(' expr ')'

Functions of n::

    fexpr  := fterm (('+'|'-') fterm)*
    fterm  := ffac ('*' ffac)*
    ffac   := '-' ffac | n | INT | '(' fexpr ')' | floor_div(e,e) | mod(e,e)
            | abs(e) | pow2(e) | f0(e) | f1(e) | f2(e) | ackermann(m[,e])
            | tilde(F[,e]) | compose(F,G[,e]) | table[v,..] | f0 | f1 | f2

Series::

    series := sterm (('+'|'-') sterm)*
    sterm  := INT | [INT '*'] S[expr]

All operators are left-associative.  Errors carry the character offset
and the set of tokens that would have been accepted there.
"""

import re

from .errors import ParseError, WorkBudgetExceeded
from .pointset import AP, Diff, Finite, Intersect, Lift, Product, Range, Union
from .qselect import FuncSpec, ackermann, eval_f012, tilde
from .series import SeriesExpr

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.end() == pos or not m.group(0).strip():
                break
            start = m.start(m.lastindex)
            if m.group(1):
                self.toks.append(("int", int(m.group(1)), start))
            elif m.group(2):
                self.toks.append(("name", m.group(2), start))
            else:
                self.toks.append(("op", m.group(3), start))
            pos = m.end()
        self.toks.append(("eof", None, len(text)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def pos(self):
        return self.peek()[2]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, message, expected=()):
        raise ParseError(self.pos(), message, tuple(expected))

    def accept(self, op):
        if self.peek()[0] == "op" and self.peek()[1] == op:
            return self.next()
        return None

    def expect(self, op):
        if not self.accept(op):
            kind, val, _ = self.peek()
            got = "end of input" if kind == "eof" else repr(val)
            self.fail(f"expected {op!r}, got {got}", (op,))

    def integer(self):
        kind, val, _ = self.peek()
        if kind != "int":
            self.fail("expected an integer", ("INT",))
        self.next()
        return val

    def signed(self):
        return -self.integer() if self.accept("-") else self.integer()

    def done(self):
        if self.peek()[0] != "eof":
            self.fail(f"unexpected {self.peek()[1]!r}", ("end of input",))


# ---------------------------------------------------------------------------
# point sets

_LEVELS = (("|", Union), ("\\", Diff), ("&", Intersect), ("*", Product))
_ATOMS = ("finite", "empty", "range", "ap", "lift", "nat", "evens", "odds", "(")


def parse_expr(text):
    lx = _Lexer(text)
    e = _level(lx, 0)
    lx.done()
    return e


def _level(lx, k):
    if k == len(_LEVELS):
        return _atom(lx)
    op, cls = _LEVELS[k]
    left = _level(lx, k + 1)
    while lx.accept(op):
        left = cls(left, _level(lx, k + 1))
    return left


def _point(lx):
    lx.expect("(")
    coords = [lx.integer()]
    while lx.accept(","):
        coords.append(lx.integer())
    lx.expect(")")
    return tuple(coords)


def _atom(lx):
    kind, val, at = lx.peek()
    if kind == "op" and val == "(":
        lx.next()
        e = _level(lx, 0)
        lx.expect(")")
        return e
    if kind != "name" or val not in _ATOMS:
        lx.fail("expected a point set", _ATOMS)
    lx.next()
    if val == "nat":
        return AP(0, 1)
    if val == "evens":
        return AP(0, 2)
    if val == "odds":
        return AP(1, 2)
    if val == "finite":
        lx.expect("{")
        pts = []
        if not lx.accept("}"):
            pts.append(_point(lx))
            while lx.accept(","):
                pts.append(_point(lx))
            lx.expect("}")
        if not pts:
            raise ParseError(at, "finite{} needs a point; use empty(k)", ("(",))
        if len({len(p) for p in pts}) > 1:
            raise ParseError(at, "points of a finite set must share a dimension")
        return Finite(tuple(pts))
    lx.expect("(")
    if val == "lift":
        p = _point(lx)
        lx.expect(",")
        inner = _level(lx, 0)
        lx.expect(")")
        return Lift(p, inner)
    a = lx.integer()
    if val == "empty":
        lx.expect(")")
        if a < 1:
            raise ParseError(at, "empty(k) needs k >= 1")
        return Finite((), a)
    lx.expect(",")
    bpos = lx.pos()
    b = lx.signed() if val == "range" else lx.integer()
    lx.expect(")")
    if val == "ap":
        if b < 1:
            raise ParseError(bpos, "progression difference must be >= 1", ("INT>=1",))
        return AP(a, b)
    return Range(a, b)


# ---------------------------------------------------------------------------
# functions

_FNAMES = ("n", "floor_div", "mod", "abs", "pow2", "f0", "f1", "f2",
           "ackermann", "tilde", "compose", "table")


def parse_func(text, budget=None):
    """FuncSpec for a function of n; ``budget`` bounds tilde/ackermann work."""
    lx = _Lexer(text)
    f = _fsum(lx, budget)
    lx.done()
    return FuncSpec(f, text.strip())


def _fsum(lx, budget):
    f = _fterm(lx, budget)
    while True:
        if lx.accept("+"):
            g = _fterm(lx, budget)
            f = (lambda a, b: lambda n: a(n) + b(n))(f, g)
        elif lx.accept("-"):
            g = _fterm(lx, budget)
            f = (lambda a, b: lambda n: a(n) - b(n))(f, g)
        else:
            return f


def _fterm(lx, budget):
    f = _ffac(lx, budget)
    while lx.accept("*"):
        g = _ffac(lx, budget)
        f = (lambda a, b: lambda n: a(n) * b(n))(f, g)
    return f


def _args(lx, budget, count):
    lx.expect("(")
    out = [_fsum(lx, budget)]
    for _ in range(count - 1):
        lx.expect(",")
        out.append(_fsum(lx, budget))
    lx.expect(")")
    return out


def _ffac(lx, budget):
    kind, val, at = lx.peek()
    if kind == "op" and val == "-":
        lx.next()
        f = _ffac(lx, budget)
        return lambda n: -f(n)
    if kind == "op" and val == "(":
        lx.next()
        f = _fsum(lx, budget)
        lx.expect(")")
        return f
    if kind == "int":
        lx.next()
        return lambda n: val
    if kind != "name" or val not in _FNAMES:
        lx.fail("expected a function term", ("n", "INT", "(", "-") + _FNAMES[1:])
    lx.next()
    if val == "n":
        return lambda n: n
    if val in ("floor_div", "mod"):
        a, b = _args(lx, budget, 2)
        if val == "floor_div":
            return lambda n: a(n) // _nonzero(b(n))
        return lambda n: a(n) % _nonzero(b(n))
    if val == "abs":
        (a,) = _args(lx, budget, 1)
        return lambda n: abs(a(n))
    if val == "pow2":
        (a,) = _args(lx, budget, 1)
        return lambda n: 2 ** _exponent(a(n))
    if val in ("f0", "f1", "f2"):
        which = int(val[1])
        if lx.peek()[1] == "(":
            (a,) = _args(lx, budget, 1)
            return lambda n: eval_f012(which, a(n))
        return lambda n: eval_f012(which, n)
    if val == "table":
        lx.expect("[")
        vals = [lx.integer()]
        while lx.accept(","):
            vals.append(lx.integer())
        lx.expect("]")
        return FuncSpec.table(vals)
    if val == "ackermann":
        lx.expect("(")
        m = lx.integer()
        arg = lambda n: n
        if lx.accept(","):
            arg = _fsum(lx, budget)
        lx.expect(")")
        return lambda n: ackermann(m, _natural(arg(n)), budget)
    if val == "tilde":
        lx.expect("(")
        F = _fsum(lx, budget)
        arg = lambda n: n
        if lx.accept(","):
            arg = _fsum(lx, budget)
        lx.expect(")")
        return lambda n: tilde(F, _natural(arg(n)), budget)
    # compose(F, G[, e]) = F(G(e))
    lx.expect("(")
    F = _fsum(lx, budget)
    lx.expect(",")
    G = _fsum(lx, budget)
    arg = lambda n: n
    if lx.accept(","):
        arg = _fsum(lx, budget)
    lx.expect(")")
    return lambda n: F(G(arg(n)))


def _nonzero(x):
    if x == 0:
        raise ZeroDivisionError("division by zero in function expression")
    return x


MAX_POW2_EXPONENT = 1 << 20


def _exponent(x):
    if _natural(x) > MAX_POW2_EXPONENT:
        raise WorkBudgetExceeded(MAX_POW2_EXPONENT, "pow2 exponent")
    return x


def _natural(x):
    if x < 0:
        raise ValueError(f"expected a natural, got {x}")
    return x


# ---------------------------------------------------------------------------
# series


def parse_series(text):
    lx = _Lexer(text)
    const, terms = 0, []
    sign = -1 if lx.accept("-") else 1
    while True:
        c, X = _sterm(lx)
        if X is None:
            const += sign * c
        else:
            terms.append((sign * c, X))
        if lx.accept("+"):
            sign = 1
        elif lx.accept("-"):
            sign = -1
        else:
            break
    lx.done()
    return SeriesExpr(const, tuple(terms))


def _sterm(lx):
    kind, val, _ = lx.peek()
    coef = 1
    if kind == "int":
        coef = lx.next()[1]
        if not lx.accept("*"):
            return coef, None
        kind, val, _ = lx.peek()
    if kind != "name" or val != "S":
        lx.fail("expected S[...] or an integer", ("S", "INT"))
    lx.next()
    lx.expect("[")
    X = _level(lx, 0)
    lx.expect("]")
    return coef, X


# ---------------------------------------------------------------------------


def parse_nat_set(text):
    """``{0,1,2,3}`` or ``0,1,2,3``; ``{}`` is the empty set."""
    lx = _Lexer(text)
    braced = bool(lx.accept("{"))
    out = []
    if lx.peek()[0] == "int":
        out.append(lx.integer())
        while lx.accept(","):
            out.append(lx.integer())
    if braced:
        lx.expect("}")
    lx.done()
    return tuple(sorted(set(out)))
