"""Asymptotic equinumerosity: verdicts, semiring arithmetic, witnesses.

X and Y get the same numerosity iff the set of n with |X_n| = |Y_n| lies in
the ultrafilter.  Since only a finite model of commitments is available,
each comparison returns a :class:`Verdict` saying whether the answer is
forced (a cofinite sign cell), decided by the commitments (a member cell,
with a certificate), or still open.
"""

import itertools
from dataclasses import dataclass, field

from .errors import (AsynumError, HorizonTooSmall, NoWitnessWithinHorizon,
                     NotEquinumerous, PreconditionNotMember)
from .oracle import EMPTY_MODEL, Answer, decided_superset_witness, query
from .pointset import (Finite, Lift, Product, Union, contains, counting_sequence,
                       truncate)
from .qselect import monotone_restriction
from .seqring import CountingSequence, PeriodicSet, sign_pattern

KINDS = ("Equal", "Less", "Greater", "NotEqual", "DependsOnOracle")


@dataclass(frozen=True)
class Numerosity:
    representative: CountingSequence
    provenance: object

    def __call__(self, n):
        return self.representative(n)


def numerosity(expr, H=64, budget=None):
    return Numerosity(counting_sequence(expr, H, budget), expr)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a comparison.

    ``forced`` marks verdicts that hold for every asymptotic equinumerosity
    (the deciding cell is cofinite).  ``cells`` is the evidence: the
    negative / zero / positive sign cells of |X_n| - |Y_n|.
    """

    kind: str
    D: object
    cells: object
    H: int
    certificate: object = None
    forced: bool = False
    direction: str = None  # Less / Greater when a NotEqual has a known side

    def machine_line(self):
        cert = self.certificate.descriptor() if self.certificate is not None else "none"
        return f"verdict={self.kind} D={self.D.descriptor()} cert={cert} H={self.H}"

    def table(self):
        """Human-readable evidence partition."""
        rows = [f"verdict: {self.kind}" + (" (forced)" if self.forced else "")
                + (f" [{self.direction}]" if self.direction else "")]
        for name, cell in zip(("|X_n| < |Y_n|", "|X_n| = |Y_n|", "|X_n| > |Y_n|"), self.cells):
            empty = not getattr(cell, "residues", True) and not cell.added
            rows.append(f"  {name:<14} {'empty' if empty else cell.descriptor()}")
        if self.certificate is not None:
            rows.append(f"  certificate    {self.certificate.descriptor()}")
        return "\n".join(rows)

    def __str__(self):
        return self.machine_line()


def _sequence(obj, H, budget):
    if isinstance(obj, Numerosity):
        return obj.representative
    if isinstance(obj, CountingSequence):
        return obj
    return counting_sequence(obj, H, budget)


def _status(model, cell):
    """'forced', 'member', 'nonmember' or 'open' for one sign cell."""
    if cell.is_cofinite():
        return "forced"
    if cell.is_finite():
        return "nonmember"
    ans = query(model, cell)
    if ans is Answer.MEMBER:
        return "member"
    if ans is Answer.NON_MEMBER:
        return "nonmember"
    return "open"


def _cert(model, cell, status):
    if status == "forced":
        return cell
    return decided_superset_witness(model, cell)


def sign_cells(X, Y, H=64, budget=None):
    sx, sy = _sequence(X, H, budget), _sequence(Y, H, budget)
    return sign_pattern(sx - sy)


def equinumerous(X, Y, model=EMPTY_MODEL, H=64, budget=None):
    cells = sign_cells(X, Y, H, budget)
    D = cells.zero
    st = _status(model, D)
    if st in ("forced", "member"):
        return Verdict("Equal", D, cells, H, _cert(model, D, st), st == "forced")
    if st == "nonmember":
        direction, cert, forced = None, None, D.is_finite()
        for name, cell in (("Less", cells.negative), ("Greater", cells.positive)):
            s = _status(model, cell)
            if s in ("forced", "member"):
                direction, cert, forced = name, _cert(model, cell, s), s == "forced"
        return Verdict("NotEqual", D, cells, H, cert, forced, direction)
    return Verdict("DependsOnOracle", D, cells, H)


def compare(X, Y, model=EMPTY_MODEL, H=64, budget=None):
    """Order verdict from the sign of |X_n| - |Y_n|."""
    cells = sign_cells(X, Y, H, budget)
    for kind, cell in zip(("Less", "Equal", "Greater"), cells):
        st = _status(model, cell)
        if st in ("forced", "member"):
            return Verdict(kind, cell, cells, H, _cert(model, cell, st), st == "forced")
    return Verdict("DependsOnOracle", cells.zero, cells, H)


def attainable(X, Y, model=EMPTY_MODEL, H=64, budget=None):
    """Order alternatives some extension of the model can still realise."""
    cells = sign_cells(X, Y, H, budget)
    return [kind for kind, cell in zip(("Less", "Equal", "Greater"), cells)
            if _status(model, cell) != "nonmember"]


# ---------------------------------------------------------------------------
# semiring operations


def _horizon(a, b):
    return min(a.representative.horizon, b.representative.horizon)


def disjoint_sum_expr(A, B):
    """A and B lifted into a common dimension with distinct leading tags."""
    h = max(A.dim, B.dim) + 1
    left = Lift((0,) * (h - A.dim), A)
    right = Lift((1,) + (0,) * (h - B.dim - 1), B)
    return Union(left, right)


def num_add(a, b, budget=None):
    """Pointwise sum; the provenance is a tagged disjoint union.

    The union's tag coordinate 1 is invisible at n = 0, so its own counting
    sequence matches the sum only from n = 1 on (an equinumerous set).
    """
    expr = disjoint_sum_expr(a.provenance, b.provenance)
    return Numerosity(a.representative + b.representative, expr)


def num_mul(a, b, budget=None):
    return numerosity(Product(a.provenance, b.provenance), _horizon(a, b), budget)


# ---------------------------------------------------------------------------
# witness constructions


def _shells(expr, H, budget):
    """Points of expr up to H grouped by their largest coordinate."""
    shells = {}
    for p in truncate(expr, H, budget):
        shells.setdefault(max(p), []).append(p)
    return shells


@dataclass(frozen=True)
class SubsetRepresentative:
    Z: Finite
    checkpoints: tuple
    counts: tuple  # |X_m| = |Z_m| at each checkpoint
    continuation: str


def build_subset_representative(X, Y, model=EMPTY_MODEL, H=64, budget=None):
    """A subset Z of Y (up to H) with |Z_m| = |X_m| on a checkpoint set."""
    sx, sy = _sequence(X, H, budget), _sequence(Y, H, budget)
    cells = sign_pattern(sx - sy)
    le = cells.negative | cells.zero if isinstance(cells.zero, PeriodicSet) else None
    st = _status(model, le) if le is not None else "open"
    if st not in ("forced", "member"):
        raise PreconditionNotMember("{n : |X_n| <= |Y_n|} is not forced into the filter")
    U = _cert(model, le, st)
    try:
        V = monotone_restriction(lambda n: sy(n) - sx(n), U, H)
    except NoWitnessWithinHorizon:
        raise HorizonTooSmall(f"certificate has no elements up to {H}") from None
    checkpoints = V.elements(H)
    if len(checkpoints) < 2:
        raise HorizonTooSmall(f"only {len(checkpoints)} checkpoint(s) up to {H}")
    shells = _shells(Y, H, budget)
    Z, prev = [], -1
    for m in checkpoints:
        need = sx(m) - (sx(prev) if prev >= 0 else 0)
        pool = sorted(itertools.chain.from_iterable(shells.get(k, ()) for k in range(prev + 1, m + 1)))
        if need > len(pool):
            raise AssertionError("checkpoint selection ran out of points")
        Z.extend(pool[:need])
        prev = m
    dim = Y.dim if hasattr(Y, "dim") else 1
    Zexpr = Finite(tuple(Z), dim)
    rule = (f"beyond {checkpoints[-1]}: repeat on later checkpoints of {U.descriptor()}, "
            "taking the lexicographically least new points of Y")
    return SubsetRepresentative(Zexpr, tuple(checkpoints), tuple(sx(m) for m in checkpoints), rule)


@dataclass(frozen=True)
class Congruence:
    sigma: dict = field(hash=False)
    W: tuple = ()


def build_u_congruence(X, Y, model=EMPTY_MODEL, H=64, budget=None):
    """Blockwise bijection between truncations, verified on the witness set."""
    v = equinumerous(X, Y, model, H, budget)
    if v.kind != "Equal":
        raise NotEquinumerous(f"verdict is {v.kind}, not Equal")
    W = v.certificate.elements(H)
    if not W:
        raise HorizonTooSmall(f"certificate has no elements up to {H}")
    xs, ys = _shells(X, H, budget), _shells(Y, H, budget)
    sigma, prev = {}, -1
    for w in W:
        bx = sorted(itertools.chain.from_iterable(xs.get(k, ()) for k in range(prev + 1, w + 1)))
        by = sorted(itertools.chain.from_iterable(ys.get(k, ()) for k in range(prev + 1, w + 1)))
        if len(bx) != len(by):
            raise AssertionError(f"block sizes differ at checkpoint {w}")
        sigma.update(zip(bx, by))
        prev = w
    cong = Congruence(sigma, tuple(W))
    if not check_congruence(X, Y, cong, budget):
        raise AssertionError("sigma[X_n] != Y_n on the witness set")
    return cong


def check_congruence(X, Y, cong, budget=None):
    """Literal check that sigma[X_n] = Y_n for every n in the witness set."""
    for n in cong.W:
        xn = truncate(X, n, budget)
        if {cong.sigma[p] for p in xn} != set(truncate(Y, n, budget)):
            return False
    return True


# ---------------------------------------------------------------------------
# axiom checks


@dataclass
class AxiomEntry:
    sample: tuple
    status: str  # pass / fail / vacuous
    detail: str = ""


@dataclass
class AxiomReport:
    axiom: str
    entries: list

    @property
    def ok(self):
        return all(e.status != "fail" for e in self.entries)

    def counts(self):
        out = {"pass": 0, "fail": 0, "vacuous": 0}
        for e in self.entries:
            out[e.status] += 1
        return out


def _e0(X, Y, model, H, budget):
    try:
        rep = build_subset_representative(X, Y, model, H, budget)
    except PreconditionNotMember:
        return "vacuous", "premise not forced"
    for z in rep.Z.points:
        if not contains(Y, z):
            return "fail", f"{z} not in Y"
    for m, c in zip(rep.checkpoints, rep.counts):
        zm = sum(1 for z in rep.Z.points if max(z) <= m)
        if zm != c:
            return "fail", f"|Z_{m}| = {zm} but |X_{m}| = {c}"
    if compare(X, Y, model, H, budget).kind == "Greater":
        return "fail", "compare says Greater despite premise"
    return "pass", f"{len(rep.checkpoints)} checkpoints"


def _e1(A, B, model, H, budget):
    v1 = equinumerous(A, B, model, H, budget)
    v2 = equinumerous(A - B, B - A, model, H, budget)
    if v1.kind == v2.kind and v1.D == v2.D:
        return "pass", v1.kind
    return "fail", f"{v1.kind} vs {v2.kind}"


def _e2(A, B, model, H, budget):
    cells = sign_cells(A, B, H, budget)
    statuses = [_status(model, c) for c in cells]
    alive = [k for k, s in zip(("Less", "Equal", "Greater"), statuses) if s != "nonmember"]
    if "open" in statuses:
        v = compare(A, B, model, H, budget)
        if len(alive) >= 2 and v.kind == "DependsOnOracle":
            return "pass", "undecided: " + ",".join(alive)
        return "fail", f"open cells but {len(alive)} alternative(s), verdict {v.kind}"
    if len(alive) != 1:
        return "fail", f"{len(alive)} alternatives attainable"
    kind = alive[0]
    try:
        if kind == "Less":
            build_subset_representative(A, B, model, H, budget)
        elif kind == "Greater":
            build_subset_representative(B, A, model, H, budget)
    except AsynumError as exc:
        return "fail", f"{kind} without witness: {exc}"
    return "pass", kind


def _e3(A, P, model, H, budget):
    for expr in (Product(A, Finite((P,))), Lift(P, A)):
        v = equinumerous(expr, A, model, H, budget)
        if not (v.kind == "Equal" and v.forced):
            return "fail", f"{expr}: {v.kind}"
    return "pass", "Equal (forced)"


def _e4(A, A2, B, B2, model, H, budget):
    if equinumerous(A, A2, model, H, budget).kind != "Equal":
        return "vacuous", "A, A' not equal"
    if equinumerous(B, B2, model, H, budget).kind != "Equal":
        return "vacuous", "B, B' not equal"
    v = equinumerous(Product(A, B), Product(A2, B2), model, H, budget)
    return ("pass" if v.kind == "Equal" else "fail"), v.kind


def axiom_check(axiom, samples, model=EMPTY_MODEL, H=64, budget=None):
    """Evaluate one axiom on each sample tuple.

    E0, E1, E2 take pairs (X, Y).  E3 takes (A, P) with P a point, or a bare
    A (P defaults to the origin of dimension 1).  E4 takes (A, A', B, B') or
    a pair (A, B), for which the primed sets are built as lifts.
    """
    entries = []
    for s in samples:
        if axiom == "E0":
            st, det = _e0(*s, model, H, budget)
        elif axiom == "E1":
            st, det = _e1(*s, model, H, budget)
        elif axiom == "E2":
            st, det = _e2(*s, model, H, budget)
        elif axiom == "E3":
            A, P = s if isinstance(s, tuple) else (s, (0,))
            st, det = _e3(A, tuple(P), model, H, budget)
        elif axiom == "E4":
            if len(s) == 2:
                A, B = s
                s = (A, Lift((3,), A), B, Product(B, Finite(((2, 5),))))
            st, det = _e4(*s, model, H, budget)
        else:
            raise ValueError(f"unknown axiom {axiom!r}")
        entries.append(AxiomEntry(tuple(s) if isinstance(s, tuple) else (s,), st, det))
    return AxiomReport(axiom, entries)


# ---------------------------------------------------------------------------
# the set of all finite-dimensional points


def quasi_numerosity_e(n):
    """|E_n| where E_n is the union over 1 <= k <= n of {0..n}^k."""
    if n <= 0:
        return 0
    return (n + 1) * ((n + 1) ** n - 1) // n


def e_sequence(H):
    """Prefix-only: the sequence is not polynomially bounded, so no tail."""
    return CountingSequence(tuple(quasi_numerosity_e(n) for n in range(H + 1)), H, None)
