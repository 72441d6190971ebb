"""Seeded generators for random point sets, functions and filter models."""

import random

from .errors import InconsistentCommitment
from .oracle import EMPTY_MODEL, commit
from .pointset import AP, Diff, Finite, Intersect, Lift, Product, Range, Union
from .seqring import PeriodicSet


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_leaf(rng, dim=1):
    if dim > 1:
        return Product(random_leaf(rng, 1), random_leaf(rng, dim - 1))
    r = rng.random()
    if r < 0.4:
        return AP(rng.randint(0, 6), rng.randint(1, 4))
    if r < 0.7:
        a = rng.randint(0, 10)
        return Range(a, a + rng.randint(-1, 10))
    return Finite(tuple((rng.randint(0, 12),) for _ in range(rng.randint(1, 4))))


def random_expr(seed, dim=1, depth=2):
    """Random expression of the given dimension with a few boolean nodes."""
    rng = _rng(seed)
    if depth <= 0:
        return random_leaf(rng, dim)
    r = rng.random()
    if dim > 1 and r < 0.3:
        k = rng.randint(1, dim - 1)
        return Product(random_expr(rng, k, depth - 1), random_expr(rng, dim - k, depth - 1))
    if dim > 1 and r < 0.4:
        k = rng.randint(1, dim - 1)
        point = tuple(rng.randint(0, 5) for _ in range(k))
        return Lift(point, random_expr(rng, dim - k, depth - 1))
    if r < 0.8:
        cls = rng.choice((Union, Intersect, Diff))
        return cls(random_expr(rng, dim, depth - 1), random_expr(rng, dim, depth - 1))
    return random_leaf(rng, dim)


def random_finite(seed, max_points=6, dim=1, top=8):
    rng = _rng(seed)
    k = rng.randint(0, max_points)
    pts = {tuple(rng.randint(0, top) for _ in range(dim)) for _ in range(k)}
    return Finite(tuple(pts), dim)


def random_periodic(seed, moduli=(2, 3, 4, 6)):
    rng = _rng(seed)
    m = rng.choice(moduli)
    res = frozenset(r for r in range(m) if rng.random() < 0.5) or frozenset({rng.randrange(m)})
    return PeriodicSet(m, res, frozenset(), frozenset())


def random_model(seed, size=3, tries=200):
    """A consistent model with ``size`` infinite commitments."""
    rng = _rng(seed)
    model = EMPTY_MODEL
    for _ in range(tries):
        if len(model) == size:
            return model
        s = random_periodic(rng)
        if s.is_cofinite():
            continue
        try:
            model = commit(model, s)
        except InconsistentCommitment:
            pass
    raise RuntimeError(f"could not build {size} consistent commitments")


def random_bounded_func(seed, H):
    """Random f with f(n) <= n on 0..H, as a table."""
    rng = _rng(seed)
    return [rng.randint(0, n) for n in range(H + 1)]
