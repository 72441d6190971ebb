"""A finite, consistent stand-in for a nonprincipal ultrafilter on N.

The model is the Frechet filter plus finitely many eventually periodic
commitments.  Answers are quantified over every ultrafilter extending the
commitments: ``MEMBER`` means every such ultrafilter contains the set,
``NON_MEMBER`` means none does, ``UNDECIDED`` means the commitments leave it
open.  Whether an extension can be chosen quasi-selective is not checked.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import (FiniteSetCommitted, InconsistentCommitment, NotAMember,
                     OracleFileError)
from .seqring import NATURALS, ExplicitSet, PeriodicSet, parse_index_set


class Answer(Enum):
    MEMBER = "Member"
    NON_MEMBER = "NonMember"
    UNDECIDED = "Undecided"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FilterModel:
    commitments: tuple = ()
    name: str = "model"
    log: tuple = ()

    def core(self):
        """Intersection of all commitments; N for the empty model."""
        out = NATURALS
        for c in self.commitments:
            out = out & c
        return out

    def __len__(self):
        return len(self.commitments)


EMPTY_MODEL = FilterModel(name="empty")


def commit(model, s):
    if isinstance(s, ExplicitSet):
        raise TypeError("commitments must be eventually periodic sets")
    if not isinstance(s, PeriodicSet):
        raise TypeError(f"not an index set: {s!r}")
    if s.is_finite():
        raise FiniteSetCommitted(f"{s} is finite")
    # the commitments are closed under intersection in the generated filter,
    # so the finite intersection property reduces to the full intersection
    if (model.core() & s).is_finite():
        raise InconsistentCommitment(f"{s} meets the existing commitments in a finite set")
    return FilterModel(model.commitments + (s,), model.name, model.log + (f"commit {s}",))


def _resolve(s):
    if isinstance(s, PeriodicSet):
        return s
    if isinstance(s, ExplicitSet) and s.decided():
        return s.to_periodic()
    return None


def query(model, s):
    p = _resolve(s)
    if p is None:
        return Answer.UNDECIDED
    core = model.core()
    if (core - p).is_finite():
        return Answer.MEMBER
    if (core & p).is_finite():
        return Answer.NON_MEMBER
    return Answer.UNDECIDED


def decided_superset_witness(model, s):
    """Commitment intersection minus a finite set, contained in ``s``."""
    if query(model, s) is not Answer.MEMBER:
        raise NotAMember(f"{s} is not forced into the filter")
    core = model.core()
    return core - (core - _resolve(s))


# ---------------------------------------------------------------------------
# oracle files


def load(lines, name="model"):
    """Replay ``commit periodic ...`` lines; '#' starts a comment."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    model = FilterModel(name=name)
    for i, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        verb, _, rest = line.partition(" ")
        if verb != "commit":
            raise OracleFileError(i, f"unknown directive {verb!r}")
        try:
            model = commit(model, parse_index_set(rest))
        except (ValueError, FiniteSetCommitted, InconsistentCommitment) as exc:
            raise OracleFileError(i, str(exc)) from exc
    return model


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return load(fh.read().splitlines(), name=str(path))


def dumps(model):
    head = f"# oracle {model.name}: {len(model)} commitment(s)\n"
    return head + "".join(f"commit {c.descriptor()}\n" for c in model.commitments)


def save_file(model, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(model))
