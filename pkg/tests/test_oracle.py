import pytest
from hypothesis import given

from asynum.errors import FiniteSetCommitted, InconsistentCommitment, NotAMember, OracleFileError
from asynum.oracle import (EMPTY_MODEL, Answer, commit, decided_superset_witness, dumps, load,
                           load_file, query, save_file)
from asynum.seqring import EVENS, NATURALS, ODDS, ExplicitSet, PeriodicSet
from strategies import periodic_sets

M3 = PeriodicSet.residue(0, 3)


def test_commit_consistency():
    m = commit(EMPTY_MODEL, ODDS)
    with pytest.raises(InconsistentCommitment):
        commit(m, EVENS)
    m2 = commit(m, M3)
    assert m2.core() == PeriodicSet.residue(3, 6)
    with pytest.raises(FiniteSetCommitted):
        commit(EMPTY_MODEL, PeriodicSet.finite({1, 2}))
    with pytest.raises(TypeError):
        commit(EMPTY_MODEL, ExplicitSet(4, frozenset({1})))


def test_query_answers():
    m = commit(EMPTY_MODEL, ODDS)
    assert query(m, EVENS) is Answer.NON_MEMBER
    assert query(m, ODDS | PeriodicSet.finite({0})) is Answer.MEMBER
    assert query(m, M3) is Answer.UNDECIDED
    assert query(EMPTY_MODEL, EVENS) is Answer.UNDECIDED
    assert query(EMPTY_MODEL, PeriodicSet.cofinite({1, 2})) is Answer.MEMBER
    assert query(EMPTY_MODEL, PeriodicSet.finite({1, 2})) is Answer.NON_MEMBER
    assert query(m, ExplicitSet(5, frozenset({1, 3, 5}))) is Answer.UNDECIDED


def test_witness():
    m = commit(commit(EMPTY_MODEL, ODDS), M3)
    w = decided_superset_witness(m, PeriodicSet.residue(3, 6))
    assert w == ODDS & M3
    with pytest.raises(NotAMember):
        decided_superset_witness(m, EVENS)


@given(periodic_sets(), periodic_sets())
def test_answers_are_quantified_over_extensions(a, s):
    # Member and NonMember can never both hold, and committing a set makes it Member
    if a.is_finite():
        return
    m = commit(EMPTY_MODEL, a)
    ans = query(m, s)
    if ans is Answer.MEMBER:
        assert (a - s).is_finite()
    if ans is Answer.NON_MEMBER:
        assert (a & s).is_finite()
    assert query(m, a) is Answer.MEMBER


def test_monotone_under_commitment():
    m = commit(EMPTY_MODEL, ODDS)
    before = {s: query(m, s) for s in (EVENS, ODDS, M3, NATURALS)}
    m2 = commit(m, M3)
    for s, ans in before.items():
        if ans is not Answer.UNDECIDED:
            assert query(m2, s) is ans


def test_file_roundtrip(tmp_path):
    m = commit(commit(EMPTY_MODEL, ODDS), M3)
    path = tmp_path / "m.ora"
    save_file(m, path)
    again = load_file(path)
    assert again.commitments == m.commitments
    assert dumps(again).count("commit ") == 2


def test_file_errors():
    with pytest.raises(OracleFileError) as exc:
        load("commit odds\n# fine\ncommit evens\n")
    assert exc.value.line == 3
    with pytest.raises(OracleFileError):
        load("forget odds")
    assert len(load("commit odds  # trailing comment\n\n")) == 1
