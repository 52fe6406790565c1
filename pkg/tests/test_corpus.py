"""The built-in regression corpus must agree with the pipeline end to end."""

from agjordan.corpus import ENTRIES, run_corpus, run_entry
from agjordan.hessian import GenericRankConfig


def test_every_entry_matches_randomized():
    results = run_corpus(GenericRankConfig())
    assert len(results) == len(ENTRIES)
    for res in results:
        assert res.ok, f"{res.name}: {[r for r in res.rows if r[1] != r[2]]}"


def test_every_entry_matches_exact_mode():
    results = run_corpus(GenericRankConfig(exact_mode=True))
    for res in results:
        assert res.ok, res.name


def test_rows_carry_expected_and_got():
    entry = next(e for e in ENTRIES if e.name == "perazzo-cubic")
    res = run_entry(entry, GenericRankConfig())
    fields = [row[0] for row in res.rows]
    assert fields[:4] == ["hilbert", "jordan", "wlp", "slp"]
    assert "r(1,1)" in fields
    assert "gap" in fields
    for _, expected, got in res.rows:
        assert expected == got


def test_entry_names_are_unique():
    names = [e.name for e in ENTRIES]
    assert len(names) == len(set(names))


def test_quintic_entries_note_the_adjudication():
    noted = [e for e in ENTRIES if "oracle-adjudicated" in e.note]
    assert {e.name for e in noted} == {"ikeda-quintic", "hess2-example"}
