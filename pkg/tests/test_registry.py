from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfdual.codes import EnumeratorClass
from selfdual.gf2 import BitWord
from selfdual.registry import (
    KnownParamRecord,
    ParseError,
    RecordRejected,
    Registry,
    ResultRecord,
    ResultsLog,
    Verdict,
    load_known,
    shipped_known,
)
from tables import TABLE_ROWS

C1 = TABLE_ROWS[0]
C1_V = BitWord.from_str("".join(C1[2]))


def test_shipped_dataset_loads():
    reg = shipped_known()
    counts = reg.bucket_counts()
    assert counts[(68, "W68_2", 0)] == 178
    assert counts[(72, "TypeII72", None)] == 244
    assert load_known(reg.serialize()) == reg


def test_verdicts():
    reg = shipped_known()
    known = EnumeratorClass("I", "W68_2", beta=34, gamma=0)
    assert reg.is_new(known, 68) is Verdict.KNOWN_PARAMETERS
    assert reg.is_new(known, 68, aut_order=68) is Verdict.KNOWN_PARAMETERS
    assert reg.is_new(known, 68, aut_order=34) is Verdict.KNOWN_PARAMETERS_NEW_AUT_ORDER
    assert reg.is_new(EnumeratorClass("I", "W68_2", beta=35, gamma=9), 68) is Verdict.NEW_PARAMETERS
    assert reg.is_new(EnumeratorClass("I"), 68) is Verdict.NEW_PARAMETERS


def test_without_drops_points():
    reg = shipped_known()
    key = (68, "W68_2", 0, 34)
    assert key in reg.records
    assert key not in reg.without([key]).records
    assert len(reg.without([key])) == len(reg) - 1


records = st.builds(
    lambda form, gamma, value, auts: KnownParamRecord(
        72 if form != "W68_2" else 68, "II" if form == "TypeII72" else "I", form,
        None if form == "TypeII72" else gamma, value, frozenset(auts)),
    st.sampled_from(["W68_2", "W72_1", "W72_2", "TypeII72"]),
    st.integers(0, 80), st.integers(-5000, 1000), st.sets(st.integers(1, 500), max_size=3),
)


@given(st.lists(records, max_size=30))
def test_serialize_round_trip(recs):
    reg = Registry()
    for r in recs:
        reg.add(r)
    assert load_known(reg.serialize()) == reg


def test_merge_unions_aut_orders():
    reg = Registry()
    reg.add(KnownParamRecord(68, "I", "W68_2", 0, 34, frozenset({68}), "a"))
    reg.add(KnownParamRecord(68, "I", "W68_2", 0, 34, frozenset({136}), "b"))
    (rec,) = reg.records.values()
    assert rec.aut_orders == {68, 136} and rec.source == "a+b"


@pytest.mark.parametrize("text", [
    "68 I W68_2 0 34\n",
    "68 II W68_2 0 34 - x\n",
    "68 I W99 0 34 - x\n",
    "68 I W68_2 zero 34 - x\n",
    "#! count 68 W68_2 0 2\n68 I W68_2 0 34 - x\n",
    "#! tally 1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        load_known(text)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as info:
        load_known("# header\n68 I W68_2 0 34 - x\nbad line\n")
    assert info.value.lineno == 3


def test_result_record_round_trip():
    cls = EnumeratorClass("I", "W68_2", beta=34, gamma=0, d=12)
    rec = ResultRecord("D:34", C1_V, 12, cls, seed=7, evaluations=123, aut_order=34)
    line = rec.to_line()
    assert line == "D:34 34 03bfb9e72 12 W68_2 0 34 7 123 34"
    assert ResultRecord.from_line(line) == rec
    plain = ResultRecord("D:16", BitWord(0xb1a4, 16), 8, EnumeratorClass("II", d=8))
    assert ResultRecord.from_line(plain.to_line()) == plain
    with pytest.raises(ValueError):
        ResultRecord.from_line("D:34 34 03bfb9e72 12")


def test_results_log_append(tmp_path):
    log = ResultsLog(tmp_path / "results.txt")
    cls = EnumeratorClass("I", "W68_2", beta=34, gamma=0, d=12)
    rec = ResultRecord("D:34", C1_V, 12, cls, seed=1, evaluations=10)
    assert log.append_result(rec)
    assert not log.append_result(rec)
    assert log.read() == [rec]
    assert [p.name for p in tmp_path.iterdir()] == ["results.txt"]


@pytest.mark.parametrize("mutation", ["d", "beta", "v", "group"])
def test_results_log_rejects_wrong_records(tmp_path, mutation):
    log = ResultsLog(tmp_path / "results.txt")
    cls = EnumeratorClass("I", "W68_2", beta=34, gamma=0, d=12)
    rec = ResultRecord("D:34", C1_V, 12, cls)
    if mutation == "d":
        rec = ResultRecord("D:34", C1_V, 14, cls)
    elif mutation == "beta":
        rec = ResultRecord("D:34", C1_V, 12, EnumeratorClass("I", "W68_2", beta=35, gamma=0, d=12))
    elif mutation == "v":
        rec = ResultRecord("D:34", C1_V ^ BitWord(1, 34), 12, cls)
    else:
        rec = ResultRecord("D:36", C1_V, 12, cls)
    with pytest.raises(RecordRejected):
        log.append_result(rec)
    assert not log.path.exists()
