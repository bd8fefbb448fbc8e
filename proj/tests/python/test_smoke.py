import os
import pathlib

import pytest

import puritylab

DATA = pathlib.Path(os.environ.get("PURITYLAB_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def fixture(name):
    return (DATA / name).read_text()


def test_algebra_arithmetic():
    r = puritylab.Algebra.named("squareZero(2,2)")
    assert (r.dim, r.q, r.radical_dim) == (3, 2, 2)
    a, b = r.parse("a"), r.parse("b")
    assert r.multiply(a, b) == [0, 0, 0]
    assert r.is_unit(r.parse("1+a"))
    assert not r.is_unit(a)
    assert r.format(r.parse("a+b")) == "a+b"


def test_not_local_is_an_error():
    with pytest.raises(puritylab.Error) as info:
        puritylab.Algebra.named("chain(4,2)")
    assert info.value.code == "NonPrimeCharacteristic"


def test_staircase_and_duals():
    r = puritylab.Algebra.named("squareZero(2,2)")
    w = puritylab.warfield_module(r, 1, 2, 3)
    assert (w.gen, w.rel) == (2, 3)
    d = puritylab.auslander_bridger_dual(w)
    assert (d.gen, d.rel) == (3, 2)
    assert puritylab.auslander_bridger_dual(d).is_isomorphic(w)
    assert puritylab.linear_dual(puritylab.linear_dual(w)).is_isomorphic(w)
    with pytest.raises(puritylab.Error) as info:
        puritylab.auslander_bridger_dual(puritylab.free_module(r, 1))
    assert info.value.code == "HasFreeSummand"


def test_module_checks():
    r = puritylab.Algebra.named("squareZero(2,2)")
    k = puritylab.residue_field(r)
    assert puritylab.check_module(puritylab.free_module(r, 2), "flat", 2, 2)["verdict"] == "pass"
    rep = puritylab.check_module(k, "flat", 1, 1)
    assert rep["verdict"] == "fail"
    assert rep["witness"] is not None
    assert puritylab.check_module(k, "end-local")["verdict"] == "pass"


def test_workspace_fixture_passes():
    doc = puritylab.run_workspace(fixture("prop48.toml"))
    assert doc["verdict"] == "pass"
    assert doc["summary"]["claims"] == len(doc["claims"]) == 4


def test_single_check_and_replay():
    text = fixture("prop48.toml")
    doc = puritylab.check(text, "flat", "M", 1, 2)
    assert doc["verdict"] == "fail"
    assert puritylab.replay(text, doc) == {"flat": True}
    assert puritylab.check(text, "flat", "M", "inf", 1)["verdict"] == "pass"


def test_reports_are_thread_independent():
    one = puritylab.run_suite("prop-4-8", threads=1)
    four = puritylab.run_suite("prop-4-8", threads=4)
    assert one == four
    assert one["verdict"] == "pass"
    assert "threads" not in one["settings"]


def test_registry_and_errors():
    assert len(puritylab.suite_names()) == 14
    assert ("purity", "inclusion") in puritylab.query_kinds()
    with pytest.raises(puritylab.Error) as info:
        puritylab.run_suite("prop-0-0")
    assert info.value.code == "UnknownSuite"
    with pytest.raises(puritylab.Error) as info:
        puritylab.run_workspace("[ring.R]\nfamily = \"squareZero\"\nq = 2\nt = 2\nbogus = 1\n")
    assert info.value.code == "ParseError"
    assert "line 5" in str(info.value)
    with pytest.raises(puritylab.Error):
        puritylab.run_suite("prop-4-8", threads=100000)
