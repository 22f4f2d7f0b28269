import io
import json
import logging
from types import SimpleNamespace

import pandas as pd
import pytest

from vknot.exceptions import CatalogError, VirtualKnotError
from vknot.knotcli import (
    Catalog,
    KnotRecord,
    compute_table,
    distinguish,
    load_catalog,
    load_fixture_catalog,
    write_table,
)
from vknot.knotcli import _catalog
from vknot.diagram import parse
from vknot.laurent import LaurentClass, LaurentPoly

P = LaurentPoly.from_string

CLASSICAL = ["unknot", "trefoil", "mirror-trefoil", "figure-eight", "cinquefoil"]

# Published values of W, I, II and III, keyed by the names of Green's table.
PUBLISHED = {
    "3.2": ("-t+2-t^-1", "-t+2-t^-1", "-2t+4-2t^-1", "t-2+t^-1"),
    "4.13": ("0", "0", "0", "2t-4+2t^-1"),
    "4.16": ("0", "-t^2+3t-3+t^-1", "0", "0"),
    "4.33": ("-t+2-t^-1", "-t+2-t^-1", "t^2-6t+10-6t^-1+t^-2", "t-2+t^-1"),
    "4.36": ("t^2-2+t^-2", "-t^2+2-t^-2", "-2t^2+4-2t^-2", "t^2-2+t^-2"),
    "4.65": ("-t^2+2-t^-2", "-t^2+2-t^-2", "-2t^2+4-2t^-2", "t^2-2+t^-2"),
    "4.39": (
        "-t^3+t^2+1-t^-1",
        "-2t^3+4t^2-2t",
        "-t^3+2t^2-3t+4-3t^-1+2t^-2-t^-3",
        "-t+2-t^-1",
    ),
    "unknot": ("0", "0", "0", "0"),
}


def _published(name):
    W, I, II, III = (P(value) for value in PUBLISHED[name])
    return SimpleNamespace(
        W=W, I=I, II=II, III=LaurentClass(III, W + W.substitute_inverse())
    )


def _write(tmp_path, text):
    path = tmp_path / "catalog.tsv"
    path.write_text(text, encoding="utf-8")
    return path


def test_load_empty(tmp_path):
    assert len(load_catalog(_write(tmp_path, ""))) == 0
    assert len(load_catalog(_write(tmp_path, "# only a comment\n\n"))) == 0


def test_load_catalog(tmp_path):
    catalog = load_catalog(_write(tmp_path, "# knots\n3.x\tO1+U2+O3+U1+O2+U3+\n"))
    assert catalog.names == ["3.x"]
    assert catalog["3.x"].code == parse("O1+U2+O3+U1+O2+U3+")
    assert catalog[0].code.n == 3


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("a\tO1+U1+\n\nb\tO1+X1+\n", 3),
        ("a\tO1+U1+\nb O1+U1+\n", 2),
        ("\tO1+U1+\n", 1),
        ("a\tO1+U1+\n# again\na\tO1-U1-\n", 3),
    ],
)
def test_load_catalog_errors(tmp_path, text, lineno):
    with pytest.raises(CatalogError) as error:
        load_catalog(_write(tmp_path, text))
    assert error.value.lineno == lineno
    assert str(error.value).startswith(f"line {lineno}:")


def test_catalog_rejects_duplicates():
    record = KnotRecord("a", parse(""))
    with pytest.raises(CatalogError):
        Catalog([record, record])


def test_fixture_catalog():
    catalog = load_fixture_catalog()
    assert catalog.names[0] == "unknot"
    assert {"trefoil", "3.2", "4.39"} <= set(catalog.names)
    frame = catalog.to_frame()
    assert list(frame.columns) == ["name", "gauss_code", "n"]
    assert frame.set_index("name").loc["4.39", "n"] == 4


@pytest.mark.parametrize("name", sorted(PUBLISHED))
def test_published_values(name):
    s = load_fixture_catalog()[name].invariants
    expected = _published(name)
    assert s.W == expected.W
    assert s.I == expected.I
    assert s.II == expected.II
    assert s.III == expected.III


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ("4.36", "4.65", "W differs; I, II, III equal"),
        ("unknot", "4.16", "I differs; W, II, III equal"),
        ("3.2", "4.33", "II differs; W, I, III equal"),
        ("unknot", "4.13", "III differs; W, I, II equal"),
    ],
)
def test_distinguish_published_pairs(first, second, expected):
    catalog = load_fixture_catalog()
    a, b = catalog[first].invariants, catalog[second].invariants
    assert str(distinguish(a, b)) == expected
    assert distinguish(b, a) == distinguish(a, b)
    assert distinguish(a, b).distinguished
    assert distinguish(_published(first), _published(second)) == distinguish(a, b)


def test_distinguish_same_knot():
    s = load_fixture_catalog()["4.39"].invariants
    report = distinguish(s, s)
    assert not report.distinguished
    assert str(report) == "W, I, II, III equal"


def test_compute_table_classical():
    records = compute_table(load_fixture_catalog())
    by_name = {record["name"]: record for record in records}
    for name in CLASSICAL:
        record = by_name[name]
        for key in ["W", "Wbar", "I", "II", "III_representative"]:
            assert record[key] == "0"
    assert by_name["4.39"]["I"] == "-2t^3+4t^2-2t"
    assert by_name["4.39"]["III_representative"] == "-t+2-t^-1"


def test_compute_table_parallel_matches_serial():
    catalog = load_fixture_catalog()
    serial = compute_table(catalog, n_jobs=1)
    parallel = compute_table(load_fixture_catalog(), n_jobs=2)
    assert serial == parallel
    assert [r["name"] for r in parallel] == catalog.names


def test_compute_table_keeps_going(monkeypatch, caplog):
    original = _catalog.all_invariants

    def failing(d):
        if d.n == 5:
            raise VirtualKnotError("boom")
        return original(d)

    monkeypatch.setattr(_catalog, "all_invariants", failing)
    with caplog.at_level(logging.WARNING, logger="vknot.knotcli"):
        records = compute_table(load_fixture_catalog())

    failed = [r["name"] for r in records if "error" in r]
    assert failed == ["cinquefoil"]
    assert len(records) == len(load_fixture_catalog())
    assert any("cinquefoil" in r.getMessage() for r in caplog.records)


def test_write_table_json():
    records = compute_table(load_fixture_catalog())
    stream = io.StringIO()
    write_table(records, "json", stream)
    lines = stream.getvalue().splitlines()
    assert [json.loads(line) for line in lines] == records


def test_write_table_csv():
    records = compute_table(load_fixture_catalog())
    stream = io.StringIO()
    write_table(records, "csv", stream)
    stream.seek(0)
    frame = pd.read_csv(stream, dtype=str, keep_default_na=False)
    assert list(frame["name"]) == [r["name"] for r in records]
    assert "III_modulus" in frame.columns


def test_write_table_appendix():
    records = compute_table(load_fixture_catalog())
    stream = io.StringIO()
    write_table(records, "appendix", stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "name\tW\tWbar\tI\tII\tIII"
    assert (
        "4.39\t{-1}(-1+1+0+1-1)\t[2-1+1-1\t{1}(-2+4-2)\t[4-3+2-1\t[2-1" in lines
    )
    assert "trefoil\t0\t0\t0\t0\t0" in lines


def test_write_table_unknown_format():
    with pytest.raises(ValueError):
        write_table([], "xml", io.StringIO())
