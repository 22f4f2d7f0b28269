import pytest

from vknot.laurent import LaurentPoly
from vknot.invariants import (
    ClosedForm,
    all_invariants,
    bound_report,
    crossing_lower_bound,
    virtual_crossing_lower_bound,
    span_bounds,
    symmetry_distinctness,
    antireciprocal_family,
    nonreciprocal_family,
    first_bound_family,
    second_bound_family,
)

P = LaurentPoly.from_string

KNOT_4_39 = "O1-O2-O3-U4+U1-U3-O4+U2-"
KNOT_3_2 = "O1-O2+U1-O3-U2+U3-"
TREFOIL = "O1+U2+O3+U1+O2+U3+"

KNOT_4_36 = "O1+O2-O3+U4+U1+U3+O4+U2-"


@pytest.mark.parametrize(
    "knot, c, vc",
    [
        (all_invariants(KNOT_4_39), 4, 3),
        (all_invariants(TREFOIL), 0, 0),
        (all_invariants(""), 0, 0),
        (all_invariants(KNOT_3_2), 2, 1),
        (all_invariants(KNOT_4_36), 3, 2),
    ],
)
def test_lower_bounds(knot, c, vc):
    assert crossing_lower_bound(knot) == c
    assert virtual_crossing_lower_bound(knot) == vc


def test_bound_report_names_sources():
    report = bound_report(all_invariants(KNOT_4_39))
    assert report.crossing_sources == ("W", "I", "II", "III")
    assert report.degrees == {"W": 3, "I": 3, "II": 3, "III": 3}
    assert str(report).startswith("c >= 4 (from W, I, II, III)")
    assert str(bound_report(all_invariants(TREFOIL))) == (
        "no bound: every polynomial vanishes"
    )


def test_bound_report_include_reverse():
    knot = ClosedForm(
        W=P("t^-4-t^2"),
        I=LaurentPoly(),
        II=LaurentPoly(),
        III_representative=LaurentPoly(),
    )
    forward = bound_report(knot)
    assert forward.degrees["W"] == 2
    assert forward.crossing == 5
    assert forward.crossing_sources == ("III",)
    backward = bound_report(knot, include_reverse=True)
    assert backward.degrees["W"] == 4
    assert backward.crossing_sources == ("W", "III")


def test_bound_report_negative_degree():
    knot = ClosedForm(
        W=LaurentPoly(),
        I=P("t^-1-t^-2"),
        II=LaurentPoly(),
        III_representative=LaurentPoly(),
    )
    report = bound_report(knot)
    assert report.degrees["I"] == -1
    assert (report.crossing, report.virtual_crossing) == (0, -1)
    assert report.crossing_sources == ("I",)
    assert str(report) == "c >= 0 (from I); vc >= -1 (from I)"


@pytest.mark.parametrize(
    "knot, expected",
    [
        (all_invariants(KNOT_4_39), (3, 2)),
        (all_invariants(KNOT_3_2), (2, 1)),
        (all_invariants(TREFOIL), (0, 0)),
        (all_invariants(KNOT_4_36), (3, 2)),
    ],
)
def test_span_bounds(knot, expected):
    assert span_bounds(knot) == expected


def test_distinctness_4_39():
    report = symmetry_distinctness(all_invariants(KNOT_4_39))
    assert report.conditions["W(t) != W(1/t)"]
    assert report.distinct
    assert str(report).endswith("eight variants: mutually distinct")


@pytest.mark.parametrize("code", [TREFOIL, "", "O1+U1+"])
def test_distinctness_fails_without_writhe_polynomial(code):
    report = symmetry_distinctness(all_invariants(code))
    assert not report.distinct
    assert not report.conditions["W(t) != W(1/t)"]


def test_distinctness_reciprocal_writhe():
    report = symmetry_distinctness(all_invariants(KNOT_4_36))
    assert not report.distinct
    assert not report.conditions["W(t) != W(1/t)"]


@pytest.mark.parametrize("n", range(1, 7))
def test_antireciprocal_family(n):
    knot = antireciprocal_family(n)
    assert knot.Wbar == 0
    assert knot.W.max_degree() == n + 1
    assert knot.II.is_reciprocal()
    assert knot.III_representative.is_reciprocal()
    assert symmetry_distinctness(knot).distinct


@pytest.mark.parametrize("n", range(3, 9))
def test_nonreciprocal_family(n):
    knot = nonreciprocal_family(n)
    assert knot.W.max_degree() == n - 1
    assert knot.Wbar == P(f"-t^{n - 1}+{n + 1}t-{2 * n}+{n + 1}t^-1-t^-{n - 1}")
    assert knot.II.is_reciprocal()
    report = symmetry_distinctness(knot)
    assert report.distinct
    assert report.conditions["W(t) != -W(1/t) or I(t) != I(1/t)"]


@pytest.mark.parametrize("n", range(1, 7))
def test_first_bound_family(n):
    report = bound_report(first_bound_family(n))
    assert (report.crossing, report.virtual_crossing) == (n + 3, n + 2)
    assert report.crossing_sources == ("I",)


@pytest.mark.parametrize("n", range(1, 7))
def test_second_bound_family(n):
    report = bound_report(second_bound_family(n))
    assert (report.crossing, report.virtual_crossing) == (n + 3, n + 2)
    assert report.crossing_sources == ("II",)


def test_families_reject_small_n():
    with pytest.raises(ValueError):
        antireciprocal_family(0)
    with pytest.raises(ValueError):
        nonreciprocal_family(2)
