import pytest
from sklearn.utils import check_random_state

from vknot.diagram import random_diagram
from vknot.invariants import IdentityReport, identity_check, symmetry_identity_check

RNG_SEED = 123
N_DIAGRAMS = 10_000

KNOT_4_39 = "O1-O2-O3-U4+U1-U3-O4+U2-"
CLASSICAL = [
    "O1+U2+O3+U1+O2+U3+",
    "O1+U2-O3-U1+O4+U3-O2-U4+",
]


@pytest.mark.parametrize("code", ["", KNOT_4_39, "O1-O2+U1-O3-U2+U3-"] + CLASSICAL)
def test_fixtures(code):
    assert symmetry_identity_check(code).holds
    assert identity_check(code).holds


def test_random_diagrams():
    rng = check_random_state(RNG_SEED)
    for _ in range(N_DIAGRAMS):
        d = random_diagram(rng.randint(0, 9), rng)
        report = identity_check(d)
        assert report.holds, (d, report.failures())
        report = symmetry_identity_check(d)
        assert report.holds, (d, report.failures())


def test_report():
    report = IdentityReport({"a = a": True, "a = b": False})
    assert not report
    assert report.failures() == ["a = b"]
    assert str(report) == "ok   a = a\nFAIL a = b"
