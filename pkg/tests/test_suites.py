import json

import pytest

from iterant.errors import IterantError
from iterant.suites import run_suite


@pytest.mark.parametrize("name", ["core", "matrix-iso", "quaternions", "fermion", "majorana",
                                  "parafermion:2", "parafermion:3", "parafermion:7", "braids"])
def test_suite_passes(name):
    report = run_suite(name)
    assert report.passed, report.text()


def test_su3_suite_fails_only_on_known_checks():
    report = run_suite("su3")
    failed = [c.name for c in report.checks if not c.passed]
    assert failed == ["f156 = -1/2", "f257 = 1/2", "f345 = 1/2", "Cartan-Weyl Y: combination equals iterant form"]
    assert "derived f table" in report.data


def test_braids_suite_records_expected_failure_and_crossing_local():
    report = run_suite("braids")
    flagged = [c for c in report.checks if c.expected_failure]
    assert len(flagged) == 1 and flagged[0].passed
    assert report.data["crossing-local reading"] == "braid relation holds"


def test_reports_are_deterministic():
    a = json.dumps(run_suite("braids").as_dict(timestamp=False), default=str)
    b = json.dumps(run_suite("braids").as_dict(timestamp=False), default=str)
    assert a == b


def test_unknown_suite():
    with pytest.raises(IterantError):
        run_suite("nope")
