import json

import pytest

from mzv_utilities.common import MZVUtilitiesError
from mzv_utilities.constants import REPORT_VERSION
from mzv_utilities.reports import (
    FAIL,
    PASS,
    CheckResult,
    build_report,
    render_number,
    summarize_by_family,
    write_report,
)


def real_result(
    instance_id="ohno/k=2/m=1", family="ohno", status=PASS, difference=1e-7
):
    return CheckResult(
        instance_id=instance_id,
        family=family,
        params={"k": (2,), "m": 1},
        space="real_zeta",
        lhs_expr="(3)",
        rhs_expr="(1,2)",
        status=status,
        lhs=1.2020559,
        rhs=1.2020558,
        difference=difference,
        tolerance=1e-4,
        lhs_err=2e-12,
        rhs_err=3e-5,
    )


def modp_result(instance_id="star_ones/i=2", witnesses=()):
    return CheckResult(
        instance_id=instance_id,
        family="star_ones",
        params={"i": 2},
        space="finite_zeta_star",
        lhs_expr="(1,1)",
        rhs_expr="0",
        status=FAIL if witnesses else PASS,
        lhs=witnesses[0]["lhs"] if witnesses else None,
        rhs=witnesses[0]["rhs"] if witnesses else None,
        primes_checked=(5, 7, 11),
        witnesses=list(witnesses),
    )


def test_render_number():
    "Show floats use the shortest round-trip text and ints are exact"
    assert render_number(0.1) == "0.1"
    assert render_number(1e-17) == "1e-17"
    assert render_number(2 ** 70) == "1180591620717411303424"
    assert render_number(None) is None


class TestToDict:
    def test_real(self):
        record = real_result().to_dict()
        assert record["id"] == "ohno/k=2/m=1"
        assert record["params"] == {"k": "2", "m": "1"}
        assert record["difference_or_witness"] == "1e-07"
        assert record["tolerance"] == "0.0001"
        assert record["prime_range"] is None
        assert record["status"] == PASS

    def test_modp_witnesses(self):
        record = modp_result(witnesses=[{"p": 7, "lhs": 3, "rhs": 0}]).to_dict()
        assert record["difference_or_witness"] == [{"p": "7", "lhs": "3", "rhs": "0"}]
        assert record["primes_checked"] == "3"
        assert record["prime_range"] == "5..11"
        assert record["lhs_value"] == "3"
        assert record["status"] == FAIL


class TestBuildReport:
    def test_sorted_with_summary(self):
        results = [
            real_result("ohno/k=3/m=0"),
            real_result("ohno/k=2/m=1", status=FAIL),
            modp_result(),
        ]
        report = build_report(results, {"N": 100})
        assert report["version"] == REPORT_VERSION
        assert report["config"] == {"N": 100}
        assert [r["id"] for r in report["results"]] == [
            "ohno/k=2/m=1",
            "ohno/k=3/m=0",
            "star_ones/i=2",
        ]
        assert report["summary"]["total"] == 3
        assert report["summary"]["passed"] == 2
        assert report["summary"]["failed"] == 1
        assert report["summary"]["families"]["ohno"] == {
            "checked": 2,
            "passed": 1,
            "failed": 1,
        }

    def test_duplicate_ids(self):
        with pytest.raises(MZVUtilitiesError):
            build_report([real_result(), real_result()], {})

    def test_empty(self):
        report = build_report([], {})
        assert report["summary"] == {
            "total": 0,
            "passed": 0,
            "failed": 0,
            "families": {},
        }


def test_write_report(tmp_path):
    "Show reports are sorted, indented JSON ending in a newline"
    out = tmp_path / "nested" / "report.json"
    write_report(build_report([real_result()], {"N": 10}), out)
    text = out.read_text()
    assert text.endswith("}\n")
    assert json.loads(text)["results"][0]["family"] == "ohno"
    keys = [line.strip().split('"')[1] for line in text.splitlines()[1:5]]
    assert keys == sorted(keys)


def test_summarize_by_family():
    results = [
        real_result("ohno/a", difference=1e-6),
        real_result("ohno/b", difference=3e-6),
        real_result("ohno_star/a", family="ohno_star", status=FAIL),
    ]
    summary = summarize_by_family(results)
    assert list(summary["family"]) == ["ohno", "ohno_star"]
    assert list(summary["checked"]) == [2, 1]
    assert list(summary["failed"]) == [0, 1]
    assert summary.loc[0, "max_difference"] == pytest.approx(3e-6)
    assert summarize_by_family([]).empty
