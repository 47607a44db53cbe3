import json
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd

from .common import MZVUtilitiesError
from .constants import EMPTY_INDEX_TEXT, REPORT_VERSION, TOOL_VERSION
from .index_core import format_index
from .logger import logger

PASS = "pass"
FAIL = "fail"


def status_for(passed):
    return PASS if passed else FAIL


def render_number(value):
    """Shortest round-trip text for floats, exact text for ints; None stays None"""
    if value is None:
        return None
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_param(value):
    if isinstance(value, tuple):
        return format_index(value) or EMPTY_INDEX_TEXT
    return str(value)


@dataclass
class CheckResult:
    """Outcome of checking one relation instance

    Real checks fill lhs, rhs, difference, tolerance and the two error
    estimates. Finite checks fill primes_checked and, on failure, witnesses:
    one {"p", "lhs", "rhs"} record per failing prime, with lhs/rhs holding the
    residues at the first of them.
    """

    instance_id: str
    family: str
    params: dict
    space: str
    lhs_expr: str
    rhs_expr: str
    status: str
    lhs: object = None
    rhs: object = None
    difference: float = None
    tolerance: float = None
    lhs_err: float = None
    rhs_err: float = None
    primes_checked: tuple = ()
    witnesses: list = field(default_factory=list)

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        if self.primes_checked:
            difference_or_witness = [
                {key: render_number(value) for (key, value) in witness.items()}
                for witness in self.witnesses
            ]
            prime_range = f"{self.primes_checked[0]}..{self.primes_checked[-1]}"
        else:
            difference_or_witness = render_number(self.difference)
            prime_range = None
        return {
            "id": self.instance_id,
            "family": self.family,
            "params": {name: render_param(v) for (name, v) in self.params.items()},
            "space": self.space,
            "lhs": self.lhs_expr,
            "rhs": self.rhs_expr,
            "lhs_value": render_number(self.lhs),
            "rhs_value": render_number(self.rhs),
            "difference_or_witness": difference_or_witness,
            "tolerance": render_number(self.tolerance),
            "lhs_err": render_number(self.lhs_err),
            "rhs_err": render_number(self.rhs_err),
            "primes_checked": render_number(len(self.primes_checked)),
            "prime_range": prime_range,
            "status": self.status,
        }


def summarize_by_family(results):
    """One row per family: checked, passed, failed and the largest real difference

    Args:
        results (list): CheckResult records

    Returns:
        pandas.DataFrame: sorted by family
    """
    columns = ["family", "checked", "passed", "failed", "max_difference"]
    if not results:
        return pd.DataFrame(columns=columns)
    df = pd.DataFrame(
        [
            {
                "family": result.family,
                "passed": int(result.passed),
                "difference": result.difference,
            }
            for result in results
        ]
    )
    df["difference"] = df["difference"].astype(float)
    summary = (
        df.groupby("family")
        .agg(
            checked=("passed", "size"),
            passed=("passed", "sum"),
            max_difference=("difference", "max"),
        )
        .reset_index()
    )
    summary["failed"] = summary["checked"] - summary["passed"]
    return summary[columns].sort_values("family").reset_index(drop=True)


def log_summary(results):
    summary = summarize_by_family(results)
    if summary.empty:
        logger.info("No relation instances were checked")
        return summary
    logger.info(f"Summary by family:\n{summary.to_string(index=False)}")
    return summary


def build_report(results, config):
    """Assemble the report dict: results sorted by id, summary counts, config echo

    Args:
        results (list): CheckResult records with unique instance ids
        config (dict): The effective sweep settings, echoed verbatim

    Returns:
        dict: version, tool_version, config, results, summary
    """
    ordered = sorted(results, key=lambda result: result.instance_id)
    ids = [result.instance_id for result in ordered]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        message = f"Duplicate instance ids in report: {', '.join(duplicates)}"
        logger.error(message)
        raise MZVUtilitiesError(message, {"duplicates": duplicates})
    passed = sum(1 for result in ordered if result.passed)
    families = {}
    for row in summarize_by_family(ordered).to_dict(orient="records"):
        families[row["family"]] = {
            "checked": int(row["checked"]),
            "passed": int(row["passed"]),
            "failed": int(row["failed"]),
        }
    return {
        "version": REPORT_VERSION,
        "tool_version": TOOL_VERSION,
        "config": config,
        "results": [result.to_dict() for result in ordered],
        "summary": {
            "total": len(ordered),
            "passed": passed,
            "failed": len(ordered) - passed,
            "families": families,
        },
    }


def write_report(report, out_path):
    """Write `report` as sorted, indented JSON with a trailing newline"""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w") as f:
        json.dump(report, f, sort_keys=True, indent=2)
        # Add newline to end of file
        f.write("\n")
    logger.info(f"Wrote report with {report['summary']['total']} results to {out_path}")
    return out_path


def write_table(df, out_path):
    """Write a diagnostic table as CSV (for a .csv path) or as JSON records"""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    if out_path.suffix.lower() == ".csv":
        df.to_csv(out_path, index=False)
    else:
        with open(out_path, "w") as f:
            json.dump(df.to_dict(orient="records"), f, sort_keys=True, indent=2)
            f.write("\n")
    logger.info(f"Wrote {len(df)} rows to {out_path}")
    return out_path
