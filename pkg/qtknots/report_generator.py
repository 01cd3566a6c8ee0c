"""
Report generation module for qtknots

Writes a markdown report of a verification run: configuration, a summary
table, one row per check, and a separate section for reported conjecture
scans, which never affect the exit status.
"""

import os
from collections import defaultdict


def format_stat(value):
    """Formats statistics (numbers, percentages, N/A) for display in the report."""
    if value is None:
        return "N/A"
    elif value == -1:
        return "N/A"
    elif isinstance(value, float):
        return f"{value:.2f}%"
    else:
        try:
            return f"{value:,}"
        except (ValueError, TypeError):
            return str(value)


def _escape(text: str) -> str:
    """Keep table cells on one line and free of column separators."""
    return str(text).replace("|", "\\|").replace("\n", " ")


def generate_report(report_filename: str, stats: dict):
    """
    Generates a markdown report file summarizing a verification run.

    Args:
        report_filename: The path where the markdown report will be saved.
        stats: A dictionary with the run configuration and the list of
            CheckResult records under "results".
    """
    report_dir = os.path.dirname(report_filename)
    if report_dir and not os.path.exists(report_dir):
        os.makedirs(report_dir)

    results = stats.get("results", [])
    gating = [r for r in results if r.gating]
    reported = [r for r in results if not r.gating]
    by_suite = defaultdict(list)
    for r in gating:
        by_suite[r.suite].append(r)

    with open(report_filename, "w", encoding="utf-8") as f:
        # --- Report Header ---
        f.write("# qtknots Verification Report\n\n")
        f.write(f"**Run Timestamp:** {stats.get('timestamp', 'N/A')}\n")
        f.write(f"**Version:** `{stats.get('version', 'N/A')}`\n")
        suites = stats.get("suites", [])
        f.write(f"**Suites:** {', '.join(f'`{name}`' for name in suites) if suites else 'None'}\n\n")

        # --- Configuration ---
        f.write("## Configuration\n")
        f.write(f"- **Cache Directory:** `{stats.get('cache_dir', 'N/A')}`\n")
        f.write(f"- **Cache Enabled:** {'Yes' if stats.get('cache_enabled') else 'No'}\n")
        f.write(f"- **Jobs:** {format_stat(stats.get('jobs'))}\n")
        f.write(f"- **Max Degree:** {format_stat(stats.get('max_degree'))}\n")
        f.write(f"- **Config File:** `{stats.get('config_file') or 'defaults'}`\n\n")

        # --- Summary ---
        passed = sum(1 for r in gating if r.passed)
        failed = len(gating) - passed
        pass_rate = (passed / len(gating) * 100) if gating else -1
        f.write("## Summary\n")
        f.write("| Metric | Value |\n")
        f.write("|--------|------:|\n")
        f.write(f"| Gating Checks | {format_stat(len(gating))} |\n")
        f.write(f"| Passed | {format_stat(passed)} |\n")
        f.write(f"| Failed | {format_stat(failed)} |\n")
        f.write(f"| Pass Rate | {format_stat(pass_rate)} |\n")
        f.write(f"| Reported Scans | {format_stat(len(reported))} |\n")
        f.write(f"| Total Time | {stats.get('total_time', 0):.2f} seconds |\n\n")

        status = "PASS" if failed == 0 else "FAIL"
        f.write(f"**Overall Status:** {status}\n\n")

        # --- Checks by suite ---
        f.write("## Checks\n")
        if not gating:
            f.write("No gating checks were run.\n\n")
        for suite, rows in by_suite.items():
            f.write(f"### {suite}\n")
            f.write("| Check | Status | Gating | Elapsed (s) | Detail |\n")
            f.write("|-------|--------|--------|------------:|--------|\n")
            for r in rows:
                f.write(f"| `{r.name}` | {'PASS' if r.passed else 'FAIL'} | yes | {r.elapsed:.2f} | {_escape(r.detail)} |\n")
            f.write("\n")

        # --- Reported conjecture scans ---
        f.write("## Reported Scans\n")
        if not reported:
            f.write("No reported scans were run.\n\n")
        else:
            f.write("These scans record observations only and never change the exit status.\n\n")
            f.write("| Suite | Scan | Holds | Gating | Elapsed (s) | Detail |\n")
            f.write("|-------|------|-------|--------|------------:|--------|\n")
            for r in reported:
                f.write(f"| {r.suite} | `{r.name}` | {'yes' if r.passed else 'no'} | no | {r.elapsed:.2f} | {_escape(r.detail)} |\n")
            f.write("\n")

        # --- Failures ---
        failures = [r for r in gating if not r.passed]
        if failures:
            f.write("## Failures\n")
            for r in failures:
                f.write(f"- **{r.suite} / {r.name}:** {r.detail}\n")
            f.write("\n")

        f.write("---\n")
        f.write("*Report generated by qtknots*\n")
