import csv
import os
import sys
from datetime import datetime

from lorentz_weierstrass.functions import format_number


class ReportLogger:
    def __init__(self, logdir, example="", stdout=None):
        self.logdir = logdir
        self.example = example
        self.stdout = stdout or sys.stdout
        self.checked = 0
        self.passed = 0
        self.failed = 0
        self.items = []

    def log_check(self, check, progress=True):
        self.checked += 1
        if check.passed:
            self.passed += 1
        else:
            self.failed += 1
        self.items.append(
            {
                "name": check.name,
                "value": format_number(check.value),
                "threshold": format_number(check.threshold),
                "result": "pass" if check.passed else "FAIL",
                "reason": check.error,
            }
        )
        if progress:
            self.log_progress()

    def log_progress(self):
        item = self.items[-1]
        line = f"{item['name']}: {item['value']} <= {item['threshold']}, {item['result']}"
        if item["reason"]:
            line += f" ({item['reason']})"
        self.stdout.write(line + "\n")

    def get_items_report_data(self):
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "items": self.items,
        }

    def output_verify_summary(self):
        self.stdout.write("Summary ========================\n")
        self.stdout.write(
            f"Checked: {self.checked} Passed: {self.passed} Failed: {self.failed}\n"
        )
        if self.failed == 0:
            self.stdout.write("✅ All checks passed\n")
        else:
            self.stdout.write(f"⚠️ {self.failed} checks failed\n")

    def save_csv_verify_report(self):
        if not self.logdir:
            return None
        os.makedirs(self.logdir, exist_ok=True)
        file_name = os.path.join(
            self.logdir,
            f"verify-report-{self.example}-{datetime.now().strftime('%Y%m%d-%H%M%S')}.csv",
        )

        with open(file_name, "w", newline="") as csvfile:
            writer = csv.DictWriter(
                csvfile,
                fieldnames=["name", "value", "threshold", "result", "reason"],
            )
            writer.writerow(
                {
                    "name": "Check",
                    "value": "Value",
                    "threshold": "Threshold",
                    "result": "Result",
                    "reason": "Reason for result ->",
                }
            )
            for row in self.items:
                writer.writerow(row)
        return file_name
