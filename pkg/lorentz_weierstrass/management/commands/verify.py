from django.core.management.base import CommandError

from lorentz_weierstrass import defaults
from lorentz_weierstrass.exceptions import LorentzWeierstrassError
from lorentz_weierstrass.functions import dumps_json
from lorentz_weierstrass.gallery import corrupted_entry
from lorentz_weierstrass.logger import ReportLogger
from lorentz_weierstrass.management.base import ExampleCommand
from lorentz_weierstrass.verification import verify_report


class Command(ExampleCommand):
    help = """Check every invariant of a gallery example against the verification thresholds.

    Exits with status 1 when a check fails."""

    """
    ./manage.py verify --example NAME [--a REAL --b REAL] [--json] [--corrupt]
        [--save-report] [--log-dir DIR]

    Without grid flags the check runs on a small window around the example's base point.
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--json", action="store_true", help="Print the report as JSON")
        parser.add_argument(
            "--corrupt",
            action="store_true",
            help="Replace g by conj(g) first; the report must fail",
        )
        parser.add_argument(
            "--save-report",
            action="store_true",
            help="Save a CSV report into the log directory",
        )
        parser.add_argument(
            "--log-dir",
            type=str,
            help="The directory for CSV reports (default: LORENTZ_WEIERSTRASS_LOG_DIR)",
        )

    def handle(self, *args, **options):
        entry = self.get_entry(options)
        if options["corrupt"]:
            entry = corrupted_entry(entry)
        grid = self.get_grid(entry, options)
        try:
            report = verify_report(entry, grid)
        except LorentzWeierstrassError as error:
            raise CommandError(str(error))

        log_dir = options["log_dir"] or defaults.log_dir()
        logger = ReportLogger(log_dir, example=entry.name, stdout=self.stdout)
        if options["json"]:
            self.stdout.write(dumps_json(report.as_dict()))
            for check in report.checks:
                logger.log_check(check, progress=False)
        else:
            self.stdout.write(
                self.style.NOTICE(
                    f"Verifying {entry.name} on {grid.nx}x{grid.ny} nodes, "
                    f"{report.valid_nodes} valid"
                )
            )
            for check in report.checks:
                logger.log_check(check)
            for note in report.notes:
                self.stdout.write(self.style.WARNING(f"Note: {note}"))
            logger.output_verify_summary()

        if options["save_report"]:
            if not log_dir:
                self.stdout.write(
                    self.style.WARNING(
                        "No report saved: set --log-dir or LORENTZ_WEIERSTRASS_LOG_DIR"
                    )
                )
            else:
                file_name = logger.save_csv_verify_report()
                self.stderr.write(f"Report saved to {file_name}")

        if not report.passed:
            raise SystemExit(1)
