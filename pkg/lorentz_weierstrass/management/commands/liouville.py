import numpy as np
from django.core.management.base import CommandError
from prettytable import PrettyTable

from lorentz_weierstrass.exceptions import LorentzWeierstrassError
from lorentz_weierstrass.functions import dumps_json, format_number, parse_reals
from lorentz_weierstrass.liouville import (
    band_residual_profile,
    lambda_from_chart,
    liouville_residual,
)
from lorentz_weierstrass.management.base import ExampleCommand


class Command(ExampleCommand):
    help = """Evaluate the Liouville solution lambda of a gallery example and its residual."""

    """
    ./manage.py liouville --example NAME [--a REAL --b REAL] [--json] [--bands E0,E1,...]
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--json", action="store_true", help="Print the lambda field and residual as JSON"
        )
        parser.add_argument(
            "--bands",
            type=str,
            help="Bin the residual by the distance |g conj(g) - eps|, edges as E0,E1,...",
        )

    def handle(self, *args, **options):
        entry = self.get_entry(options)
        grid = self.get_grid(entry, options)
        chart = entry.chart
        try:
            lam = lambda_from_chart(chart, grid)
            residual = liouville_residual(lam, chart.eps)
            profile = []
            if options["bands"]:
                edges = parse_reals(options["bands"], name="bands")
                profile = band_residual_profile(chart.g, chart.g_prime, chart.eps, grid, edges)
        except LorentzWeierstrassError as error:
            raise CommandError(str(error))

        reference = None
        if entry.reference_lambda is not None:
            x, y = grid.mesh()
            with np.errstate(all="ignore"):
                exact = entry.reference_lambda(x, y)
            reference = float(np.max(np.abs(lam.values - exact)[lam.mask]))

        if options["json"]:
            self.stdout.write(
                dumps_json(
                    {
                        "example": entry.name,
                        "eps": entry.eps,
                        "residual": residual,
                        "reference_deviation": reference,
                        "bands": [
                            {"low": low, "high": high, "max_residual": worst, "nodes": count}
                            for low, high, worst, count in profile
                        ],
                        "x": grid.xs,
                        "y": grid.ys,
                        "lambda": np.where(lam.mask, lam.values, np.nan),
                    }
                )
            )
            return

        table = PrettyTable()
        table.field_names = ["Example", "Nodes", "Valid", "Liouville residual", "Reference deviation"]
        table.add_row(
            [
                entry.name,
                grid.nx * grid.ny,
                int(np.count_nonzero(lam.mask)),
                format_number(residual),
                "-" if reference is None else format_number(reference),
            ]
        )
        self.stdout.write(str(table))
        if profile:
            bands = PrettyTable()
            bands.field_names = ["From", "To", "Max residual", "Nodes"]
            for low, high, worst, count in profile:
                bands.add_row([format_number(low), format_number(high), format_number(worst), count])
            self.stdout.write(str(bands))
