from django.core.management.base import BaseCommand
from prettytable import PrettyTable

from lorentz_weierstrass.gallery import FIGURE_PARAMETERS, list_examples


class Command(BaseCommand):
    help = """List the gallery examples with their causal type and parameter constraints."""

    def handle(self, *args, **options):
        table = PrettyTable()
        table.field_names = ["Name", "eps", "Parameters", "Constraint", "Figure a", "Description"]
        table.align = "l"
        for family in list_examples():
            table.add_row(
                [
                    family.name,
                    f"{family.eps:+d}",
                    ", ".join(family.param_names) or "-",
                    family.constraint or "-",
                    ", ".join(f"{a:g}" for a in FIGURE_PARAMETERS.get(family.name, ())) or "-",
                    family.verbose_name,
                ]
            )
        self.stdout.write(str(table))
