from django.core.management.base import CommandError

from lorentz_weierstrass.exceptions import LorentzWeierstrassError
from lorentz_weierstrass.exporters import FORMATS, OBJ, render_mesh
from lorentz_weierstrass.management.base import ExampleCommand


class Command(ExampleCommand):
    help = """Integrate a gallery example over a grid and write the mesh as OBJ or CSV."""

    """
    ./manage.py mesh --example NAME [--a REAL --b REAL] --nx INT --ny INT
        [--domain X0,X1,Y0,Y1] --out PATH --format obj|csv
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("-o", "--out", type=str, required=True, help="The mesh file to write")
        parser.add_argument(
            "-f", "--format", type=str, choices=FORMATS, default=OBJ, help="The mesh file format"
        )

    def handle(self, *args, **options):
        entry = self.get_entry(options)
        grid = self.get_grid(entry, options)
        try:
            summary = render_mesh(entry, grid, options["out"], options["format"])
        except LorentzWeierstrassError as error:
            raise CommandError(str(error))
        self.stdout.write(
            self.style.SUCCESS(
                f"Wrote {summary.vertices} vertices and {summary.faces} faces "
                f"({summary.valid_nodes} of {grid.nx * grid.ny} nodes valid) to {summary.path}"
            )
        )
