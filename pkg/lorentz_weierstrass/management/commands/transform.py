from django.core.management.base import CommandError
from prettytable import PrettyTable

from lorentz_weierstrass.exceptions import LorentzWeierstrassError
from lorentz_weierstrass.exporters import FORMATS, OBJ, render_mesh
from lorentz_weierstrass.functions import dumps_json, format_number, parse_reals
from lorentz_weierstrass.management.base import ExampleCommand
from lorentz_weierstrass.mobius import (
    AxisAngle,
    classify_rotation,
    from_axis_angle,
    to_rotation,
)
from lorentz_weierstrass.verification import transform_report


class Command(ExampleCommand):
    help = """Move a gallery example by the rotation about an axis and a translation,
    write the moved mesh and check that the moved surface keeps its invariants.

    Exits with status 1 when a check fails."""

    """
    ./manage.py transform --example NAME --axis P,Q,R --theta REAL
        [--translate T1,T2,T3] --out PATH [--format obj|csv] [--json]
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--axis", type=str, required=True, help="The rotation axis as P,Q,R"
        )
        parser.add_argument("--theta", type=float, required=True, help="The rotation angle")
        parser.add_argument(
            "--translate", type=str, help="The translation vector as T1,T2,T3"
        )
        parser.add_argument("-o", "--out", type=str, required=True, help="The mesh file to write")
        parser.add_argument(
            "-f", "--format", type=str, choices=FORMATS, default=OBJ, help="The mesh file format"
        )
        parser.add_argument("--json", action="store_true", help="Print the report as JSON")

    def handle(self, *args, **options):
        entry = self.get_entry(options)
        grid = self.get_grid(entry, options)
        try:
            axis = AxisAngle.from_direction(
                parse_reals(options["axis"], 3, name="axis"), options["theta"]
            )
            translation = None
            if options["translate"]:
                translation = parse_reals(options["translate"], 3, name="translation")
            T = from_axis_angle(axis, entry.eps)
            rotation = to_rotation(T)
            summary = render_mesh(
                entry,
                grid,
                options["out"],
                options["format"],
                rotation=rotation,
                translation=translation,
            )
            report = transform_report(entry, T, grid=grid, translation=translation)
        except LorentzWeierstrassError as error:
            raise CommandError(str(error))

        if options["json"]:
            data = report.as_dict()
            data["rotation"] = {
                "kind": classify_rotation(axis).value,
                "axis": axis.L,
                "theta": axis.theta,
                "matrix": rotation,
                "translation": list(translation or (0.0, 0.0, 0.0)),
            }
            data["mesh"] = {
                "path": summary.path,
                "vertices": summary.vertices,
                "faces": summary.faces,
            }
            self.stdout.write(dumps_json(data))
        else:
            self.stdout.write(
                self.style.SUCCESS(
                    f"Wrote the {classify_rotation(axis).value} rotation of {entry.name} "
                    f"({summary.vertices} vertices, {summary.faces} faces) to {summary.path}"
                )
            )
            table = PrettyTable()
            table.field_names = ["Check", "Value", "Threshold", "Result"]
            for check in report.checks:
                table.add_row(
                    [
                        check.name,
                        format_number(check.value),
                        format_number(check.threshold),
                        "pass" if check.passed else "FAIL",
                    ]
                )
            self.stdout.write(str(table))

        if not report.passed:
            for check in report.failures:
                self.stdout.write(self.style.ERROR(f"{check.name} failed {check.error}".strip()))
            raise SystemExit(1)
