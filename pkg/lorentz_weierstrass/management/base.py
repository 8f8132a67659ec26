from django.core.management.base import BaseCommand, CommandError

from lorentz_weierstrass.algebra.grid import GridSpec
from lorentz_weierstrass.exceptions import LorentzWeierstrassError
from lorentz_weierstrass.functions import parse_domain
from lorentz_weierstrass.gallery import get_example

DEFAULT_NODES = 201


class ExampleCommand(BaseCommand):
    """
    Base for the commands working on one gallery example:

        --example NAME [--a REAL] [--b REAL] [--domain X0,X1,Y0,Y1] [--nx INT] [--ny INT]

    Library errors are reported as CommandError.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "-e",
            "--example",
            type=str,
            required=True,
            help="The gallery example to use, see the list command",
        )
        parser.add_argument("--a", type=float, help="The a parameter of two-parameter families")
        parser.add_argument("--b", type=float, help="The b parameter of two-parameter families")
        parser.add_argument(
            "--domain",
            type=str,
            help="The parameter rectangle as X0,X1,Y0,Y1 (default: the example's domain)",
        )
        parser.add_argument("--nx", type=int, help="Nodes along x (default: 201; without grid options, the verify window)")
        parser.add_argument("--ny", type=int, help="Nodes along y (default: 201; without grid options, the verify window)")

    def get_entry(self, options):
        try:
            return get_example(options["example"], a=options["a"], b=options["b"])
        except LorentzWeierstrassError as error:
            raise CommandError(str(error))

    def get_grid(self, entry, options):
        """
        The grid from --domain/--nx/--ny. Without any of them every command
        uses the example's verification window, so that mesh, verify, transform
        and liouville sample the same nodes for the same flags.
        """
        domain, nx, ny = options["domain"], options["nx"], options["ny"]
        try:
            if domain is None and nx is None and ny is None:
                return entry.verify_grid()
            rectangle = parse_domain(domain) if domain else entry.default_domain
            return GridSpec.from_rectangle(rectangle, nx or DEFAULT_NODES, ny or DEFAULT_NODES)
        except LorentzWeierstrassError as error:
            raise CommandError(str(error))
