import sys

from django.conf import settings
from django.core.management import execute_from_command_line


def main(argv=None):
    """Run the management commands without a Django project."""
    if not settings.configured:
        settings.configure(
            INSTALLED_APPS=["lorentz_weierstrass"],
            LOGGING={
                "version": 1,
                "disable_existing_loggers": False,
                "handlers": {"console": {"class": "logging.StreamHandler"}},
                "loggers": {"lorentz_weierstrass": {"handlers": ["console"], "level": "WARNING"}},
            },
        )
    argv = sys.argv if argv is None else argv
    execute_from_command_line(["lorentz-weierstrass"] + list(argv[1:]))


if __name__ == "__main__":
    main()
