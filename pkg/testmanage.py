#!/usr/bin/env python

import argparse
import os
import sys
import warnings

from django.core.management import execute_from_command_line
from hypothesis import settings as hypothesis_settings


os.environ["DJANGO_SETTINGS_MODULE"] = "lorentz_weierstrass.test.settings"

# numpy warm-up makes the first example slow, so no deadlines
hypothesis_settings.register_profile("dev", max_examples=100, deadline=None)
hypothesis_settings.register_profile("ci", max_examples=500, deadline=None)


def make_parser():
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--deprecation",
        choices=["all", "pending", "imminent", "none"],
        default="imminent",
    )
    parser.add_argument(
        "--hypothesis-profile",
        choices=["dev", "ci"],
        default="dev",
        help="Number of examples drawn by the property tests",
    )
    return parser


def parse_args(args=None):
    return make_parser().parse_known_args(args)


def runtests():
    args, rest = parse_args()

    hypothesis_settings.load_profile(args.hypothesis_profile)

    only_django = r"^django(\.|$)"
    if args.deprecation == "all":
        warnings.simplefilter("default", DeprecationWarning)
        warnings.simplefilter("default", PendingDeprecationWarning)
    elif args.deprecation == "pending":
        warnings.filterwarnings(
            "default", category=DeprecationWarning, module=only_django
        )
        warnings.filterwarnings(
            "default", category=PendingDeprecationWarning, module=only_django
        )
    elif args.deprecation == "imminent":
        warnings.filterwarnings(
            "default", category=DeprecationWarning, module=only_django
        )
    # "none": deprecation warnings are ignored by default

    argv = [sys.argv[0]] + rest
    execute_from_command_line(argv)


if __name__ == "__main__":
    runtests()
