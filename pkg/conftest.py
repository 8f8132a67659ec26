# Test collection wiring for pytest, mirroring testmanage.py.

import os

import django
from hypothesis import settings as hypothesis_settings


os.environ.setdefault("DJANGO_SETTINGS_MODULE", "lorentz_weierstrass.test.settings")

# numpy warm-up makes the first example slow, so no deadlines
hypothesis_settings.register_profile("dev", max_examples=100, deadline=None)
hypothesis_settings.register_profile("ci", max_examples=500, deadline=None)
hypothesis_settings.load_profile("dev")

django.setup()
