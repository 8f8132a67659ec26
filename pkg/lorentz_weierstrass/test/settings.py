"""
Django settings for running the lorentz_weierstrass test suite.
"""

SECRET_KEY = "lorentz-weierstrass-tests-only"

DEBUG = True

INSTALLED_APPS = [
    "lorentz_weierstrass",
    "lorentz_weierstrass.test",
]

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}

USE_TZ = True

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"null": {"class": "logging.NullHandler"}},
    "loggers": {"lorentz_weierstrass": {"handlers": ["null"], "level": "DEBUG"}},
}

# Lorentz Weierstrass settings

LORENTZ_WEIERSTRASS_EXTRA_EXAMPLES = [
    "lorentz_weierstrass.test.families.HalfEnneper",
]
