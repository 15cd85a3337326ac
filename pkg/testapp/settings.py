import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = "kkm-testapp-not-secret"
DEBUG = True

INSTALLED_APPS = [
    "kkm",
    "testapp",
]

# The verifiers keep no state; tests run against SimpleTestCase only.
DATABASES = {}

DEFAULT_AUTO_FIELD = "django.db.models.AutoField"

USE_TZ = True

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "kkm": {
            "handlers": ["console"],
            "level": os.environ.get("KKM_LOG_LEVEL", "WARNING"),
        },
    },
}

KKM_SEED = int(os.environ.get("KKM_SEED", 0))
KKM_FUZZ_COUNT = 100
KKM_FUZZ_WORKERS = 1
KKM_PEBBLE_SELECTOR = "kkm.geometry.select_pebbles"
KKM_PEBBLE_SEARCH_BUDGET = 200000
KKM_REPORT_INDENT = 2
