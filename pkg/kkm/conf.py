from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.utils.module_loading import import_string

DEFAULTS = {
    "KKM_SEED": 0,
    "KKM_FUZZ_COUNT": 100,
    "KKM_FUZZ_WORKERS": 1,
    "KKM_PEBBLE_SELECTOR": "kkm.geometry.select_pebbles",
    "KKM_PEBBLE_SEARCH_BUDGET": 200000,
    "KKM_REPORT_INDENT": 2,
}


def get_setting(name):
    """
    Returns the named KKM_* setting, falling back to the default when the setting is
    not defined or no settings module is configured at all (plain library use).
    """
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]


def get_hook(name):
    path = get_setting(name)
    try:
        return import_string(path)
    except ImportError as exc:
        raise ImproperlyConfigured(
            "{} refers to {!r}, which could not be imported.".format(name, path)
        ) from exc
