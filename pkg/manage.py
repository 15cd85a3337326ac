#!/usr/bin/env python
"""
Runs the kkm verifier commands (and the test suite) inside the bundled test project,
e.g. ``./manage.py verify_kkm --cover ...`` or ``./manage.py test kkm``.
"""
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "testapp.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "The kkm commands need Django; install django-kkm-sperner's requirements "
            "into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
