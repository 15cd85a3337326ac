from ..base import JobCommand


class Command(JobCommand):
    help = "Certified pebble set of a planar or spatial point set."
    inputs = ("V",)
