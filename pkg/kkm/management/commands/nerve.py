from ..base import JobCommand


class Command(JobCommand):
    help = "Nerve of a cover."
    inputs = ("cover",)
