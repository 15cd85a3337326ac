from ..base import JobCommand


class Command(JobCommand):
    help = "Bloch boundary of a pure complex."
    inputs = ("complex",)
