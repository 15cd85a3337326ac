from ..base import JobCommand


class Command(JobCommand):
    help = "Whether one cover extends another from a subcomplex."
    inputs = ("cover", "extension")
