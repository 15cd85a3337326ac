from ..base import JobCommand


class Command(JobCommand):
    help = "Checks the Sperner rules of a labeled subdivision."
    inputs = ("complex", "labels")
