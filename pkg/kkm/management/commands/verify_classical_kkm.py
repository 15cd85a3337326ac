from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the classical KKM lemma on a subdivided simplex."
    inputs = ("complex", "cover")
