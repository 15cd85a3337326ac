from ..base import JobCommand


class Command(JobCommand):
    help = "Mod 2 degree of a labeling on the Bloch boundary over a polytope."
    inputs = ("complex", "labels", "polytope")
