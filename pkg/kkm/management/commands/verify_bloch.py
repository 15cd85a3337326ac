from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the mod 2 bound on fully labeled simplices."
    inputs = ("complex", "labels", "polytope")
