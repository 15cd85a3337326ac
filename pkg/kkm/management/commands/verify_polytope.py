from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the polytope bound on fully labeled simplices."
    inputs = ("complex", "labels", "polytope")
