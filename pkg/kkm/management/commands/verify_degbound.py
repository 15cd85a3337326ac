from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the boundary degree lower bound on fully labeled simplices."
    inputs = ("complex", "labels")
