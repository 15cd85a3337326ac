from ..base import JobCommand


class Command(JobCommand):
    help = "Checks the hypotheses on a labeling of a 3-sphere into four labels."
    inputs = ("complex", "labels")
