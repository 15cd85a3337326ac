from ..base import JobCommand


class Command(JobCommand):
    help = "Degree of the map a labeling induces on a closed oriented complex."
    inputs = ("complex", "labels")

    def add_options(self, parser):
        self.add_degree_options(parser)
