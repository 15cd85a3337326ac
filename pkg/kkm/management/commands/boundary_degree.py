from ..base import JobCommand


class Command(JobCommand):
    help = "Degree of a labeling on the oriented boundary of a complex."
    inputs = ("complex", "labels")

    def add_options(self, parser):
        self.add_degree_options(parser)
