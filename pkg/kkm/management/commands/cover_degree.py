from ..base import JobCommand


class Command(JobCommand):
    help = "Degree of a cover of a closed oriented complex."
    inputs = ("cover", "complex")

    def add_options(self, parser):
        self.add_degree_options(parser)
