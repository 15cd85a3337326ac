from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the Tucker-Bacon theorem for antipodal covers."
    inputs = ("boundary_cover", "cover")

    def add_options(self, parser):
        self.add_assertion_options(parser)
