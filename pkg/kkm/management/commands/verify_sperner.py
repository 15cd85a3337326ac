from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the generalized Sperner theorem at a point."
    inputs = ("complex", "labels", "config")

    def add_options(self, parser):
        self.add_point_option(parser)
        self.add_assertion_options(parser)
