from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the generalized KKM theorem at a point."
    inputs = ("boundary_cover", "cover", "config")

    def add_options(self, parser):
        self.add_point_option(parser)
        self.add_assertion_options(parser)
