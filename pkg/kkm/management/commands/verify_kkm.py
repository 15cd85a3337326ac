from ..base import JobCommand


class Command(JobCommand):
    help = "Verifies the KKM theorem for a cover extending a boundary cover."
    inputs = ("boundary_cover", "cover")

    def add_options(self, parser):
        self.add_assertion_options(parser)
