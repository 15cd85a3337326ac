from ..base import JobCommand


class Command(JobCommand):
    help = "Minimal index sets J whose points hold p in their convex hull."
    inputs = ("config",)

    def add_options(self, parser):
        self.add_point_option(parser)
