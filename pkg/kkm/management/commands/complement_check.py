from ..base import JobCommand


class Command(JobCommand):
    help = "Whether a point avoids the image of a cover map."
    inputs = ("cover", "config")

    def add_options(self, parser):
        self.add_point_option(parser)
