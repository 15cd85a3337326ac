from ..base import JobCommand


class Command(JobCommand):
    help = "Winding number of the loop of a point config around a point."
    inputs = ("config",)

    def add_options(self, parser):
        self.add_point_option(parser)
        parser.add_argument(
            "--direction", choices=("+x", "-x", "+y", "-y"), default="+x"
        )
