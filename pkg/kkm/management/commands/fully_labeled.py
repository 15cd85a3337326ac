from ..base import JobCommand


class Command(JobCommand):
    help = "Simplices whose labels contain a given label set."
    inputs = ("complex", "labels")

    def add_options(self, parser):
        parser.add_argument(
            "--label-set", default="", help="Comma-separated labels, empty for all."
        )
