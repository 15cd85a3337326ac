from ..base import JobCommand


class Command(JobCommand):
    help = "Canonicalizes a complex file, optionally deriving an orientation."
    inputs = ("complex",)

    def add_options(self, parser):
        parser.add_argument(
            "--orient", action="store_true", help="Derive an orientation."
        )
