from ..base import JobCommand


class Command(JobCommand):
    help = "Runs seeded instance families through the theorem verifiers."
    inputs = ()

    def add_options(self, parser):
        parser.add_argument(
            "--families", help="Comma-separated families, all by default."
        )
        parser.add_argument("--fuzz-count", type=int, help="Instances per family.")
        parser.add_argument("--workers", type=int, help="Worker threads.")
