from ..base import JobCommand


class Command(JobCommand):
    help = "Iterated barycentric subdivision with vertex carriers."
    inputs = ("complex",)

    def add_options(self, parser):
        parser.add_argument("--depth", type=int, default=1)
