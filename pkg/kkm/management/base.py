from django.core.management.base import BaseCommand, CommandError

from ..conf import get_setting
from ..jobs import JobSpec, run
from ..serializers import dumps


class JobCommand(BaseCommand):
    """
    A management command that runs one job. The job name is the command's module
    name; ``inputs`` lists the file arguments, each exposed as ``--name``.
    """

    requires_system_checks = []
    inputs = ()

    def add_arguments(self, parser):
        for name in self.inputs:
            parser.add_argument(
                "--{}".format(name.replace("_", "-")), dest=name, metavar="FILE"
            )
        parser.add_argument(
            "-o", "--output", help="Write the JSON report here instead of stdout."
        )
        parser.add_argument("--seed", type=int, help="Random seed.")
        parser.add_argument(
            "--seed-sign",
            type=int,
            choices=(1, -1),
            default=1,
            help="Sign given to the seed simplex when an orientation is derived.",
        )
        self.add_options(parser)

    def add_options(self, parser):
        pass

    def add_point_option(self, parser):
        parser.add_argument(
            "--p", help='Query point overriding the config, e.g. "1/3,1/3".'
        )

    def add_degree_options(self, parser):
        parser.add_argument("--target", help="Target face as comma-separated labels.")
        parser.add_argument(
            "--per-component",
            action="store_true",
            help="Sum the degrees of a disconnected complex and report each one.",
        )

    def add_assertion_options(self, parser):
        parser.add_argument(
            "--ep-asserted",
            action="store_true",
            help="Declare the pair an extension obstruction pair when not detectable.",
        )
        parser.add_argument(
            "--degree-asserted",
            action="store_true",
            help="Declare the boundary class nonzero when it is not computable.",
        )

    @property
    def job_name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def handle(self, *args, **options):
        inputs = {name: options.pop(name) for name in self.inputs if options.get(name)}
        job = JobSpec(self.job_name, inputs, options.get("output"), options)
        status, report = run(job)
        text = dumps(report, indent=get_setting("KKM_REPORT_INDENT"))
        if job.output:
            with open(job.output, "w") as fp:
                fp.write(text + "\n")
        else:
            self.stdout.write(text)
        if status:
            message = report.get("error") or "{} finished with status {}.".format(
                job.command, status
            )
            raise CommandError(message, returncode=status)
