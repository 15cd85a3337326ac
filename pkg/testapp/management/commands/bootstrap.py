import json
import os

from django.core.management.base import BaseCommand

from kkm.conf import get_setting
from kkm.fixtures import (
    HEPTAGON_LABELS,
    HEXAGON,
    TRIANGLE,
    UNIT_SQUARE,
    boundary_covers,
    disk_labeling,
    doubled_simplex,
    heptagon,
    ring_disk,
    sperner_simplex,
    sperner_sphere,
    tucker_labels,
    winding_labels,
)
from kkm.geometry import make_point
from kkm.serializers import (
    complex_to_data,
    config_to_data,
    cover_to_data,
    labeling_to_data,
)
from kkm.utils import instance_random


class Command(BaseCommand):
    help = "Writes the example input files used in the README into a directory."
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("directory", nargs="?", default="examples-data")
        parser.add_argument("--seed", type=int, default=None)

    def write(self, name, data):
        path = os.path.join(self.directory, name)
        with open(path, "w") as fp:
            json.dump(data, fp, indent=2)
            fp.write("\n")
        if self.verbosity:
            self.stdout.write("Wrote {}".format(path))

    def handle(self, *args, **options):
        self.directory = options["directory"]
        self.verbosity = options["verbosity"]
        seed = options["seed"]
        if seed is None:
            seed = get_setting("KKM_SEED")
        rng = instance_random(seed, "bootstrap")
        os.makedirs(self.directory, exist_ok=True)

        sphere, context = sperner_sphere(2, 1)
        self.write(
            "sphere2.json", complex_to_data(sphere.complex, sphere, context.carriers)
        )
        self.write("sperner.json", labeling_to_data(context.canonical_labeling()))

        triangle, context = sperner_simplex(2, 2)
        data = complex_to_data(triangle.complex, triangle, context.carriers)
        self.write("simplex2.json", data)
        self.write(
            "simplex2_labels.json", labeling_to_data(context.random_labeling(rng))
        )

        cycle, labels = heptagon()
        loop = [UNIT_SQUARE[label] for label in HEPTAGON_LABELS]
        p = make_point(("3/10", "3/10"))
        self.write("heptagon.json", config_to_data(UNIT_SQUARE, p, loop))
        self.write("heptagon_complex.json", complex_to_data(cycle.complex, cycle))
        self.write("heptagon_labels.json", labeling_to_data(labels))
        self.write("square.json", config_to_data(UNIT_SQUARE, p))
        self.write("hexagon.json", config_to_data(HEXAGON))
        self.write("triangle.json", config_to_data(TRIANGLE))

        disk = ring_disk(9, 2)
        L = disk_labeling(disk, 9, winding_labels(9, 1), 2, rng)
        self.write("disk.json", complex_to_data(disk.complex, disk))
        self.write("disk_labels.json", labeling_to_data(L))
        S, F, _ = boundary_covers(disk, L)
        self.write("disk_cover.json", cover_to_data(F, "disk.json"))
        self.write("boundary_cover.json", cover_to_data(S, "disk.json", "boundary"))

        disk = ring_disk(7, 2)
        L = disk_labeling(disk, 7, HEPTAGON_LABELS, 3, rng)
        S, F, _ = boundary_covers(disk, L)
        self.write("heptagon_disk.json", complex_to_data(disk.complex, disk))
        self.write("heptagon_disk_labels.json", labeling_to_data(L))
        self.write("heptagon_cover.json", cover_to_data(F, "heptagon_disk.json"))
        self.write(
            "heptagon_boundary_cover.json",
            cover_to_data(S, "heptagon_disk.json", "boundary"),
        )

        disk = ring_disk(8, 2)
        L = disk_labeling(disk, 8, tucker_labels(8), 3, rng)
        S, F, _ = boundary_covers(disk, L)
        self.write("tucker_disk.json", complex_to_data(disk.complex, disk))
        self.write("tucker_cover.json", cover_to_data(F, "tucker_disk.json"))
        self.write(
            "tucker_boundary_cover.json",
            cover_to_data(S, "tucker_disk.json", "boundary"),
        )

        disk = ring_disk(12, 2)
        L = disk_labeling(disk, 12, winding_labels(12, 1, q=6), 5, rng)
        self.write("hexagon_disk.json", complex_to_data(disk.complex, disk))
        self.write("hexagon_disk_labels.json", labeling_to_data(L))

        K, L, _ = doubled_simplex()
        self.write("doubled_simplex.json", complex_to_data(K))
        self.write("doubled_simplex_labels.json", labeling_to_data(L))
