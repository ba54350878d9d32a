#!/usr/bin/env python3
"""Regenerate the shipped algebra and twist files under data/zoo.

Every file is produced by the library's own constructors and serializer, so
the suite's load/save round-trip tests hold byte for byte.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hopfgauge import zoo
from hopfgauge.files import save_algebra, save_twist

OUT = pathlib.Path(__file__).resolve().parents[1] / "data" / "zoo"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    algebras = {}

    for m in (2, 3, 4, 6):
        algebras[f"z{m}"] = (zoo.group_algebra(zoo.cyclic_group(m)), None)
    s3 = zoo.symmetric_group(3)
    algebras["s3"] = (zoo.group_algebra(s3), s3.labels)
    algebras["dual-s3"] = (zoo.dual_group_algebra(s3), None)
    algebras["sweedler"] = (zoo.sweedler(), ("1", "g", "x", "gx"))
    algebras["taft-3"] = (zoo.taft(3), None)
    algebras["taft-4"] = (zoo.taft(4), None)
    algebras["generalized-taft-2-2"] = (zoo.generalized_taft(2, 2), None)

    for name, (H, labels) in algebras.items():
        path = OUT / f"{name}.json"
        save_algebra(path, name, H, labels)
        print(f"wrote {path}")

    # bicharacter twists on the canonical grouplike generator (c = 1)
    twists = {
        "z2": ("z2", 1, 2),
        "z3": ("z3", 1, 3),
        "z4": ("z4", 1, 4),
        "z6": ("z6", 1, 6),
        "sweedler": ("sweedler", 1, 2),
        "taft-3": ("taft-3", 1, 3),
        "taft-4": ("taft-4", 1, 4),
        "generalized-taft-2-2": ("generalized-taft-2-2", 1, 4),
    }
    for name, (aname, gen, order) in twists.items():
        H = algebras[aname][0]
        F = zoo.bicharacter_twist(H, H.basis_vec(gen), order, 1)
        path = OUT / f"{name}-bichar-c1.twist.json"
        save_twist(path, F[0].conductor, H.dim, F)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
