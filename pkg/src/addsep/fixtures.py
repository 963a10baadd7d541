"""Named point sets and certificates.

``loop5`` and ``loop26`` are the classical three-dimensional loops; the
second forces a coefficient of 5 on the point (1, 1, 1). ``loop26`` lists
its points in reading order of the usual three-column display (rows left to
right, top to bottom), so its coefficients are 5, then fifteen -1, then ten
+1.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from addsep.analysis import LoopCertificate
from addsep.generators import axes_union, grid
from addsep.matrix import PointSet, serialize_point_set

LOOP5 = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
LOOP5_COEFFICIENTS = (2, -1, -1, -1, 1)

LOOP26 = [
    (1, 1, 1),
    (2, 3, 1), (12, 1, 13), (1, 22, 23),
    (4, 5, 1), (14, 1, 15), (1, 24, 25),
    (6, 7, 1), (16, 1, 17), (1, 26, 27),
    (8, 9, 1), (18, 1, 19), (1, 28, 29),
    (10, 11, 1), (20, 1, 21), (1, 30, 31),
    (2, 5, 13), (12, 22, 25),
    (4, 7, 15), (14, 24, 27),
    (6, 9, 17), (16, 26, 29),
    (8, 11, 19), (18, 28, 31),
    (10, 3, 21), (20, 30, 23),
]
LOOP26_COEFFICIENTS = (5,) + (-1,) * 15 + (1,) * 10

TWO_COMPONENTS = [(0, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]

STANDARD = (
    "loop5",
    "loop26",
    "two-components",
    "axes-union-2-2-2",
    "axes-union-3-3-3",
    "axes-union-2-3-4",
    "grid-2x2",
)


def point_set(name: str) -> PointSet:
    """Look up a fixture; ``axes-union-<m1>-...`` and ``grid-<a>x<b>...`` are parameterized."""
    if name == "loop5":
        return PointSet.from_points(LOOP5)
    if name == "loop26":
        return PointSet.from_points(LOOP26)
    if name == "two-components":
        return PointSet.from_points(TWO_COMPONENTS)
    if m := re.fullmatch(r"axes-union-(\d+(?:-\d+)*)", name):
        return axes_union([int(x) for x in m.group(1).split("-")])
    if m := re.fullmatch(r"grid-(\d+(?:x\d+)+)", name):
        return grid(*(int(x) for x in m.group(1).split("x")))
    raise KeyError(f"unknown fixture {name!r}")


def certificate(name: str) -> LoopCertificate | None:
    if name == "loop5":
        return LoopCertificate(point_set(name).points, LOOP5_COEFFICIENTS)
    if name == "loop26":
        return LoopCertificate(point_set(name).points, LOOP26_COEFFICIENTS)
    return None


def write_fixtures(directory: str | Path, names=STANDARD) -> list[Path]:
    """Write ``<name>.json`` (and ``<name>.loop.json`` when a certificate exists)."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in names:
        path = out / f"{name}.json"
        path.write_text(json.dumps(serialize_point_set(point_set(name))) + "\n")
        written.append(path)
        cert = certificate(name)
        if cert is not None:
            cpath = out / f"{name}.loop.json"
            cpath.write_text(json.dumps(cert.to_json()) + "\n")
            written.append(cpath)
    return written
