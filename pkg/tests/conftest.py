"""Shared fixtures: the algebra zoo, validated twists, and twisted pairs.

Everything heavy is session scoped; the objects are immutable so sharing is
safe.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

import pytest

from hopfgauge import zoo
from hopfgauge.cyclotomic import CycNum
from hopfgauge.hopf import HopfAlgebra, dual_hopf
from hopfgauge.linalg import Mat, Tensor3
from hopfgauge.twist import twist_hopf, validate_twist

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data" / "zoo"

ZOO_NAMES = (
    "z2",
    "z3",
    "z4",
    "z6",
    "s3",
    "dual-s3",
    "sweedler",
    "taft-3",
    "taft-4",
    "generalized-taft-2-2",
)

SEMISIMPLE_NAMES = ("z2", "z3", "z4", "z6", "s3", "dual-s3")
NONSEMISIMPLE_NAMES = ("sweedler", "taft-3", "taft-4", "generalized-taft-2-2")

# (pair label, algebra name, generator index, generator order, bicharacter c)
CHEVALLEY_PAIRS = (
    ("sweedler-c1", "sweedler", 1, 2, 1),
    ("taft-3-c1", "taft-3", 1, 3, 1),
    ("taft-3-c2", "taft-3", 1, 3, 2),
    ("taft-4-c1", "taft-4", 1, 4, 1),
    ("generalized-taft-2-2-c1", "generalized-taft-2-2", 1, 4, 1),
)


@pytest.fixture(scope="session")
def zoo_algebras() -> dict:
    s3 = zoo.symmetric_group(3)
    ks3 = zoo.group_algebra(s3)
    return {
        "z2": zoo.group_algebra(zoo.cyclic_group(2)),
        "z3": zoo.group_algebra(zoo.cyclic_group(3)),
        "z4": zoo.group_algebra(zoo.cyclic_group(4)),
        "z6": zoo.group_algebra(zoo.cyclic_group(6)),
        "s3": ks3,
        "dual-s3": dual_hopf(ks3),
        "sweedler": zoo.sweedler(),
        "taft-3": zoo.taft(3),
        "taft-4": zoo.taft(4),
        "generalized-taft-2-2": zoo.generalized_taft(2, 2),
    }


@pytest.fixture(scope="session")
def chevalley_twists(zoo_algebras) -> dict:
    """label -> (base algebra, validated twist, twisted pair)."""
    out = {}
    for label, name, gen, order, c in CHEVALLEY_PAIRS:
        H = zoo_algebras[name]
        F = zoo.bicharacter_twist(H, H.basis_vec(gen), order, c)
        T = validate_twist(H, F)
        out[label] = (H, T, twist_hopf(H, T))
    return out


def dual_cyclic_character(m: int) -> list:
    """Order-m grouplike of the dual cyclic group algebra."""
    return [CycNum.zeta(m, a) for a in range(m)]


def sign_character() -> list:
    """Order-2 grouplike of the dual symmetric group algebra on 3 letters."""
    return [
        CycNum.from_rational(zoo.permutation_sign(p))
        for p in zoo.symmetric_group_perms(3)
    ]


@pytest.fixture(scope="session")
def semisimple_twists(zoo_algebras) -> dict:
    """label -> (algebra, validated twist) for the semisimple test pairs,
    covering cyclic group algebras and grouplikes of dual group algebras."""
    out = {}
    for m in (2, 3, 4, 6):
        H = zoo_algebras[f"z{m}"]
        F = zoo.bicharacter_twist(H, H.basis_vec(1), m, 1)
        out[f"z{m}-c1"] = (H, validate_twist(H, F))
    for m in (3, 4):
        H = dual_hopf(zoo_algebras[f"z{m}"])
        F = zoo.bicharacter_twist(H, dual_cyclic_character(m), m, 1)
        out[f"dual-z{m}-c1"] = (H, validate_twist(H, F))
    H = zoo_algebras["dual-s3"]
    F = zoo.bicharacter_twist(H, sign_character(), 2, 1)
    out["dual-s3-c1"] = (H, validate_twist(H, F))
    return out


def mutate_algebra(H: HopfAlgebra, rng) -> tuple[HopfAlgebra, str]:
    """Add 1 to one randomly chosen structure constant and rebuild."""
    d = H.dim
    target = rng.choice(("mult", "comult", "antipode", "unit", "counit"))
    one = CycNum.one(H.conductor)
    mult, comult, antipode = H.mult, H.comult, H.antipode
    unit, counit = list(H.unit), list(H.counit)
    if target in ("mult", "comult"):
        flat = rng.randrange(d ** 3)
        tensor = mult if target == "mult" else comult
        entries = list(tensor.entries)
        entries[flat] = entries[flat] + one
        tensor = Tensor3(d, entries)
        if target == "mult":
            mult = tensor
        else:
            comult = tensor
        where = f"{target}[{flat}]"
    elif target == "antipode":
        i, j = rng.randrange(d), rng.randrange(d)
        rows = antipode.copy_entries()
        rows[i][j] = rows[i][j] + one
        antipode = Mat(rows, H.conductor)
        where = f"antipode[{i}][{j}]"
    elif target == "unit":
        i = rng.randrange(d)
        unit[i] = unit[i] + one
        where = f"unit[{i}]"
    else:
        i = rng.randrange(d)
        counit[i] = counit[i] + one
        where = f"counit[{i}]"
    mutant = HopfAlgebra(d, mult, tuple(unit), comult, tuple(counit), antipode)
    return mutant, where
