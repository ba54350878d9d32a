"""JSON file formats for algebras and twists.

One algebra per file.  Entries are sparse lists sorted lexicographically by
index, coefficients in the cyclotomic text grammar at the file's conductor,
so loading then saving is byte-identical.  Unknown fields are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cyclotomic import CycNum, ParseError, cyc_format, cyc_parse
from .hopf import HopfAlgebra
from .linalg import Mat, Tensor3


class SchemaError(ValueError):
    pass


ALGEBRA_FIELDS = {"name", "conductor", "dim", "mult", "comult", "unit", "counit", "antipode"}
ALGEBRA_OPTIONAL = {"basis"}
TWIST_FIELDS = {"conductor", "dim", "F"}
TWIST_OPTIONAL = {"F_inv"}


@dataclass
class AlgebraFile:
    name: str
    algebra: HopfAlgebra
    basis_labels: tuple | None = None


@dataclass
class TwistFile:
    conductor: int
    dim: int
    F: list
    F_inv: list | None = None


def _check_fields(data: dict, required: set, optional: set, kind: str) -> None:
    if not isinstance(data, dict):
        raise SchemaError(f"{kind} file must be a JSON object")
    keys = set(data)
    missing = required - keys
    if missing:
        raise SchemaError(f"{kind} file missing fields: {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise SchemaError(f"{kind} file has unknown fields: {sorted(unknown)}")


def _parse_entries(raw, index_arity: int, dim: int, conductor: int, what: str):
    out = {}
    if not isinstance(raw, list):
        raise SchemaError(f"{what} must be a list")
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != index_arity + 1
            or not all(isinstance(i, int) for i in entry[:-1])
            or not isinstance(entry[-1], str)
        ):
            raise SchemaError(f"malformed {what} entry: {entry!r}")
        idx = tuple(entry[:-1])
        if any(not 0 <= i < dim for i in idx):
            raise SchemaError(f"{what} index out of range: {entry!r}")
        if idx in out:
            raise SchemaError(f"duplicate {what} index: {entry!r}")
        try:
            out[idx] = cyc_parse(entry[-1], conductor)
        except ParseError as exc:
            raise SchemaError(f"bad coefficient in {what}: {exc}") from exc
    return {k: v for k, v in out.items() if not v.is_zero()}


def load_algebra(path: str) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    _check_fields(data, ALGEBRA_FIELDS, ALGEBRA_OPTIONAL, "algebra")
    name = data["name"]
    n = data["conductor"]
    d = data["dim"]
    if not isinstance(name, str) or not isinstance(n, int) or not isinstance(d, int):
        raise SchemaError("name/conductor/dim have wrong types")
    if n < 1 or d < 1:
        raise SchemaError("conductor and dim must be positive")
    mult = _parse_entries(data["mult"], 3, d, n, "mult")
    comult = _parse_entries(data["comult"], 3, d, n, "comult")
    unit_entries = _parse_entries(data["unit"], 1, d, n, "unit")
    counit_entries = _parse_entries(data["counit"], 1, d, n, "counit")
    antipode_entries = _parse_entries(data["antipode"], 2, d, n, "antipode")
    zero = CycNum.zero(n)
    unit = [zero] * d
    for (i,), c in unit_entries.items():
        unit[i] = c
    counit = [zero] * d
    for (i,), c in counit_entries.items():
        counit[i] = c
    s_rows = [[zero] * d for _ in range(d)]
    for (i, j), c in antipode_entries.items():
        s_rows[i][j] = c
    labels = None
    if "basis" in data:
        labels = data["basis"]
        if not isinstance(labels, list) or len(labels) != d or not all(
            isinstance(x, str) for x in labels
        ):
            raise SchemaError("basis labels must be a list of dim strings")
        labels = tuple(labels)
    algebra = HopfAlgebra(
        d,
        Tensor3.from_dict(d, mult, n),
        tuple(unit),
        Tensor3.from_dict(d, comult, n),
        tuple(counit),
        Mat(s_rows, n),
    )
    return AlgebraFile(name, algebra, labels)


def _emit_entries(pairs) -> list:
    return [
        list(idx) + [cyc_format(c)]
        for idx, c in sorted(pairs, key=lambda kv: kv[0])
        if not c.is_zero()
    ]


def algebra_to_json(name: str, H: HopfAlgebra, basis_labels=None) -> dict:
    d = H.dim
    mult = []
    comult = []
    for i in range(d):
        for j, k, c in H._cop[i]:
            comult.append(((i, j, k), c))
    for (i, j), terms in H._pairs.items():
        for k, c in terms:
            mult.append(((i, j, k), c))
    data = {
        "name": name,
        "conductor": H.conductor,
        "dim": d,
        "mult": _emit_entries(mult),
        "comult": _emit_entries(comult),
        "unit": _emit_entries(((i,), c) for i, c in enumerate(H.unit)),
        "counit": _emit_entries(((i,), c) for i, c in enumerate(H.counit)),
        "antipode": _emit_entries(
            ((i, j), H.antipode.entries[i][j]) for i in range(d) for j in range(d)
        ),
    }
    if basis_labels is not None:
        data["basis"] = list(basis_labels)
    return data


def save_algebra(path: str, name: str, H: HopfAlgebra, basis_labels=None) -> None:
    _dump(path, algebra_to_json(name, H, basis_labels))


def load_twist(path: str) -> TwistFile:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    _check_fields(data, TWIST_FIELDS, TWIST_OPTIONAL, "twist")
    n = data["conductor"]
    d = data["dim"]
    if not isinstance(n, int) or not isinstance(d, int) or n < 1 or d < 1:
        raise SchemaError("conductor and dim must be positive integers")
    zero = CycNum.zero(n)

    def to_dense(entries):
        dense = [zero] * (d * d)
        for (i, j), c in entries.items():
            dense[i * d + j] = c
        return dense

    F = to_dense(_parse_entries(data["F"], 2, d, n, "F"))
    F_inv = None
    if "F_inv" in data:
        F_inv = to_dense(_parse_entries(data["F_inv"], 2, d, n, "F_inv"))
    return TwistFile(n, d, F, F_inv)


def twist_to_json(conductor: int, dim: int, F: list, F_inv: list | None = None) -> dict:
    def sparse(vec):
        return _emit_entries(
            ((k // dim, k % dim), c) for k, c in enumerate(vec)
        )

    data = {"conductor": conductor, "dim": dim, "F": sparse(F)}
    if F_inv is not None:
        data["F_inv"] = sparse(F_inv)
    return data


def save_twist(path: str, conductor: int, dim: int, F: list, F_inv=None) -> None:
    _dump(path, twist_to_json(conductor, dim, F, F_inv))


def _dump(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
