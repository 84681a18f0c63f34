"""Bundled example generator sets, stored as JSON transcriptions.

Each fixture records only the X matrices; the duals are reconstructed by
the involution on load.  Entries are monomials in the x-variables, encoded
as lists of subscripts (the empty list is the scalar 1).
"""

from __future__ import annotations

import json
from importlib import resources
from typing import List

from .algebra import Element, Monomial
from .construct import GeneratorSet, from_x_matrices
from .fields import QQ
from .matrices import LMatrix


def fixture_names() -> List[str]:
    names = []
    for item in resources.files(__package__).joinpath("fixtures").iterdir():
        if item.name.endswith(".json"):
            names.append(item.name[:-5])
    return sorted(names)


def load_fixture(name: str, field=QQ) -> GeneratorSet:
    ref = resources.files(__package__).joinpath("fixtures").joinpath(name + ".json")
    try:
        doc = json.loads(ref.read_text("utf-8"))
    except FileNotFoundError:
        raise KeyError("no fixture named %r (have: %s)" % (name, ", ".join(fixture_names())))
    return fixture_from_json(doc, field)


def fixture_from_json(doc, field=QQ) -> GeneratorSet:
    n, d = doc["n"], doc["d"]
    if "X" in doc:
        # full GeneratorSet document, as emitted by `leavitt construct --json`
        xs = [LMatrix.from_json(m, field) for m in doc["X"]]
        if len(xs) != n:
            raise ValueError(
                "document %r has %d matrices, expected %d" % (doc.get("name"), len(xs), n)
            )
        return from_x_matrices(
            n, d, xs, doc.get("provenance", "external"), name=doc.get("name")
        )
    xs = []
    for mat in doc["matrices"]:
        ent = {}
        for cell in mat:
            word = tuple(cell["word"])
            ent[(cell["row"], cell["col"])] = Element.monomial(
                Monomial((), word), n, field
            )
        xs.append(LMatrix(d, n, ent, field))
    if len(xs) != n:
        raise ValueError("fixture %r has %d matrices, expected %d" % (doc.get("name"), len(xs), n))
    return from_x_matrices(n, d, xs, "fixture", name=doc.get("name"))
