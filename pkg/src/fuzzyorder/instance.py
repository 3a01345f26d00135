"""JSON instance files: a category plus named weights, coweights and sequences.

::

    {"tnorm": "godel" | {"kind": "ordinal_sum", "pieces": [...]},
     "objects": ["x", "y"],
     "hom": [[...], ...],
     "weights":   [{"name": "phi", "type": 0.5, "values": [...]}],
     "coweights": [{"name": "psi", "type": 0.5, "values": [...]}],
     "sequences": [{"name": "s", "prefix": [...], "cycle": [...]}]}

Sequence entries may use object names or indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .category import DQCategory, ValidationReport
from .errors import InvalidInstance, UnknownObject
from .nets import EPSequence
from .presheaf import Coweight, Weight
from .tnorm import TNorm


@dataclass
class Instance:
    category: DQCategory
    weights: dict[str, Weight] = field(default_factory=dict)
    coweights: dict[str, Coweight] = field(default_factory=dict)
    sequences: dict[str, EPSequence] = field(default_factory=dict)

    def validate(self) -> ValidationReport:
        report = ValidationReport("instance")
        report.extend(self.category.validate())
        for item in (*self.weights.values(), *self.coweights.values()):
            report.extend(item.validate())
        return report

    def to_dict(self) -> dict:
        d = self.category.to_dict()
        d["weights"] = [w.to_dict() for w in self.weights.values()]
        d["coweights"] = [w.to_dict() for w in self.coweights.values()]
        d["sequences"] = [s.to_dict() for s in self.sequences.values()]
        return d

    def dumps(self) -> str:
        return dumps(self.to_dict())


def dumps(data) -> str:
    """Canonical JSON text; identical data gives identical bytes."""
    return json.dumps(data, indent=2) + "\n"


def _named(entries, make, what):
    out = {}
    for k, entry in enumerate(entries):
        name = entry.get("name") or f"{what}{k}"
        if name in out:
            raise ValueError(f"duplicate {what} name {name!r}")
        out[name] = make(entry, name)
    return out


def from_dict(data: dict) -> Instance:
    """Build and validate; raises :class:`InvalidInstance` with the full report."""
    try:
        tnorm = TNorm.from_dict(data["tnorm"])
        c = DQCategory(tnorm, data["hom"], data.get("objects"))
        weights = _named(data.get("weights", []),
                         lambda e, n: Weight(c, e["type"], e["values"], name=n), "phi")
        coweights = _named(data.get("coweights", []),
                           lambda e, n: Coweight(c, e["type"], e["values"], name=n), "psi")
        sequences = _named(data.get("sequences", []),
                           lambda e, n: EPSequence(c, e.get("prefix", []), e["cycle"], name=n), "seq")
    except (KeyError, TypeError, ValueError, UnknownObject) as exc:
        raise InvalidInstance(f"malformed instance: {exc!r}") from exc
    inst = Instance(c, weights, coweights, sequences)
    report = inst.validate()
    if not report.ok:
        raise InvalidInstance(f"instance fails validation ({len(report.violations)} violations)", report)
    return inst


def loads(text: str) -> Instance:
    return from_dict(json.loads(text))


def load(path) -> Instance:
    return loads(Path(path).read_text())


def save(inst: Instance, path) -> None:
    Path(path).write_text(inst.dumps())
