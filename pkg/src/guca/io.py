"""Canonical workspace documents: JSON schema, parsing, DOT export.

A workspace document carries an ice quiver with its weight configuration
over an explicit Euler lattice, optionally the representation-side data
(quiver and dimension vector) that the vertex-removal pipeline acts on,
an optional potential, and the mutation history.
"""

import json
from dataclasses import dataclass, field

from .lattice import EulerLattice, QuiverQ
from .quiver import IceQuiver
from .seeds import WeightConfig

VERSION = "guca/1"


class SchemaError(ValueError):
    def __init__(self, message, field_name=None):
        self.field = field_name
        super().__init__(message if field_name is None
                         else f"{message} (field: {field_name})")


@dataclass
class WorkspaceDoc:
    quiver: IceQuiver
    config: WeightConfig
    rep_quiver: QuiverQ = None
    rep_beta: tuple = None
    potential: list = field(default_factory=list)
    history: list = field(default_factory=list)

    def to_json(self):
        doc = {
            "version": VERSION,
            "quiver": self.quiver.to_json(),
            "lattice": self.config.lattice.to_json(),
            "weights": {v: list(w) for v, w in
                        sorted(self.config.sigma.items())},
            "history": list(self.history),
        }
        if self.rep_quiver is not None:
            doc["rep"] = {
                "vertices": list(self.rep_quiver.vertices),
                "arrows": [list(a) for a in self.rep_quiver.arrows],
                "beta": list(self.rep_beta),
            }
        if self.potential:
            doc["potential"] = [[list(c), num, den]
                                for c, num, den in self.potential]
        return doc

    def dumps(self, pretty=False):
        return json.dumps(self.to_json(), sort_keys=True,
                          indent=2 if pretty else None)


def _require(data, key, where):
    if key not in data:
        raise SchemaError("missing required field", f"{where}.{key}"
                          if where else key)
    return data[key]


def parse_doc(data):
    """Parse and validate a workspace document (dict or JSON string)."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("document must be a JSON object")
    version = data.get("version", VERSION)
    if version != VERSION:
        raise SchemaError(f"unsupported version {version!r}", "version")
    qdata = _require(data, "quiver", "")
    for key in ("vertices", "frozen", "arrows"):
        _require(qdata, key, "quiver")
    try:
        quiver = IceQuiver(qdata["vertices"], qdata["frozen"],
                           [tuple(a) for a in qdata["arrows"]])
    except ValueError as exc:
        raise SchemaError(str(exc), "quiver") from exc
    ldata = _require(data, "lattice", "")
    for key in ("labels", "euler_matrix"):
        _require(ldata, key, "lattice")
    try:
        lattice = EulerLattice(ldata["euler_matrix"], labels=ldata["labels"])
    except ValueError as exc:
        raise SchemaError(str(exc), "lattice") from exc
    weights = _require(data, "weights", "")
    missing = [v for v in quiver.vertices if v not in weights]
    if missing:
        raise SchemaError(f"weights missing for vertices {missing}",
                          "weights")
    try:
        config = WeightConfig(lattice,
                              {v: tuple(weights[v]) for v in quiver.vertices},
                              check=quiver)
    except ValueError as exc:
        raise SchemaError(str(exc), "weights") from exc
    rep_quiver = rep_beta = None
    if "rep" in data:
        rdata = data["rep"]
        for key in ("vertices", "arrows", "beta"):
            _require(rdata, key, "rep")
        try:
            rep_quiver = QuiverQ(rdata["vertices"],
                                 [tuple(a) for a in rdata["arrows"]])
        except ValueError as exc:
            raise SchemaError(str(exc), "rep") from exc
        rep_beta = tuple(rdata["beta"])
        if len(rep_beta) != rep_quiver.n:
            raise SchemaError("beta length mismatch", "rep.beta")
        if rep_quiver.vertices != lattice.labels:
            raise SchemaError("rep vertices must match the lattice labels",
                              "rep.vertices")
    potential = []
    for item in data.get("potential", []):
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError("potential terms are [cycle, num, den]",
                              "potential")
        potential.append((tuple(item[0]), item[1], item[2]))
    return WorkspaceDoc(quiver, config, rep_quiver, rep_beta, potential,
                        list(data.get("history", [])))


def doc_from_hive(seed):
    return WorkspaceDoc(seed.quiver, seed.config, seed.rep_quiver,
                        tuple(seed.rep_beta), history=[])


def export_dot(quiver, highlight=()):
    """Graphviz DOT text: boxed frozen vertices, one edge per arrow with
    multiplicity labels, deterministic ordering."""
    highlight = set(highlight)
    lines = ["digraph quiver {"]
    for v in quiver.vertices:
        attrs = []
        if quiver.is_frozen(v):
            attrs.append("shape=box")
        else:
            attrs.append("shape=ellipse")
        if v in highlight:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightblue")
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for (t, h), m in sorted(quiver.arrow_counts().items()):
        label = f' [label="{m}"]' if m > 1 else ""
        lines.append(f'  "{t}" -> "{h}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"
