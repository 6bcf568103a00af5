"""JSON documents carrying an automaton and, optionally, its target group and rho.

Layout::

    {"spec": {"rank": 1, "torsion": []},
     "alphabet": ["a", "A"], "vertices": ["q"],
     "edges": [{"id": "e_a", "src": "q", "dst": "q", "g": [1], "sigma": "a"}, ...],
     "init": "q", "ter": "q",
     "target_group": {"kind": "abelian", "rank": 1, "torsion": []},
     "rho": {"a": [1], "A": [-1]}}
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .automaton import GAutomaton, make_automaton
from .errors import UsageError
from .groups import ChoiceOfGenerators, group_from_json
from .lattice import AbelianSpec


@dataclass(frozen=True)
class Document:
    automaton: GAutomaton
    rho: ChoiceOfGenerators | None = None


def _require(doc, key):
    if key not in doc:
        raise UsageError(f"document is missing {key!r}")
    return doc[key]


def parse(doc: dict) -> Document:
    if not isinstance(doc, dict):
        raise UsageError("document must be a JSON object")
    spec_doc = _require(doc, "spec")
    spec = AbelianSpec(int(spec_doc.get("rank", 0)), tuple(int(x) for x in spec_doc.get("torsion", ())))
    alphabet = doc.get("alphabet", [])
    if isinstance(alphabet, str):
        alphabet = list(alphabet)
    edges = []
    for e in _require(doc, "edges"):
        try:
            edges.append((e["id"], e["src"], e["dst"], tuple(e.get("g", spec.zero())), e.get("sigma", "")))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed edge {e!r}") from exc
    a = make_automaton(spec, alphabet, _require(doc, "vertices"), edges, _require(doc, "init"), _require(doc, "ter"))
    rho = None
    if "rho" in doc:
        group = group_from_json(_require(doc, "target_group"))
        inverses = doc.get("inverses")
        rho = ChoiceOfGenerators.from_mapping(group, doc["rho"], inverses)
        missing = set(a.alphabet) - set(rho.alphabet)
        if missing:
            raise UsageError(f"rho has no image for {''.join(sorted(missing))!r}")
    return Document(a, rho)


def emit(a: GAutomaton, rho: ChoiceOfGenerators | None = None) -> dict:
    doc = {
        "spec": {"rank": a.spec.free_rank, "torsion": list(a.spec.torsion_moduli)},
        "alphabet": list(a.alphabet),
        "vertices": list(a.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst, "g": list(e.g), "sigma": e.sigma} for e in a.edges],
        "init": a.init,
        "ter": a.ter,
    }
    if rho is not None:
        doc["target_group"] = rho.group.describe()
        doc["rho"] = rho.to_json()
        doc["inverses"] = dict(rho.inverses)
    return doc


def load(path) -> Document:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse(data)


def dumps(a: GAutomaton, rho: ChoiceOfGenerators | None = None) -> str:
    return json.dumps(emit(a, rho), indent=2, sort_keys=False) + "\n"
