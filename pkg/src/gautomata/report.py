"""JSON-ready views of results, shared by the CLI and the pipeline."""
from __future__ import annotations

import json

from .lattice import INFINITE
from .wqo import Certified


def path_json(path):
    return list(path)


def index_json(idx):
    return "infinite" if idx is INFINITE else idx


def verdict_json(v):
    out = {"status": v.status}
    if v.witness is not None:
        out["witness"] = path_json(v.witness)
    if v.reason:
        out["reason"] = v.reason
    return out


def minimal_json(mps):
    c = mps.completeness
    comp = {"certified": c.bound} if isinstance(c, Certified) else {"up_to": c.length}
    return {"paths": [path_json(p) for p in mps.paths], "completeness": comp}


def pump_json(w):
    return {
        "mu": path_json(w.mu),
        "p": w.p,
        "sigma": path_json(w.sigma),
        "alpha": path_json(w.alpha),
        "blocks": [path_json(b) for b in w.blocks],
        "block": w.j,
        "offset": w.offset,
    }


def view_json(view):
    return {
        "mu": path_json(view.mu),
        "p": view.p,
        "bound": view.bound,
        "members": [{"sigma": path_json(s), "witness": pump_json(w)} for s, w in view.members],
    }


def hom_json(hom, group):
    return {
        "mu": path_json(hom.mu),
        "p": hom.p,
        "generators": [
            {"g": list(g), "h": group.to_json(h), "loop": path_json(s)} for g, h, s in hom.gen_pairs
        ],
        "g_basis": [list(r) for r in hom.g_sub.basis],
        "explored_length": hom.bound,
        "members_seen": len(hom.view.members),
        "stabilized_at": hom.stabilized_at,
        "exhausted": hom.exhausted,
        "history": [
            {"length": r.length, "members": r.members, "g_basis": [list(x) for x in r.g_basis]}
            for r in hom.history
        ],
        "note": "stabilization is a stall heuristic" if not hom.exhausted else "loop search ran dry",
    }


def locator_json(loc, group):
    return {
        "h": group.to_json(loc.h),
        "v": loc.v,
        "vbar": loc.vbar,
        "N": loc.N,
        "alpha": path_json(loc.alpha),
        "mu": path_json(loc.mu),
        "p": loc.p,
        "block": loc.j,
        "omega_index": loc.i,
        "omega": path_json(loc.omega),
        "omega1": path_json(loc.omega1),
        "omega2": path_json(loc.omega2),
        "h1": group.to_json(loc.h1),
        "h2": group.to_json(loc.h2),
        "provisional": loc.provisional,
        "checks": dict(sorted(loc.checks.items())),
        "ok": loc.ok,
    }


def cover_json(report, group):
    return {
        "radius": report.radius,
        "N": report.N,
        "minimal_set_certified": report.certified,
        "covered": report.covered,
        "cosets": [
            {"mu": path_json(mu), "p": p, "h1": group.to_json(h1), "h2": group.to_json(h2)}
            for mu, p, h1, h2 in report.cosets
        ],
        "augmented": [{"mu": path_json(mu), "p": p, "loop": path_json(s)} for mu, p, s in report.augmented],
        "locators": [locator_json(loc, group) for loc in report.locators],
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def text_sections(sections) -> str:
    """``sections`` is a list of ``(title, [(key, value), ...])``."""
    lines = []
    for title, rows in sections:
        lines.append(f"== {title} ==")
        for k, v in rows:
            if not isinstance(v, str):
                v = json.dumps(v, sort_keys=True, ensure_ascii=False)
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"
