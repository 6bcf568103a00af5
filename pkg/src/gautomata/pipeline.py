"""End-to-end run: language check, minimal paths, coset cover, selection and audit."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .automaton import GAutomaton
from .cover import cover_ball, neumann_select
from .errors import WellDefinednessViolation
from .generators import all_words
from .groups import ChoiceOfGenerators, in_word_problem
from .hom import audit_well_defined, image_index
from .paths import EXACT, accepts
from .report import cover_json, hom_json, index_json, minimal_json, path_json
from .wqo import minimal_accepting_paths, pump_constant


@dataclass(frozen=True)
class PipelineConfig:
    radius: int = 4
    explore_len: int = 8
    stall: int = 2
    check_len: int = 6
    samples: int = 500
    seed: int = 0


def check_language(a: GAutomaton, rho: ChoiceOfGenerators, max_len: int, mode=EXACT):
    """First word of length <= ``max_len`` on which acceptance and the word problem differ."""
    for w in all_words(a.alphabet, max_len):
        v = accepts(a, w, mode, canonical=False)
        if v.is_unknown:
            continue
        if v.is_yes != in_word_problem(rho, w):
            return w, v.is_yes
    return None


def run_pipeline(a: GAutomaton, rho: ChoiceOfGenerators, config: PipelineConfig, mode=EXACT):
    """Returns ``(report dict, cover report)``; raises ``WellDefinednessViolation`` on a bad input."""
    group = rho.group
    if config.check_len >= 0:
        bad = check_language(a, rho, config.check_len, mode)
        if bad is not None:
            w, acc = bad
            raise WellDefinednessViolation(
                f"word {w!r} is {'accepted' if acc else 'rejected'} but "
                f"{'is not' if acc else 'is'} trivial in the target group", w, None
            )
    mps = minimal_accepting_paths(a, mode)
    n, exact = pump_constant(mps)
    cover = cover_ball(a, rho, config.radius, mps, mode, config.explore_len, config.stall)
    audits = []
    for key in sorted(cover.homs, key=lambda k: (len(k[0]), k)):
        hom = cover.homs[key]
        rep = audit_well_defined(a, rho, hom, config.samples, config.seed)
        audits.append({"mu": path_json(hom.mu), "p": hom.p, "pairs_checked": rep.pairs_checked, "ok": rep.ok})
    sel = neumann_select(cover)
    homs = [hom_json(cover.homs[k], group) for k in sorted(cover.homs, key=lambda k: (len(k[0]), k))]
    for h, key in zip(homs, sorted(cover.homs, key=lambda k: (len(k[0]), k))):
        h["index"] = index_json(image_index(cover.homs[key]))
    doc = {
        "minimal_paths": minimal_json(mps),
        "pump_constant": {"N": n, "exact": exact},
        "homomorphisms": homs,
        "cover": cover_json(cover, group),
        "audits": audits,
        "selection": {
            "mu": path_json(sel.mu) if sel.mu is not None else None,
            "p": sel.p,
            "index": index_json(sel.index),
            "conclusive": sel.conclusive,
            "note": sel.note,
        },
    }
    return doc, cover


def write_figures(cover, group, out: Path) -> list:
    from .plotting import cover_figure, stabilization_figure

    out.mkdir(parents=True, exist_ok=True)
    return [
        stabilization_figure(cover.homs, out / "stabilization.png"),
        cover_figure(cover, group, out / "cover.png"),
    ]
