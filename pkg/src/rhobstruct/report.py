"""Machine-readable reports shared by the CLI commands.

Schema (stable)::

    {"valid": bool,
     "punctures": [{"lambda": {"k", "n"} | null, "jordan": [int, ...],
                    "single_block": bool, "eigenvalues": [...], "error": str | null}],
     "reducible": bool | null,
     "verdict": {"kind": str, "degrees": {"start", "step"} | null} | null,
     "reasons": [str, ...]}

Direct sums add ``"summands"``: one such report per summand.
"""
from __future__ import annotations

from .obstruction import Verdict, realizability_report
from .serialize import unity_to_dict
from .spectral import MonodromyAnalysis, PunctureAnalysis, analyze
from .surface import DirectSumRepresentation


def eigenvalue_to_dict(ev) -> dict:
    return {"twist": unity_to_dict(ev.twist), "scale": str(ev.value)}


def puncture_to_dict(p: PunctureAnalysis) -> dict:
    lam = p.lam
    return {
        "lambda": None if lam is None else unity_to_dict(lam),
        "jordan": sorted((s for part in p.jordan for s in part), reverse=True),
        "single_block": p.single_block,
        "eigenvalues": [
            {"value": eigenvalue_to_dict(ev), "multiplicity": mult, "jordan": list(part)}
            for (ev, mult), part in zip(p.eigenvalues, p.jordan)
        ],
        "error": p.error,
    }


def _merge_punctures(analyses) -> list[dict]:
    """Puncture entries for a direct sum: eigenvalue data of the summands pooled."""
    out = []
    for i in range(len(analyses[0].punctures)):
        pooled: dict = {}
        error = None
        for a in analyses:
            p = a.punctures[i]
            error = error or p.error
            for (ev, mult), part in zip(p.eigenvalues, p.jordan):
                m0, parts = pooled.get(ev, (0, []))
                pooled[ev] = (m0 + mult, parts + list(part))
        merged = PunctureAnalysis(
            eigenvalues=tuple((ev, m) for ev, (m, _) in pooled.items()),
            jordan=tuple(tuple(sorted(parts, reverse=True)) for _, parts in pooled.values()),
            single_eigenvalue=len(pooled) == 1 and error is None,
            single_block=False,
            error=error,
        )
        out.append(puncture_to_dict(merged))
    return out


def verdict_to_dict(v: Verdict | None) -> dict | None:
    if v is None:
        return None
    degrees = None
    if v.constraint is not None and v.constraint.degrees is not None:
        start, step = v.constraint.degrees
        degrees = {"start": start, "step": step}
    out = {"kind": v.kind, "degrees": degrees}
    if v.constraint is not None:
        c = v.constraint
        out["slope_class"] = str(c.slope_class)
        out["product"] = unity_to_dict(c.product)
        out["forced_beta"] = [str(b) for b in c.forced_beta]
        out["genus_zero_applied"] = c.genus_zero_applied
    return out


def _single_report(valid: bool, analysis: MonodromyAnalysis, verdict: Verdict | None) -> dict:
    return {
        "valid": valid,
        "punctures": [puncture_to_dict(p) for p in analysis.punctures],
        "reducible": analysis.reducible,
        "verdict": verdict_to_dict(verdict),
        "reasons": list(verdict.reasons) if verdict else [],
    }


def analysis_report(rep, with_verdict: bool = False) -> dict:
    if isinstance(rep, DirectSumRepresentation):
        analyses = [analyze(s) for s in rep.summands]
        verdict = realizability_report(rep) if with_verdict else None
        return {
            "valid": rep.is_valid(),
            "punctures": _merge_punctures(analyses),
            "reducible": True,
            "verdict": verdict_to_dict(verdict),
            "reasons": list(verdict.reasons) if verdict else [],
            "summands": [_single_report(s.is_valid(), a, None) for s, a in zip(rep.summands, analyses)],
        }
    analysis = analyze(rep)
    verdict = realizability_report(rep) if with_verdict else None
    return _single_report(rep.is_valid(), analysis, verdict)
