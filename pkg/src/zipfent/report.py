"""Assembly and rendering of the machine-readable analysis report."""

from __future__ import annotations

import json
from importlib import resources

from .bound import DEFAULT_CHAIN_TOLERANCE, bound_report, chain_check, entropy
from .corpus import FrequencyTable, TokenizerConfig
from .errors import InsufficientPointsError
from .fit import fit_loglog
from .spectrum import freq_of_freq


def build_report(
    table: FrequencyTable,
    config: TokenizerConfig,
    inputs: list[str],
    fit_kmin: int | None = None,
    fit_kmax: int | None = None,
    tolerance: float = DEFAULT_CHAIN_TOLERANCE,
) -> dict:
    """Run spectrum -> entropy -> fit -> bound -> chain on a counted corpus.

    Fit failure and bound inapplicability are recorded inside the report
    rather than raised, so callers can still show everything that was
    computable.  The report contains no timestamps or environment state:
    identical input and config reproduce it byte for byte.
    """
    spec = freq_of_freq(table)
    ent = entropy(table)
    report: dict = {
        "n_tokens": table.total_tokens,
        "vocab_size": table.vocab_size,
        "max_frequency": table.max_frequency,
        "spectrum": {
            "distinct_k": len(spec.points),
            "k_min": min(spec.points),
            "k_max": spec.max_k,
        },
        "entropy": {"nats": ent.nats, "bits": ent.bits},
    }
    try:
        fit = fit_loglog(spec, k_min=fit_kmin if fit_kmin is not None else 1, k_max=fit_kmax)
    except InsufficientPointsError as exc:
        report["fit"] = {"error": str(exc)}
        report["bound"] = None
        report["chain"] = None
    else:
        report["fit"] = {
            "a": fit.a,
            "b": fit.b,
            "rmse": fit.rmse,
            "points_used": fit.points_used,
            "k_min": fit.k_min,
            "k_max": fit.k_max,
        }
        br = bound_report(fit.a, fit.b, ent.nats)
        if br.applicable:
            report["bound"] = {
                "applicable": True,
                "value_nats": br.bound_nats,
                "margin_nats": br.margin_nats,
                "a": br.a,
                "b": br.b,
            }
            chain = chain_check(spec, fit.a, fit.b, tolerance=tolerance)
            report["chain"] = {
                "sandwich_lower": {"slack": chain.sandwich_lower.slack, "ok": chain.sandwich_lower.ok},
                "sandwich_upper": {"slack": chain.sandwich_upper.slack, "ok": chain.sandwich_upper.ok},
                "n_bound": {"slack": chain.n_bound.slack, "ok": chain.n_bound.ok},
                "ratio": {"slack": chain.ratio.slack, "ok": chain.ratio.ok},
                "tolerance": chain.tolerance,
            }
        else:
            report["bound"] = {"applicable": False, "a": br.a, "b": br.b}
            report["chain"] = None
    report["config"] = {
        "inputs": list(inputs),
        "lowercase": config.lowercase,
        "min_token_length": config.min_token_length,
        "token_rule": config.token_rule,
        "fit_k_min": fit_kmin,
        "fit_k_max": fit_kmax,
    }
    return report


def report_json(report: dict | list[dict]) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_text(report: dict, show_bits: bool = False) -> str:
    """Human-readable rendering of a report dict."""
    spectrum = report["spectrum"]
    lines = [
        f"tokens:        {report['n_tokens']}",
        f"vocabulary:    {report['vocab_size']}",
        f"max frequency: {report['max_frequency']}",
        f"spectrum:      {spectrum['distinct_k']} distinct k in [{spectrum['k_min']}, {spectrum['k_max']}]",
    ]
    ent = f"entropy:       {report['entropy']['nats']:.6f} nats"
    if show_bits:
        ent += f" ({report['entropy']['bits']:.6f} bits)"
    lines.append(ent)
    fit = report["fit"]
    if "error" in fit:
        lines.append(f"fit:           error: {fit['error']}")
    else:
        lines.append(
            f"fit:           a={fit['a']:.6f} b={fit['b']:.6f} rmse={fit['rmse']:.3e}"
            f" ({fit['points_used']} points, k in [{fit['k_min']}, {fit['k_max']}])"
        )
    bound = report["bound"]
    if bound is None:
        lines.append("bound:         unavailable (no fit)")
    elif not bound["applicable"]:
        lines.append(f"bound:         not applicable (a = {bound['a']:.6f} < 1)")
    else:
        lines.append(
            f"bound:         {bound['value_nats']:.6f} nats, margin {bound['margin_nats']:+.6f}"
        )
    chain = report["chain"]
    if chain is not None:
        for name in ("sandwich_lower", "sandwich_upper", "n_bound", "ratio"):
            c = chain[name]
            status = "ok" if c["ok"] else "VIOLATED"
            lines.append(f"chain:         {name} {status} (slack {c['slack']:+.3e})")
    return "\n".join(lines) + "\n"


def report_schema() -> dict:
    """The JSON schema that analyze reports validate against."""
    text = resources.files("zipfent").joinpath("schemas/analysis_report.schema.json").read_text()
    return json.loads(text)
