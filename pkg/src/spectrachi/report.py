"""Report rows and the table of named graphs with literature chromatic numbers.

Values in ``KNOWN_CHI`` are cited, never computed; ``chi_computed`` holds
what the exact search proved in this run.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Callable

from . import graphs
from .bounds import (
    BoundReport,
    bounds_report,
    is_hoffman_coloring,
    kneser2_parameters,
    report_from_spectrum,
    srg_spectrum,
)
from .chromatic import chromatic_number
from .graphs import Graph
from .quantum import omega_coloring, verify

REPORT_BUDGET = 10**6
CHI_SEARCH_MAX_N = 50

FIELDS = [
    "name", "n", "mu1", "mu2", "mun", "g",
    "kappa_bound", "ratio_bound", "mult_bound", "best_lower_bound",
    "chi_known", "chi_computed", "chi_q_upper", "status", "hoffman", "source",
]


@dataclass(frozen=True)
class KnownChi:
    chi: int
    source: str


FIALA_HAEMERS = "Fiala & Haemers 2006, Thm 10.1 (SRGs with chi = 5)"

KNOWN_CHI: dict[str, KnownChi] = {
    "Clebsch": KnownChi(4, "literature value"),
    "GQ(2,4)": KnownChi(6, "Brouwer & Haemers, Spectra of Graphs"),
    "Hoffman-Singleton": KnownChi(4, "literature value"),
    "Gewirtz": KnownChi(4, "literature value"),
    "Higman-Sims": KnownChi(6, "Fiala & Haemers 2006"),
    "M22": KnownChi(5, "Fiala & Haemers 2006"),
    "SRG(15,8,4,4)": KnownChi(5, FIALA_HAEMERS),
    "SRG(25,8,3,2)": KnownChi(5, FIALA_HAEMERS),
    "SRG(21,10,3,6)": KnownChi(5, FIALA_HAEMERS),
    "SRG(25,16,9,12)": KnownChi(5, FIALA_HAEMERS),
    "SRG(49,12,5,2)": KnownChi(7, "Haemers & Tonchev 1996, Hoffman coloring"),
    "Schlafli": KnownChi(9, "Haemers & Tonchev 1996, Hoffman coloring"),
}
for _p in range(4, 13):
    KNOWN_CHI[f"Kneser({_p},2)"] = KnownChi(_p - 2, "Lovasz 1978: chi(KG(p,t)) = p-2t+2")


@dataclass
class ReportRow:
    name: str
    n: int
    mu1: float
    mu2: float | None
    mun: float
    g: int
    kappa_bound: int
    ratio_bound: int
    mult_bound: int | None
    best_lower_bound: int
    chi_known: int | None = None
    chi_computed: int | None = None
    chi_q_upper: int | None = None
    hoffman: bool | None = None
    source: str = ""

    @property
    def status(self) -> str:
        chi = self.chi_computed if self.chi_computed is not None else self.chi_known
        if chi is None:
            return "unknown"
        return "tight" if self.best_lower_bound == chi else "gap"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return {k: d[k] for k in FIELDS}


def row_from_report(
    name: str,
    rep: BoundReport,
    chi_known: KnownChi | None = None,
    chi_computed: int | None = None,
    chi_q_upper: int | None = None,
) -> ReportRow:
    s = rep.spectrum
    chi = chi_computed if chi_computed is not None else (chi_known.chi if chi_known else None)
    hoffman = None
    if chi is not None and chi >= 2:
        hoffman = is_hoffman_coloring(s, chi)
    sources = []
    if chi_known is not None:
        sources.append(f"chi cited: {chi_known.source}")
    if chi_computed is not None:
        sources.append("chi computed by exact search")
    if chi_q_upper is not None:
        sources.append("chi_q upper bound from a verified quantum coloring")
    return ReportRow(
        name=name,
        n=s.n,
        mu1=rep.mu1,
        mu2=rep.mu2,
        mun=rep.mun,
        g=rep.g,
        kappa_bound=rep.kappa_bound,
        ratio_bound=rep.ratio_bound,
        mult_bound=rep.mult_bound,
        best_lower_bound=rep.best_lower_bound,
        chi_known=chi_known.chi if chi_known else None,
        chi_computed=chi_computed,
        chi_q_upper=chi_q_upper,
        hoffman=hoffman,
        source="; ".join(sources),
    )


def graph_row(
    name: str,
    g: Graph,
    budget: int | None = REPORT_BUDGET,
    weights=None,
    chi_q_upper: int | None = None,
) -> ReportRow:
    rep = bounds_report(g, weights)
    chi = None
    if budget and g.n <= CHI_SEARCH_MAX_N:
        res = chromatic_number(g, budget)
        chi = res.chi
    return row_from_report(name, rep, KNOWN_CHI.get(name), chi, chi_q_upper)


def srg_row(name: str, n: int, k: int, lam: int, mu: int) -> ReportRow:
    rep = report_from_spectrum(srg_spectrum(n, k, lam, mu), connected=mu > 0)
    return row_from_report(name, rep, KNOWN_CHI.get(name))


def _omega_row(n: int, budget: int | None) -> ReportRow:
    g = graphs.orthogonality_graph(n)
    qc = omega_coloring(n)
    upper = qc.c if verify(g, qc).passed else None
    return graph_row(f"Omega({n})", g, budget if g.n <= CHI_SEARCH_MAX_N else None, chi_q_upper=upper)


def paper_rows(budget: int | None = REPORT_BUDGET) -> list[ReportRow]:
    """Every named graph with its three bounds, in a fixed order."""
    jobs: list[Callable[[], ReportRow]] = [
        lambda: graph_row("Clebsch", graphs.clebsch(), budget),
        lambda: srg_row("GQ(2,4)", 27, 10, 1, 5),
    ]
    for p in range(4, 13):
        jobs.append(lambda p=p: srg_row(f"Kneser({p},2)", *kneser2_parameters(p)))
    jobs += [
        lambda: graph_row("Hoffman-Singleton", graphs.hoffman_singleton(), budget),
        lambda: srg_row("Gewirtz", 56, 10, 0, 2),
        lambda: srg_row("Higman-Sims", 100, 22, 0, 6),
        lambda: srg_row("M22", 77, 16, 0, 4),
        lambda: srg_row("SRG(15,8,4,4)", 15, 8, 4, 4),
        lambda: srg_row("SRG(25,8,3,2)", 25, 8, 3, 2),
        lambda: srg_row("SRG(21,10,3,6)", 21, 10, 3, 6),
        lambda: srg_row("SRG(25,16,9,12)", 25, 16, 9, 12),
        lambda: srg_row("SRG(49,12,5,2)", 49, 12, 5, 2),
        lambda: srg_row("Schlafli", 27, 16, 10, 8),
        lambda: _omega_row(4, budget),
        lambda: _omega_row(8, budget),
        lambda: graph_row("barbell(4)", graphs.barbell(4), budget),
        lambda: graph_row("barbell(5)", graphs.barbell(5), budget),
        lambda: graph_row("K1,2,3", graphs.complete_multipartite([1, 2, 3]), budget),
        lambda: graph_row("K1,1,2,5", graphs.complete_multipartite([1, 1, 2, 5]), budget),
    ]
    return [job() for job in jobs]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        out = f"{value:.6f}"
        return "0.000000" if out == "-0.000000" else out
    return str(value)


def rows_to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in rows:
        d = row.as_dict()
        writer.writerow([_fmt(d[k]) for k in FIELDS])
    return buf.getvalue()


def rows_to_json(rows: list[ReportRow]) -> str:
    def clean(v):
        if isinstance(v, float):
            return float(_fmt(v))
        return v

    data = [{k: clean(v) for k, v in row.as_dict().items()} for row in rows]
    return json.dumps(data, indent=2) + "\n"
