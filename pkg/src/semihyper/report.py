"""Render one structure's full analysis to files: CSV summaries of the ideal
lattice and the conformance run, plus figures for the lattice Hasse diagram,
the spectrum incidence, and the check verdicts."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import classify, conformance, spectrum
from .core import DEFAULT_ENUM_CAP, Semihyperring
from .ideals import enumerate_hyperideals

VERDICT_COLORS = {"PASS": "#2a7e43", "FAIL": "#b23a3a", "SKIP": "#8a8a8a"}


def _covers(lattice):
    """Covering pairs (i, j): ideals[i] < ideals[j] with nothing between."""
    ideals = lattice.ideals
    out = []
    for i, I in enumerate(ideals):
        for j, J in enumerate(ideals):
            if not (I < J):
                continue
            if not any(I < K < J for K in ideals):
                out.append((i, j))
    return out


def lattice_figure(S, lattice, path):
    ideals = lattice.ideals
    sizes = sorted({len(I) for I in ideals})
    layer_of = {s: k for k, s in enumerate(sizes)}
    by_layer = {}
    pos = {}
    for i, I in enumerate(ideals):
        by_layer.setdefault(len(I), []).append(i)
    for size, members in by_layer.items():
        for k, i in enumerate(members):
            pos[i] = (k - (len(members) - 1) / 2.0, layer_of[size])
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for i, j in _covers(lattice):
        ax.plot([pos[i][0], pos[j][0]], [pos[i][1], pos[j][1]],
                color="#777777", lw=1, zorder=1)
    for i, I in enumerate(ideals):
        x, y = pos[i]
        ax.scatter([x], [y], s=160, color="#3c6fb2", zorder=2)
        ax.annotate(S.subset_repr(I), (x, y), textcoords="offset points",
                    xytext=(0, 11), ha="center", fontsize=8)
    ax.set_title(f"hyperideal lattice of {S.name} ({len(ideals)} ideals)")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def spectrum_figure(S, topo, path):
    points = list(topo.points)
    opens = list(topo.opens)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    if points and opens:
        grid = [[1 if p in o.point_set else 0 for p in points] for o in opens]
        ax.imshow(grid, cmap="Blues", aspect="auto", vmin=0, vmax=1)
        ax.set_xticks(range(len(points)))
        ax.set_xticklabels([S.subset_repr(p) for p in points], rotation=45,
                           ha="right", fontsize=7)
        ax.set_yticks(range(len(opens)))
        ax.set_yticklabels([S.subset_repr(o.ideal) for o in opens], fontsize=7)
        ax.set_xlabel("spectrum points (irreducible hyperideals)")
        ax.set_ylabel("opens, by generating ideal")
    else:
        ax.text(0.5, 0.5, "empty spectrum", ha="center", va="center")
        ax.axis("off")
    ax.set_title(f"irreducible spectrum of {S.name}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def checks_figure(report, path):
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    for r in report.results:
        counts[r.verdict] += 1
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    names = list(counts)
    ax.bar(names, [counts[n] for n in names],
           color=[VERDICT_COLORS[n] for n in names])
    for i, n in enumerate(names):
        ax.annotate(str(counts[n]), (i, counts[n]), ha="center",
                    textcoords="offset points", xytext=(0, 3))
    ax.set_ylabel("checks")
    ax.set_title(f"conformance verdicts for {report.structure}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def write_report(S: Semihyperring, outdir: str, fmt: str = "png",
                 enum_cap: int = DEFAULT_ENUM_CAP,
                 subset_cap: int = conformance.DEFAULT_SUBSET_CAP) -> list[str]:
    """Run the full pipeline on S and write CSVs and figures into outdir.

    Returns the written paths in a deterministic order.
    """
    os.makedirs(outdir, exist_ok=True)
    lattice = enumerate_hyperideals(S, enum_cap)
    topo = spectrum.spectrum_topology(S, enum_cap)
    report = conformance.run_suite(S, enum_cap, subset_cap)
    base = os.path.join(outdir, S.name)
    paths = []

    ideals_csv = f"{base}_ideals.csv"
    with open(ideals_csv, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["ideal", "size", "proper", "prime", "semiprime",
                         "irreducible", "strongly_irreducible", "maximal",
                         "idempotent"])
        for I in lattice.ideals:
            c = classify.classify_ideal(S, I, enum_cap)
            writer.writerow([S.subset_repr(I), len(I), c.proper, c.prime,
                             c.semiprime, c.irreducible, c.strongly_irreducible,
                             c.maximal, c.idempotent])
    paths.append(ideals_csv)

    checks_csv = f"{base}_checks.csv"
    with open(checks_csv, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "verdict", "witness", "note"])
        for r in report.results:
            writer.writerow([r.check_id, r.verdict, r.witness or "", r.note or ""])
    paths.append(checks_csv)

    for name, fn, arg in (("lattice", lattice_figure, lattice),
                          ("spectrum", spectrum_figure, topo)):
        fig_path = f"{base}_{name}.{fmt}"
        fn(S, arg, fig_path)
        paths.append(fig_path)
    fig_path = f"{base}_checks.{fmt}"
    checks_figure(report, fig_path)
    paths.append(fig_path)
    return paths
