"""Report rendering: a delimited rank table plus a layered figure.

The figure places arguments on horizontal layers by rank (rank 0 on top,
the infinite stratum at the bottom) and draws every attack as an arrow,
next to a bar chart of stratum sizes. Files are written with matplotlib's
file-only backend so no display is needed.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .framework import ArgumentationFramework
from .ranks import INF, Rank, is_finite, rank_str
from .stratified import StratifiedLabeling

_LAYER_CMAP = "viridis"
_INF_COLOR = "#c8c8c8"


def write_rank_csv(path: Path | str, ranking: StratifiedLabeling) -> None:
    """Write an ``argument,rank`` table; infinity appears as ``inf``."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["argument", "rank"])
        for argument, rank in sorted(ranking.items()):
            writer.writerow([argument, rank_str(rank)])


def _layers(ranking: StratifiedLabeling) -> list[tuple[Rank, list[str]]]:
    finite = sorted({r for r in ranking.values() if is_finite(r)})
    layers = [(r, sorted(ranking.stratum(r))) for r in finite]
    infinite = sorted(ranking.stratum(INF))
    if infinite:
        layers.append((INF, infinite))
    return layers


def render_figure(
    path: Path | str,
    af: ArgumentationFramework,
    ranking: StratifiedLabeling,
    title: str = "",
) -> None:
    """Render the layered attack graph and the stratum-size bars to a file."""
    layers = _layers(ranking)
    positions: dict[str, tuple[float, float]] = {}
    for row, (_, members) in enumerate(layers):
        for i, argument in enumerate(members):
            positions[argument] = (i - (len(members) - 1) / 2.0, -row)

    fig, (ax_graph, ax_bars) = plt.subplots(
        1, 2, figsize=(10, 5), gridspec_kw={"width_ratios": [3, 1]}
    )
    cmap = plt.get_cmap(_LAYER_CMAP)
    n_layers = max(len(layers), 1)

    for source, target in sorted(af.attacks):
        x1, y1 = positions[source]
        x2, y2 = positions[target]
        style = "arc3,rad=0.25" if source != target else "arc3,rad=0.0"
        if source == target:
            # Self-attack: small loop above the node.
            arrow = FancyArrowPatch(
                (x1 - 0.08, y1 + 0.1),
                (x1 + 0.08, y1 + 0.1),
                connectionstyle="arc3,rad=2.5",
                arrowstyle="-|>",
                mutation_scale=12,
                color="0.4",
                shrinkA=4,
                shrinkB=4,
            )
        else:
            arrow = FancyArrowPatch(
                (x1, y1),
                (x2, y2),
                connectionstyle=style,
                arrowstyle="-|>",
                mutation_scale=12,
                color="0.4",
                shrinkA=14,
                shrinkB=14,
            )
        ax_graph.add_patch(arrow)

    for row, (rank, members) in enumerate(layers):
        color = _INF_COLOR if rank == INF else cmap(row / max(n_layers - 1, 1) * 0.85)
        for argument in members:
            x, y = positions[argument]
            ax_graph.scatter([x], [y], s=900, color=color, zorder=3, edgecolors="0.2")
            ax_graph.annotate(
                f"{argument}\n{rank_str(rank)}",
                (x, y),
                ha="center",
                va="center",
                fontsize=8,
                zorder=4,
            )

    ax_graph.set_title(title or "strata by rank")
    ax_graph.set_axis_off()
    if positions:
        xs = [p[0] for p in positions.values()]
        ys = [p[1] for p in positions.values()]
        ax_graph.set_xlim(min(xs) - 1, max(xs) + 1)
        ax_graph.set_ylim(min(ys) - 1, max(ys) + 1)

    labels = [rank_str(rank) for rank, _ in layers]
    sizes = [len(members) for _, members in layers]
    colors = [
        _INF_COLOR if rank == INF else cmap(row / max(n_layers - 1, 1) * 0.85)
        for row, (rank, _) in enumerate(layers)
    ]
    ax_bars.bar(range(len(layers)), sizes, color=colors, edgecolor="0.2")
    ax_bars.set_xticks(range(len(layers)))
    ax_bars.set_xticklabels(labels)
    ax_bars.set_xlabel("rank")
    ax_bars.set_ylabel("arguments")
    ax_bars.set_title("stratum sizes")
    if sizes:
        ax_bars.set_yticks(range(0, max(sizes) + 1))

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(
    outdir: Path | str,
    stem: str,
    af: ArgumentationFramework,
    ranking: StratifiedLabeling,
    title: str = "",
) -> tuple[Path, Path]:
    """Write ``<stem>_ranks.csv`` and ``<stem>_strata.png`` under ``outdir``;
    returns the two paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / f"{stem}_ranks.csv"
    png_path = outdir / f"{stem}_strata.png"
    write_rank_csv(csv_path, ranking)
    render_figure(png_path, af, ranking, title=title)
    return csv_path, png_path
