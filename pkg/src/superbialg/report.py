"""Figure rendering for catalog verification runs.

Kept separate from the text report path so the plotting stack is only
imported when figures were actually requested.
"""

import os

__all__ = ["render_catalog_figures"]


def _pyplot():
    # headless backend; must be pinned before pyplot loads
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _check_order(reports):
    seen = []
    for rep in reports:
        for _, checks in rep.rows:
            for c in checks:
                if c.name not in seen:
                    seen.append(c.name)
    return seen


def render_catalog_figures(reports, out_dir, stem="catalog"):
    """Write one pass/fail grid per table plus a summary chart.

    A cell is green only when the check passed at every sample of the
    entry. Returns the written paths in deterministic order.
    """
    plt = _pyplot()
    from matplotlib.colors import ListedColormap

    os.makedirs(out_dir, exist_ok=True)
    cmap = ListedColormap(["#b03a2e", "#1e8449"])
    names = _check_order(reports)
    by_table = {}
    for rep in reports:
        by_table.setdefault(rep.table, []).append(rep)

    paths = []
    for table in sorted(by_table):
        rows = by_table[table]
        grid = []
        for rep in rows:
            status = {}
            for _, checks in rep.rows:
                for c in checks:
                    status[c.name] = status.get(c.name, True) and c.ok
            grid.append([1 if status.get(n, False) else 0 for n in names])
        fig, ax = plt.subplots(
            figsize=(1.1 * len(names) + 2.5, 0.28 * len(rows) + 1.8))
        ax.imshow(grid, cmap=cmap, vmin=0, vmax=1, aspect="auto")
        ax.set_xticks(range(len(names)))
        ax.set_xticklabels(names, rotation=40, ha="right", fontsize=8)
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels([r.entry_id for r in rows], fontsize=8)
        samples = sum(len(r.rows) for r in rows)
        ax.set_title(f"table {table}: {len(rows)} entries, {samples} sampled points")
        fig.tight_layout()
        path = os.path.join(out_dir, f"{stem}_table{table}.png")
        fig.savefig(path, dpi=110)
        plt.close(fig)
        paths.append(path)

    fig, ax = plt.subplots(figsize=(6, 0.6 * len(by_table) + 1.6))
    labels = [f"table {t}" for t in sorted(by_table)]
    passed = [sum(1 for r in by_table[t] if r.ok) for t in sorted(by_table)]
    total = [len(by_table[t]) for t in sorted(by_table)]
    ax.barh(labels, total, color="#b03a2e", label="entries")
    ax.barh(labels, passed, color="#1e8449", label="passing")
    for y, (p, n) in enumerate(zip(passed, total)):
        ax.text(n + 0.3, y, f"{p}/{n}", va="center", fontsize=9)
    ax.set_xlim(0, max(total) * 1.15 + 1)
    ax.invert_yaxis()
    ax.legend(loc="lower right", fontsize=8)
    ax.set_title("catalog verification summary")
    fig.tight_layout()
    path = os.path.join(out_dir, f"{stem}_summary.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    paths.append(path)
    return paths
