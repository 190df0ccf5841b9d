"""Figure rendering for sweep reports (PNG files next to the CSV)."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# jamming schemes dashed, hybrids solid and thick, non-jamming thin
STYLES = {
    "CS": dict(color="0.5", ls="-", marker="x"),
    "OS": dict(color="tab:blue", ls="-", marker="o"),
    "SS": dict(color="tab:cyan", ls="-", marker="s"),
    "OS-MSISR": dict(color="tab:red", ls="--", marker="^"),
    "OS-MMISR": dict(color="tab:orange", ls="--", marker="v"),
    "SS-MSISR": dict(color="tab:purple", ls="--", marker="<"),
    "SS-MMISR": dict(color="tab:pink", ls="--", marker=">"),
    "OSW": dict(color="black", ls="-", marker="D", lw=2.0),
    "SSW": dict(color="tab:green", ls="-", marker="d", lw=2.0),
    "OSKJ": dict(color="tab:brown", ls=":", marker="*"),
}


def _style(name):
    st = dict(lw=1.2, ms=4, markevery=2)
    st.update(STYLES.get(name, {}))
    return st


def _axes(title, ylabel, figsize=(6.4, 4.4)):
    fig, ax = plt.subplots(figsize=figsize)
    ax.set_xlabel(r"Transmit power $P_S = P_R$ (dB)")
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title, fontsize=10)
    ax.grid(True, which="both", alpha=0.3)
    return fig, ax


def plot_ergodic(results, path, title=None):
    """Ergodic secrecy rate versus power, one line per scheme."""
    fig, ax = _axes(title, "Ergodic secrecy rate (BPCU)")
    for res in results.values():
        name = res.scheme.value
        ax.plot(res.ps_db, res.ergodic_rate, label=name, **_style(name))
    ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_outage(results, path, title=None):
    fig, ax = _axes(title, "Secrecy outage probability")
    plotted = False
    for res in results.values():
        if res.outage_prob is None:
            continue
        name = res.scheme.value
        # zero outage cannot be drawn on a log axis
        y = [p if p > 0 else float("nan") for p in res.outage_prob]
        ax.semilogy(res.ps_db, y, label=name, **_style(name))
        plotted = True
    if plotted:
        ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_topology(topology, path, title=None):
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    pts = topology.intermediates
    ax.scatter([p.x for p in pts], [p.y for p in pts], marker="o", facecolors="none", edgecolors="k", label="intermediate")
    for k, p in enumerate(pts):
        ax.annotate(str(k), (p.x, p.y), textcoords="offset points", xytext=(3, 3), fontsize=7)
    ax.scatter([topology.s1.x, topology.s2.x], [topology.s1.y, topology.s2.y], marker="s", c="tab:blue", label="sources")
    ax.scatter([topology.eve.x], [topology.eve.y], marker="^", c="tab:red", label="eavesdropper")
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-0.05, 1.05)
    ax.set_aspect("equal")
    ax.legend(fontsize=7, loc="center right")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
