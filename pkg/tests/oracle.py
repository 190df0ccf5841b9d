"""Independent scalar transcription of the two-way AF secrecy formulas.

Written from the closed forms with plain ``math`` and explicit loops; it
shares no code with ``relayjam`` so that tests comparing the two catch
indexing or pairing mistakes in the vectorised path.

``g`` is a nested list/array of power gains with ``g[a][b] = |h_{a,b}|^2``;
node 0 is S1, 1 is S2, 2 is E and 3+k is intermediate k. ``ebar`` is a list
of mean power gains to E indexed the same way.
"""
import math

S1, S2, E = 0, 1, 2


def node(k):
    return 3 + k


def alpha(g, ps, pr, pj, r, j1, jam):
    r = node(r)
    d = 1 + g[S1][r] * ps + g[S2][r] * ps
    if jam:
        d += g[node(j1)][r] * pj
    return math.sqrt(1 / d)


def gammas(g, ps, pr, pj, r, j1, j2, jam, ebar=None):
    """Dict of SNR components; jammer entries are zero when ``jam`` is False."""
    a = alpha(g, ps, pr, pj, r, j1, jam)
    a2 = a * a
    R = node(r)

    def ge(x):  # eavesdropper-link gain, instantaneous or mean
        return g[x][E] if ebar is None else ebar[x]

    out = {"alpha": a}
    out["S1S2"] = a2 * pr * ps * g[S1][R] * g[R][S2]
    out["S2S1"] = a2 * pr * ps * g[S2][R] * g[R][S1]
    out["RS1"] = a2 * pr * g[R][S1]
    out["RS2"] = a2 * pr * g[R][S2]
    out["S1E"] = ps * ge(S1)
    out["S2E"] = ps * ge(S2)
    out["S1RE"] = a2 * pr * ps * g[S1][R] * ge(R)
    out["S2RE"] = a2 * pr * ps * g[S2][R] * ge(R)
    out["RE"] = a2 * pr * ge(R)
    if jam:
        J1, J2 = node(j1), node(j2)
        out["J1S1"] = a2 * pr * pj * g[J1][R] * g[R][S1]
        out["J1S2"] = a2 * pr * pj * g[J1][R] * g[R][S2]
        out["J2S1"] = pj * g[J2][S1]
        out["J2S2"] = pj * g[J2][S2]
        out["J1E"] = pj * ge(J1)
        out["J2E"] = pj * ge(J2)
        out["J1RE"] = a2 * pr * pj * g[J1][R] * ge(R)
    else:
        for k in ("J1S1", "J1S2", "J2S1", "J2S2", "J1E", "J2E", "J1RE"):
            out[k] = 0.0
    return out


def gamma_dest(G, j, known=False):
    """SINR at destination S_j (message of the other source)."""
    i = 3 - j
    sig = G[f"S{i}S{j}"]
    if known:
        return sig / (G[f"RS{j}"] + 1)
    return sig / (G[f"J1S{j}"] + G[f"J2S{j}"] + G[f"RS{j}"] + 1)


def gamma_eve(G, i):
    j = 3 - i
    first = G[f"S{i}E"] / (G[f"S{j}E"] + G["J1E"] + 1)
    second = G[f"S{i}RE"] / (G[f"S{j}RE"] + G["J1RE"] + G["J2E"] + G["RE"] + 1)
    return first + second


def rate(gd, ge):
    # log1p: log2(1 + x) loses ~eps/x relative accuracy for small SINRs
    return max(0.0, (math.log1p(gd) - math.log1p(ge)) / (2 * math.log(2)))


def all_sinrs(g, ps, pr, pj, r, j1, j2, mode, ebar=None):
    """(G1, G2, GE1, GE2); mode is 'jam', 'none' or 'known'. GE uses ebar when given."""
    jam = mode != "none"
    G = gammas(g, ps, pr, pj, r, j1, j2, jam)
    known = mode == "known"
    g1, g2 = gamma_dest(G, 1, known), gamma_dest(G, 2, known)
    if ebar is not None:
        G = gammas(g, ps, pr, pj, r, j1, j2, jam, ebar)
    return g1, g2, gamma_eve(G, 1), gamma_eve(G, 2)


def true_rates(g, ps, pr, pj, r, j1, j2, mode):
    g1, g2, e1, e2 = all_sinrs(g, ps, pr, pj, r, j1, j2, mode)
    return rate(g1, e2), rate(g2, e1)


# scheme -> (mode, uses mean E gains, objective)
SCHEMES = {
    "CS": ("none", False, "cs"),
    "OS": ("none", False, "sum"),
    "SS": ("none", True, "sum"),
    "OS-MSISR": ("jam", False, "sum"),
    "OS-MMISR": ("jam", False, "min"),
    "SS-MSISR": ("jam", True, "sum"),
    "SS-MMISR": ("jam", True, "min"),
    "OSKJ": ("known", False, "sum"),
}


def metric(scheme, g, ebar, ps, pr, pj, r, j1, j2):
    mode, avg, obj = SCHEMES[scheme]
    g1, g2, e1, e2 = all_sinrs(g, ps, pr, pj, r, j1, j2, mode, ebar if avg else None)
    if obj == "cs":
        return (1 + g1) * (1 + g2)
    a = (1 + g1) / (1 + e2)
    b = (1 + g2) / (1 + e1)
    return a * b if obj == "sum" else min(a, b)


def brute_force(scheme, g, ebar, ps, pr, pj, K, allow_equal=True):
    """Naive exhaustive argmax; returns (triple, metric) with jammers None when unused."""
    mode = SCHEMES[scheme][0]
    best, best_val = None, -math.inf
    if mode == "none":
        for r in range(K):
            v = metric(scheme, g, ebar, ps, pr, pj, r, None, None)
            if v > best_val:
                best, best_val = (r, None, None), v
        return best, best_val
    for r in range(K):
        for j1 in range(K):
            if j1 == r:
                continue
            for j2 in range(K):
                if j2 == r or (not allow_equal and j1 == j2):
                    continue
                v = metric(scheme, g, ebar, ps, pr, pj, r, j1, j2)
                if v > best_val:
                    best, best_val = (r, j1, j2), v
    return best, best_val


def brute_force_switch(variant, g, ebar, ps, pr, pj, K):
    """Returns (triple, jamming_active, jam_score, plain_score)."""
    jam_s, plain_s = ("OS-MSISR", "OS") if variant == "OSW" else ("SS-MSISR", "SS")
    tj, mj = brute_force(jam_s, g, ebar, ps, pr, pj, K)
    tp, mp = brute_force(plain_s, g, ebar, ps, pr, pj, K)
    if variant == "OSW":
        sj = sum(true_rates(g, ps, pr, pj, *tj, "jam"))
        sp = sum(true_rates(g, ps, pr, pj, *tp, "none"))
    else:
        sj, sp = mj, mp
    return (tj, True, sj, sp) if sj > sp else (tp, False, sj, sp)
