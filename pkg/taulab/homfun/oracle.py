"""
Closed-form AR translates of uniserial modules over a Nakayama algebra.

With arrows i -> i+1, PJ(i,k) has composition factors S_i, ..., S_{i+k-1}. It is
projective when k = c_i and injective when no uniserial of length k+1 ends in the same
socle, that is when i is the first vertex of a linear series or c_{i-1} <= k. Then
tau PJ(i,k) = PJ(i+1,k) and tau^-1 PJ(i,k) = PJ(i-1,k), indices mod n.
"""
from taulab.algebra.kupisch import KupischSeries


def is_projective_uniserial(series: KupischSeries, i: int, k: int) -> bool:
    return k == series.lengths[i]


def is_injective_uniserial(series: KupischSeries, i: int, k: int) -> bool:
    if not series.cyclic and i == 0:
        return True
    return series.lengths[(i - 1) % series.n] <= k


def tau_label(series: KupischSeries, i: int, k: int) -> str:
    if is_projective_uniserial(series, i, k):
        return "0"
    return f"PJ({(i + 1) % series.n},{k})"


def tau_inv_label(series: KupischSeries, i: int, k: int) -> str:
    if is_injective_uniserial(series, i, k):
        return "0"
    return f"PJ({(i - 1) % series.n},{k})"


def uniserial_labels(series: KupischSeries) -> list[tuple[int, int]]:
    return [(i, k) for i, c in enumerate(series.lengths) for k in range(1, c + 1)]
