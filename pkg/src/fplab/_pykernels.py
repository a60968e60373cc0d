"""Pure-Python kernels. Same contracts as the compiled ``_ckernels`` module.

``chi_constants`` decides, for every i, whether

    sum_p sigma_i(t^w_p) / prod_j (1 - t^w_p^j)

is a constant, without building rational functions.  Each summand is
rewritten as (-1)^m_p P_p,i / Q_p with Q_p = prod_j (1 - t^|w_p^j|), then the
whole sum is put over L = prod_p Q_p.  Since L(0) = 1, the sum is constant
iff R_i = sum_p (-1)^m_p P_p,i * L / Q_p equals R_i(0) * L coefficientwise.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _one_minus_product(abs_weights: Sequence[int]) -> list:
    poly = [1]
    for a in abs_weights:
        nxt = poly + [0] * a
        for e, c in enumerate(poly):
            nxt[e + a] -= c
        poly = nxt
    return poly


def _shifted_sigmas(weights: Sequence[int]) -> list:
    """Coefficient lists of t^A * sigma_i(t^w) for i = 0..n, A = sum of |negative w|."""
    n = len(weights)
    deg = sum(abs(w) for w in weights)
    layers = [[0] * (deg + 1) for _ in range(n + 1)]
    layers[0][0] = 1
    used = 0
    for w in weights:
        a = abs(w)
        for i in range(min(used + 1, n), -1, -1):
            row = layers[i]
            prev = layers[i - 1] if i else None
            new = [0] * (deg + 1)
            if w > 0:
                # (1 + y t^w): keep row, add y * t^w * prev
                for e in range(deg + 1):
                    v = row[e]
                    if prev is not None and e >= a:
                        v += prev[e - a]
                    new[e] = v
            else:
                # (t^a + y): shift row by a, add y * prev
                for e in range(deg + 1):
                    v = row[e - a] if e >= a else 0
                    if prev is not None:
                        v += prev[e]
                    new[e] = v
            layers[i] = new
        used += 1
    return layers


def chi_constants(weight_lists: Sequence[Sequence[int]]) -> list:
    """Per-index constant value of the chi^i localization sum, None where non-constant."""
    n = len(weight_lists[0])
    qs = [_one_minus_product([abs(w) for w in ws]) for ws in weight_lists]
    # prefix/suffix products give prod_{q != p} Q_q without division
    prefix = [[1]]
    for q in qs:
        prefix.append(_mul(prefix[-1], q))
    suffix = [[1]]
    for q in reversed(qs):
        suffix.append(_mul(suffix[-1], q))
    suffix.reverse()
    total = prefix[-1]
    deg = len(total) - 1
    acc = [[0] * (deg + 1) for _ in range(n + 1)]
    for p, ws in enumerate(weight_lists):
        others = _mul(prefix[p], suffix[p + 1])
        sign = -1 if sum(1 for w in ws if w < 0) % 2 else 1
        sig = _shifted_sigmas(ws)
        for i in range(n + 1):
            term = _mul(sig[i], others)
            row = acc[i]
            for e, c in enumerate(term):
                if c:
                    row[e] += sign * c
    out: list[Optional[int]] = []
    for i in range(n + 1):
        row = acc[i]
        c = row[0]
        out.append(c if all(row[e] == c * total[e] for e in range(deg + 1)) else None)
    return out


def is_balanced(weight_lists: Sequence[Sequence[int]]) -> bool:
    counts: dict = {}
    for ws in weight_lists:
        for w in ws:
            counts[w] = counts.get(w, 0) + 1
    return all(counts.get(-w, 0) == c for w, c in counts.items())
