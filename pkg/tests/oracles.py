"""Independent reference computations used to freeze expected values."""

from __future__ import annotations

import random

import sympy as sp


def track_strands(n, letters):
    """Signed crossings as (sign, strand_a, strand_b) by following positions."""
    at = list(range(n))          # at[pos] = strand currently at pos
    out = []
    for g in letters:
        i = abs(g) - 1
        out.append((1 if g > 0 else -1, at[i], at[i + 1]))
        at[i], at[i + 1] = at[i + 1], at[i]
    return out, at


def closure_cycles(n, letters):
    _, at = track_strands(n, letters)
    # strand at final position p continues as the strand starting at p
    nxt = {at[p]: p for p in range(n)}
    seen, cycles = set(), []
    for s in range(n):
        if s in seen:
            continue
        cyc = []
        while s not in seen:
            seen.add(s)
            cyc.append(s)
            s = nxt[s]
        cycles.append(cyc)
    return cycles


def linking_oracle(n, letters):
    cycles = closure_cycles(n, letters)
    comp = {s: k for k, cyc in enumerate(cycles) for s in cyc}
    m = len(cycles)
    twice = [[0] * m for _ in range(m)]
    crossings, _ = track_strands(n, letters)
    for sign, a, b in crossings:
        ca, cb = comp[a], comp[b]
        if ca != cb:
            twice[ca][cb] += sign
            twice[cb][ca] += sign
    return [[v // 2 for v in row] for row in twice]


# --- Alexander polynomial by Fox calculus on the closure group ----------------

def _artin(n, letters):
    """Images of x_1..x_n under the braid, as free-group words of (gen, exp)."""
    imgs = [[(j, 1)] for j in range(n)]
    for g in letters:
        i = abs(g) - 1
        new = list(imgs)
        a, b = imgs[i], imgs[i + 1]
        if g > 0:
            new[i] = a + b + _inv(a)
            new[i + 1] = a
        else:
            new[i] = b
            new[i + 1] = _inv(b) + a + b
        imgs = [_reduce(w) for w in new]
    return imgs


def _inv(w):
    return [(j, -e) for j, e in reversed(w)]


def _reduce(w):
    out = []
    for x in w:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return out


def _fox(w, j, t):
    total, prefix = 0, 0
    for g, e in w:
        if g == j:
            total += t ** prefix if e > 0 else -t ** (prefix - 1)
        prefix += e
    return total


def alexander_oracle(n, letters):
    """Normalized Alexander polynomial of a knot closure (ascending coefficients)."""
    t = sp.symbols("t")
    if n == 1:
        return (1,)
    imgs = _artin(n, letters)
    rels = [_reduce(imgs[i] + [(i, -1)]) for i in range(n)]
    mat = sp.Matrix(n, n, lambda r, c: _fox(rels[r], c, t))
    minor = mat[: n - 1, : n - 1].det()
    expr = sp.expand(sp.cancel(minor * t ** (4 * len(letters) + 4)))
    coeffs = [int(c) for c in reversed(sp.Poly(expr, t).all_coeffs())]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)


def random_letters(rng: random.Random, n: int, length: int):
    if n < 2:
        return ()
    return tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
