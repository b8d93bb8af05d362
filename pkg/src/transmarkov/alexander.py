"""
Alexander polynomial of a braid closure from the reduced Burau representation.

All arithmetic is exact over Z[t].  Inverse generators are scaled by t so
that every matrix is polynomial; the resulting unit factor t^k disappears
in the normalisation.
"""

from __future__ import annotations

from functools import lru_cache

from sympy import Poly, symbols
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .braid import BraidWord

t = symbols("t")
_R = ZZ[t]


def _ring(c):
    return _R.from_sympy(c)


@lru_cache(maxsize=None)
def _burau(n: int, g: int) -> DomainMatrix:
    """Reduced Burau matrix of sigma_g (g > 0) or t * sigma_|g|^-1 (g < 0)."""
    k = n - 1
    i = abs(g) - 1  # the only row that differs from the identity
    diag = 1 if g > 0 else t
    rows = [[diag if r == c else 0 for c in range(k)] for r in range(k)]
    # sigma_i row: (t, -t, 1); t * sigma_i^-1 row: (t, -1, 1)
    rows[i][i] = -t if g > 0 else -1
    if i > 0:
        rows[i][i - 1] = t
    if i < k - 1:
        rows[i][i + 1] = 1
    return DomainMatrix([[_ring(v) for v in row] for row in rows], (k, k), _R)


def _det_i_minus(b: BraidWord):
    """det(t^N I - M) where M is the scaled Burau product and N the negative letter count."""
    n = b.strands
    k = n - 1
    m = DomainMatrix.eye(k, _R)
    scale = 0
    for g in b.letters:
        m = m * _burau(n, g)
        if g < 0:
            scale += 1
    tn = _R.from_sympy(t ** scale)
    ident = DomainMatrix.eye(k, _R) * tn
    return (ident - m).det()


def _coeffs(expr) -> list[int]:
    """Ascending integer coefficients of a polynomial."""
    p = Poly(_R.to_sympy(expr), t)
    return [int(c) for c in reversed(p.all_coeffs())]


def normalize(coeffs: list[int]) -> tuple[int, ...]:
    """Canonical representative up to units +-t^k: lowest degree 0, top coefficient positive."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    lead = 0
    while lead < len(coeffs) and coeffs[lead] == 0:
        lead += 1
    coeffs = coeffs[lead:]
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)


def alexander_poly(b: BraidWord) -> tuple[int, ...]:
    """Normalised Alexander polynomial as ascending coefficients; () is zero."""
    n = b.strands
    if n == 1:
        return (1,)
    det = Poly(_R.to_sympy(_det_i_minus(b)), t)
    cyclotomic = Poly(sum(t ** j for j in range(n)), t)
    q, r = det.div(cyclotomic)
    if not r.is_zero:
        raise ArithmeticError("Burau determinant not divisible by 1 + t + ... + t^(n-1)")
    return normalize([int(c) for c in reversed(q.all_coeffs())])


def format_poly(coeffs: tuple[int, ...]) -> str:
    if not coeffs:
        return "0"
    terms = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
