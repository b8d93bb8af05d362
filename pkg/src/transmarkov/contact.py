"""
Index calculus for Legendrian and transversal links.

Only the integer indices are modelled: the Maslov index ``mu``, the
Thurston-Bennequin index ``tb`` and the number of components.  Operations
act on these indices the way the corresponding geometric constructions act
on the links.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .braid import (
    BraidWord,
    closure_permutation,
    compose,
    degree,
    half_twist,
    invert,
    self_linking,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LegendrianSpec:
    mu: int
    tb: int
    components: int = 1
    tag: str = ""

    def __post_init__(self) -> None:
        if self.components < 1:
            raise ValueError("a link has at least one component")
        if (self.tb + self.mu - self.components) % 2:
            raise ValueError(
                f"tb + mu = {self.tb + self.mu} must have the parity of the "
                f"component count {self.components}"
            )


def _sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


def l_pq(p: int, q: int) -> LegendrianSpec:
    """Legendrian unknot L_{p,q}: p positive and q negative zig-zags on L_{0,0}."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return LegendrianSpec(p - q, -1 - p - q, 1, f"L_{{{p},{q}}}")


def unknot_parameters(spec: LegendrianSpec) -> tuple[int, int]:
    """(p, q) of the L_{p,q} with the given indices."""
    if spec.components != 1:
        raise ValueError("only knots are classified by (p, q)")
    p = (spec.mu - spec.tb - 1) // 2
    q = (-spec.mu - spec.tb - 1) // 2
    if p < 0 or q < 0:
        raise ValueError(f"no Legendrian unknot has mu={spec.mu}, tb={spec.tb}")
    return p, q


def zeta(spec: LegendrianSpec, sign) -> LegendrianSpec:
    s = _sign(sign)
    tag = f"zeta{'+' if s > 0 else '-'}({spec.tag})" if spec.tag else ""
    return LegendrianSpec(spec.mu + s, spec.tb - 1, spec.components, tag)


def rho_index(tb: int) -> int:
    """tb of a transversal link after the rho stabilization."""
    return tb - 2


def transversalize(spec: LegendrianSpec, sign) -> int:
    """Self-linking of the positive or negative transverse push-off."""
    return spec.tb + _sign(sign) * spec.mu


def disjoint_union(a: LegendrianSpec, b: LegendrianSpec, lk: int) -> LegendrianSpec:
    return LegendrianSpec(a.mu + b.mu, a.tb + 2 * lk + b.tb, a.components + b.components)


def closure_indices(a: LegendrianSpec, b: BraidWord, n: int | None = None) -> LegendrianSpec:
    """Indices of the Legendrian closure of a positive braid around the knot ``a``."""
    n = b.strands if n is None else n
    if n != b.strands:
        raise ValueError(f"braid has {b.strands} strands, expected {n}")
    if a.components != 1:
        raise ValueError("the axis must be a knot")
    if not b.is_positive():
        raise ValueError("closure indices need a positive braid; "
                         "split off Delta^-k with positive_decomposition first")
    m = closure_permutation(b).components
    return LegendrianSpec(a.mu * n, n * n * a.tb + degree(b), m)


@dataclass(frozen=True)
class ClosureComparison:
    """Index-level closure of b around L_{p,q} against a topological braid for it."""

    indices: LegendrianSpec
    braid: BraidWord
    braid_components: int
    braid_self_linking: int
    positive_push: int
    negative_push: int

    @property
    def components_agree(self) -> bool:
        return self.braid_components == self.indices.components

    @property
    def self_linking_matches(self) -> bool:
        return self.braid_self_linking in (self.positive_push, self.negative_push)


def compare_closure_braid(p: int, q: int, b: BraidWord,
                          full_twist: bool = True) -> ClosureComparison:
    """Compare closure_indices with the braid D^(-p-q-1) b.

    D is the full twist by default: the Legendrian framing of L_{p,q} turns
    tb = -1-p-q full times against the Seifert framing.  With
    ``full_twist=False`` D is the half twist, whose odd powers permute the
    strands and so change the link type.
    """
    indices = closure_indices(l_pq(p, q), b)
    twist = half_twist(b.strands)
    if full_twist:
        twist = compose(twist, twist)
    inv = invert(twist)
    braid = b
    for _ in range(p + q + 1):
        braid = compose(inv, braid)
    cmp = ClosureComparison(
        indices=indices,
        braid=braid,
        braid_components=closure_permutation(braid).components,
        braid_self_linking=self_linking(braid),
        positive_push=transversalize(indices, "+"),
        negative_push=transversalize(indices, "-"),
    )
    if b.strands >= 2 and not (cmp.self_linking_matches and cmp.components_agree):
        log.info("L_{%d,%d} closure of %s: braid components %d, self-linking %d; "
                 "indices give components %d, push-offs %d/%d",
                 p, q, b, cmp.braid_components, cmp.braid_self_linking,
                 indices.components, cmp.positive_push, cmp.negative_push)
    return cmp


# ---------------------------------------------------------------------------
# fronts


@dataclass(frozen=True)
class FrontDiagram:
    positive_crossings: int
    negative_crossings: int
    up_cusps: int
    down_cusps: int
    components: int = 1

    def __post_init__(self) -> None:
        counts = (self.positive_crossings, self.negative_crossings, self.up_cusps, self.down_cusps)
        if any(c < 0 for c in counts):
            raise ValueError("front counts must be nonnegative")
        if self.components < 1:
            raise ValueError("a front has at least one component")
        if self.cusps % 2:
            raise ValueError("a closed front has an even number of cusps")

    @property
    def cusps(self) -> int:
        return self.up_cusps + self.down_cusps

    def with_zigzag(self, sign) -> "FrontDiagram":
        """Add a zig-zag: two cusps oriented down (+) or up (-)."""
        if _sign(sign) > 0:
            return FrontDiagram(self.positive_crossings, self.negative_crossings,
                                self.up_cusps, self.down_cusps + 2, self.components)
        return FrontDiagram(self.positive_crossings, self.negative_crossings,
                            self.up_cusps + 2, self.down_cusps, self.components)

    def reversed(self) -> "FrontDiagram":
        """Reverse orientation: up and down cusps trade places."""
        return FrontDiagram(self.positive_crossings, self.negative_crossings,
                            self.down_cusps, self.up_cusps, self.components)


def front_tb(f: FrontDiagram) -> int:
    return f.positive_crossings - f.negative_crossings - f.cusps // 2


def front_mu(f: FrontDiagram) -> int:
    if f.components != 1:
        raise ValueError("the cusp formula for mu needs a single component")
    diff = f.down_cusps - f.up_cusps
    if diff % 2:
        raise ValueError("odd imbalance between down and up cusps")
    return diff // 2


def front_spec(f: FrontDiagram) -> LegendrianSpec:
    return LegendrianSpec(front_mu(f), front_tb(f), f.components)


_FRONT_KEYS = ("crossings+", "crossings-", "cusps_up", "cusps_down", "components")


def format_front(f: FrontDiagram) -> str:
    return (f"front crossings+={f.positive_crossings} crossings-={f.negative_crossings} "
            f"cusps_up={f.up_cusps} cusps_down={f.down_cusps} components={f.components}\n")


def parse_front(text: str) -> FrontDiagram:
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if len(lines) != 1:
        raise ValueError("front file must contain exactly one front line")
    parts = lines[0].split()
    if parts[0] != "front":
        raise ValueError(f"expected a 'front' line, got {lines[0]!r}")
    values = {}
    for tok in parts[1:]:
        key, eq, val = tok.partition("=")
        if not eq or key not in _FRONT_KEYS or key in values:
            raise ValueError(f"bad front field {tok!r}")
        values[key] = int(val)
    missing = [k for k in _FRONT_KEYS if k not in values]
    if missing:
        raise ValueError(f"front line lacks {', '.join(missing)}")
    return FrontDiagram(values["crossings+"], values["crossings-"],
                        values["cusps_up"], values["cusps_down"], values["components"])


def l00_front() -> FrontDiagram:
    """Front of L_{0,0}: the eye z^2 = cos^3 x with one up and one down cusp."""
    return FrontDiagram(0, 0, 1, 1, 1)
