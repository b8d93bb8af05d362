"""
Budgeted bidirectional search for Markov-move certificates.

Nodes are conjugacy classes, keyed by ConjKey, each remembered together with
one concrete word and the moves that reached it.  Edges are stabilizations
of a few representatives of the class and the legal destabilizations turned
up by ``destab_candidates``.  Completeness is heuristic: a NOT_FOUND outcome
says nothing about the pair.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field, fields
from typing import Iterator

from .alexander import alexander_poly
from .braid import BraidWord, components, free_reduce_letters, invert_letters, self_linking
from .garside import ConjKey, ConjugacyEngine, normal_form
from .moves import (
    TOPOLOGICAL,
    TRANSVERSAL,
    MODES,
    Conj,
    DestabPos,
    Move,
    MoveCertificate,
    Rewrite,
    StabNeg,
    StabPos,
    apply_move,
    conj_steps,
    destab_candidates,
    inverse_steps,
    verify_certificate,
)

log = logging.getLogger(__name__)

FOUND = "FOUND"
NOT_FOUND = "NOT_FOUND_WITHIN_BUDGET"
PRUNED = "PRUNED_INVARIANT"

__all__ = [
    "FOUND", "NOT_FOUND", "PRUNED", "SearchBudget", "SearchOutcome", "search",
    "reduce_to_standard_unknot", "standard_unknot", "alexander_poly", "random_move",
    "fuzz_pair",
]


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for ``search``.

    ``max_moves`` bounds the number of Markov (de)stabilizations in a
    certificate; conjugations and rewrites are free.  ``max_class_sweep``
    caps both the summit-set size and the conjugate sweep per class.
    ``max_seconds`` is a wall-clock guard (None disables it).
    """

    max_strands: int = 8
    max_moves: int = 12
    max_nodes: int = 200_000
    max_class_sweep: int = 5000
    max_seconds: float | None = 120.0

    def __post_init__(self) -> None:
        for f in ("max_strands", "max_moves", "max_nodes", "max_class_sweep"):
            v = getattr(self, f)
            if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                raise ValueError(f"{f} must be a positive integer, got {v!r}")
        if self.max_seconds is not None and not self.max_seconds > 0:
            raise ValueError(f"max_seconds must be positive or None, got {self.max_seconds!r}")

    @classmethod
    def from_mapping(cls, data: dict) -> "SearchBudget":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown budget keys: {', '.join(sorted(unknown))}")
        return cls(**data)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    certificate: MoveCertificate | None = None
    reason: str = ""
    nodes_tried: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == FOUND


@dataclass
class _Node:
    word: BraidWord
    parent: ConjKey | None
    steps: tuple[Move, ...]      # from the parent's word to ``word``
    depth: int                   # Markov moves from the root


@dataclass
class _Side:
    root: BraidWord
    nodes: dict[ConjKey, _Node] = field(default_factory=dict)
    frontier: list[ConjKey] = field(default_factory=list)
    depth: int = 0

    def path(self, key: ConjKey) -> list[Move]:
        """Moves from the root word to the word stored at ``key``."""
        chunks = []
        while key is not None:
            node = self.nodes[key]
            chunks.append(node.steps)
            key = node.parent
        return [m for chunk in reversed(chunks) for m in chunk]


class _Timeout(Exception):
    pass


class _Searcher:
    def __init__(self, budget: SearchBudget, mode: str):
        self.budget = budget
        self.mode = mode
        self.engine = ConjugacyEngine(budget.max_class_sweep)
        self.deadline = (time.monotonic() + budget.max_seconds
                         if budget.max_seconds is not None else None)
        self.tried = 0

    def check_clock(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Timeout

    def key(self, b: BraidWord) -> tuple[ConjKey, tuple[int, ...]]:
        return self.engine.key_with_conjugator(b, allow_partial=True)

    def neighbours(self, word: BraidWord) -> Iterator[tuple[list[Move], BraidWord]]:
        n = word.strands
        b = self.budget
        key, c = self.key(word)
        rep = BraidWord(n, key.nf.letters())
        to_rep = conj_steps(c) + [Rewrite(rep.letters)]
        if n < b.max_strands:
            yield [StabPos()], apply_move(word, StabPos())
            yield to_rep + [StabPos()], apply_move(rep, StabPos())
            if self.mode == TOPOLOGICAL:
                yield [StabNeg(n)], apply_move(word, StabNeg(n))
                yield to_rep + [StabNeg(n)], apply_move(rep, StabNeg(n))
        if n >= 2:
            kinds = [False, True] if self.mode == TOPOLOGICAL else [False]
            for negative in kinds:
                self.check_clock()
                for cand in destab_candidates(word, self.engine, negative=negative,
                                              limit=b.max_class_sweep, allow_partial=True):
                    yield cand.steps(), cand.result


def _invariants(b: BraidWord, mode: str) -> dict:
    inv = {"components": components(b), "alexander": alexander_poly(b)}
    if mode == TRANSVERSAL:
        inv["self_linking"] = self_linking(b)
    return inv


def _join(fwd: _Side, bwd: _Side, key: ConjKey, engine: ConjugacyEngine,
          a: BraidWord, target: BraidWord, mode: str) -> MoveCertificate:
    nf_, nb = fwd.nodes[key], bwd.nodes[key]
    _, cf = engine.key_with_conjugator(nf_.word, allow_partial=True)
    _, cb = engine.key_with_conjugator(nb.word, allow_partial=True)
    steps: list[Move] = fwd.path(key)
    # wf -> key element -> wb
    bridge = free_reduce_letters(cf + invert_letters(cb))
    steps += conj_steps(bridge)
    steps.append(Rewrite(nb.word.letters))
    steps += inverse_steps(target, bwd.path(key))
    steps.append(Rewrite(target.letters))
    return MoveCertificate(a, tuple(_tidy(a, steps)), target, mode)


def _tidy(start: BraidWord, steps: list[Move]) -> list[Move]:
    """Drop rewrites that do not change the literal word, and cancel conj pairs."""
    out: list[Move] = []
    words = [start]
    for m in steps:
        cur = words[-1]
        if isinstance(m, Rewrite) and m.witness == cur.letters:
            continue
        if (isinstance(m, Conj) and out and isinstance(out[-1], Conj)
                and out[-1].g == -m.g):
            out.pop()
            words.pop()
            continue
        out.append(m)
        words.append(apply_move(cur, m))
    return out


def search(a: BraidWord, b: BraidWord, budget: SearchBudget | None = None,
           mode: str = TRANSVERSAL) -> SearchOutcome:
    budget = budget or SearchBudget()
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    t0 = time.monotonic()

    def outcome(status, cert=None, reason="", tried=0):
        return SearchOutcome(status, cert, reason, tried, time.monotonic() - t0)

    if max(a.strands, b.strands) > budget.max_strands:
        raise ValueError(f"endpoint strand count exceeds max_strands={budget.max_strands}")
    ia, ib = _invariants(a, mode), _invariants(b, mode)
    for name in ia:
        if ia[name] != ib[name]:
            return outcome(PRUNED, reason=f"{name} differs: {ia[name]} vs {ib[name]}")

    if a.strands == b.strands and a.letters == b.letters:
        return outcome(FOUND, MoveCertificate(a, (), b, mode))

    s = _Searcher(budget, mode)
    try:
        cert, tried = _bidirectional(s, a, b, mode)
    except _Timeout:
        return outcome(NOT_FOUND, reason="wall-clock limit reached", tried=s.tried)
    if cert is None:
        return outcome(NOT_FOUND, reason=tried, tried=s.tried)
    check = verify_certificate(cert)
    if not check:
        # never report an unverified certificate
        log.error("search produced an invalid certificate at step %s: %s",
                  check.failed_step, check.reason)
        return outcome(NOT_FOUND, reason=f"internal: certificate failed ({check.reason})",
                       tried=s.tried)
    return outcome(FOUND, cert, tried=s.tried)


def _bidirectional(s: _Searcher, a: BraidWord, b: BraidWord, mode: str):
    budget = s.budget
    fwd, bwd = _Side(a), _Side(b)
    for side in (fwd, bwd):
        k, _ = s.key(side.root)
        side.nodes[k] = _Node(side.root, None, (), 0)
        side.frontier.append(k)
    s.tried = len(fwd.nodes) + len(bwd.nodes) - 1
    for k in fwd.nodes:
        if k in bwd.nodes:
            return _join(fwd, bwd, k, s.engine, a, b, mode), ""

    while fwd.frontier or bwd.frontier:
        if fwd.depth + bwd.depth >= budget.max_moves:
            return None, "move budget exhausted"
        side, other = (fwd, bwd) if _smaller(fwd, bwd) else (bwd, fwd)
        next_frontier: list[ConjKey] = []
        for key in side.frontier:
            node = side.nodes[key]
            for steps, word in s.neighbours(node.word):
                s.check_clock()
                k, _ = s.key(word)
                if k in side.nodes:
                    continue
                side.nodes[k] = _Node(word, key, tuple(steps), node.depth + 1)
                s.tried += 1
                if k in other.nodes:
                    if side is fwd:
                        return _join(fwd, bwd, k, s.engine, a, b, mode), ""
                    return _join(fwd, bwd, k, s.engine, a, b, mode), ""
                next_frontier.append(k)
                if s.tried >= budget.max_nodes:
                    return None, "node budget exhausted"
        side.frontier = next_frontier
        side.depth += 1
        if not side.frontier and not other.frontier:
            break
    return None, "search space exhausted"


def _smaller(fwd: _Side, bwd: _Side) -> bool:
    if not bwd.frontier:
        return True
    if not fwd.frontier:
        return False
    return len(fwd.frontier) <= len(bwd.frontier)


# ---------------------------------------------------------------------------
# unknots


def standard_unknot(n: int) -> BraidWord:
    """sigma_1^-1 ... sigma_{n-1}^-1 in B_n, self-linking 1 - 2n."""
    return BraidWord(n, tuple(-i for i in range(1, n)))


def reduce_to_standard_unknot(b: BraidWord, budget: SearchBudget | None = None) -> SearchOutcome:
    if components(b) != 1:
        raise ValueError("reduce_to_standard_unknot needs a knot")
    if alexander_poly(b) != (1,):
        raise ValueError("Alexander polynomial is not 1, so the closure is not an unknot")
    tb = self_linking(b)
    if tb % 2 == 0:
        raise ValueError(f"self-linking {tb} is even, impossible for a knot")
    n = (1 - tb) // 2
    budget = budget or SearchBudget()
    if n > budget.max_strands:
        return SearchOutcome(NOT_FOUND, reason=f"target needs {n} strands")
    return search(b, standard_unknot(n), budget, TRANSVERSAL)


# ---------------------------------------------------------------------------
# fuzzing


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)] if n > 1 else []
    return BraidWord(n, tuple(letters))


def random_move(rng: random.Random, b: BraidWord, max_strands: int = 8,
                mode: str = TRANSVERSAL, engine: ConjugacyEngine | None = None) -> Move | None:
    """A random legal move at b, or None if the draw produced nothing legal."""
    n = b.strands
    options = ["conj", "rewrite"]
    if n < max_strands:
        options.append("stab+")
        if mode == TOPOLOGICAL:
            options.append("stab-")
    if n >= 2:
        options.append("destab+")
    kind = rng.choice(options)
    if kind == "conj":
        if n < 2:
            return None
        return Conj(rng.choice([1, -1]) * rng.randint(1, n - 1))
    if kind == "rewrite":
        return Rewrite(normal_form(b).letters())
    if kind == "stab+":
        return StabPos()
    if kind == "stab-":
        return StabNeg(rng.randint(1, n))
    if b.letters and b.letters[-1] == n - 1 and n - 1 not in map(abs, b.letters[:-1]):
        return DestabPos(b.letters[:-1])
    cands = destab_candidates(b, engine, limit=500, allow_partial=True)
    if not cands:
        return None
    return rng.choice(cands).move if not rng.random() < 0.5 else cands[0].move


def fuzz_pair(rng: random.Random, moves: int = 6, max_strands: int = 6,
              engine: ConjugacyEngine | None = None) -> tuple[BraidWord, BraidWord, list[Move]]:
    """A seed word and its image under up to ``moves`` random transversal moves.

    Destabilization moves are preceded by the conjugations that expose them,
    so the returned step list replays literally from the seed.
    """
    engine = engine or ConjugacyEngine(500)
    n = rng.randint(2, 4)
    start = random_word(rng, n, rng.randint(1, 8))
    cur = start
    steps: list[Move] = []
    for _ in range(rng.randint(1, moves)):
        m = random_move(rng, cur, max_strands, TRANSVERSAL, engine)
        if m is None:
            continue
        if isinstance(m, DestabPos):
            for cand in destab_candidates(cur, engine, limit=500, allow_partial=True):
                if cand.move == m:
                    for step in cand.steps():
                        cur = apply_move(cur, step)
                        steps.append(step)
                    break
            else:
                cur = apply_move(cur, m)
                steps.append(m)
            continue
        cur = apply_move(cur, m)
        steps.append(m)
    return start, cur, steps
