"""
Markov moves, witness-carrying certificates, and their verifier.

Moves act on braid words:

    Conj(g)          b -> a b a^-1 with a = sigma_|g|^sign(g)
    StabPos          B_n -> B_n+1, b -> b sigma_n
    DestabPos(w)     B_n+1 -> B_n, legal iff b = w sigma_n
    StabNeg(k)       B_n -> B_n+1, b -> sigma_{n-1}..sigma_k b sigma_k^-1..sigma_{n-1}^-1 sigma_n^-1
    DestabNeg(w)     B_n+1 -> B_n, legal iff b = w sigma_n^-1
    Rewrite(w)       b -> w, legal iff b = w in B_n

Transversal certificates may not use the negative pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .braid import BraidWord, free_reduce_letters, invert_letters, parse_letters, parse_strands
from .garside import (
    ConjugacyEngine,
    NormalForm,
    nf_multiply,
    normal_form,
    normal_form_letters,
    parabolic_letters,
)

TRANSVERSAL = "transversal"
TOPOLOGICAL = "topological"
MODES = (TRANSVERSAL, TOPOLOGICAL)


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class Conj:
    g: int


@dataclass(frozen=True)
class StabPos:
    pass


@dataclass(frozen=True)
class DestabPos:
    witness: tuple[int, ...]


@dataclass(frozen=True)
class StabNeg:
    k: int


@dataclass(frozen=True)
class DestabNeg:
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Rewrite:
    witness: tuple[int, ...]


Move = Union[Conj, StabPos, DestabPos, StabNeg, DestabNeg, Rewrite]
NEGATIVE_MOVES = (StabNeg, DestabNeg)


def _witness(b_strands: int, letters: Sequence[int]) -> BraidWord:
    try:
        return BraidWord(b_strands, tuple(letters))
    except ValueError as exc:
        raise MoveError(f"bad witness: {exc}") from None


def stab_neg_letters(n: int, k: int, letters: Sequence[int]) -> tuple[int, ...]:
    if not 1 <= k <= n:
        raise MoveError(f"stab- index k={k} outside 1..{n}")
    prefix = tuple(range(n - 1, k - 1, -1))
    return prefix + tuple(letters) + invert_letters(prefix) + (-n,)


def apply_move(b: BraidWord, m: Move, mode: str | None = None) -> BraidWord:
    n = b.strands
    if mode == TRANSVERSAL and isinstance(m, NEGATIVE_MOVES):
        raise MoveError(f"{type(m).__name__} is not allowed in transversal mode")
    if isinstance(m, Conj):
        if m.g == 0 or abs(m.g) >= n:
            raise MoveError(f"conj {m.g} is not a generator of B_{n}")
        return BraidWord(n, (m.g,) + b.letters + (-m.g,))
    if isinstance(m, StabPos):
        return BraidWord(n + 1, b.letters + (n,))
    if isinstance(m, StabNeg):
        return BraidWord(n + 1, stab_neg_letters(n, m.k, b.letters))
    if isinstance(m, (DestabPos, DestabNeg)):
        if n < 2:
            raise MoveError("cannot destabilize a braid on one strand")
        w = _witness(n - 1, m.witness)
        last = n - 1 if isinstance(m, DestabPos) else -(n - 1)
        if normal_form_letters(n, w.letters + (last,)) != normal_form(b):
            raise MoveError("destabilization witness does not match the current braid")
        return w
    if isinstance(m, Rewrite):
        w = _witness(n, m.witness)
        if normal_form(w) != normal_form(b):
            raise MoveError("rewrite witness is not equal to the current braid")
        return w
    raise MoveError(f"unknown move {m!r}")


def replay(start: BraidWord, steps: Sequence[Move], mode: str | None = None) -> list[BraidWord]:
    """All intermediate words, starting with ``start``."""
    words = [start]
    for m in steps:
        words.append(apply_move(words[-1], m, mode))
    return words


def inverse_steps(start: BraidWord, steps: Sequence[Move]) -> list[Move]:
    """Moves leading from the end of ``steps`` back to ``start``."""
    words = replay(start, steps)
    back: list[Move] = []
    for k in range(len(steps) - 1, -1, -1):
        m, before = steps[k], words[k]
        if isinstance(m, Conj):
            back += [Conj(-m.g), Rewrite(before.letters)]
        elif isinstance(m, StabPos):
            back.append(DestabPos(before.letters))
        elif isinstance(m, DestabPos):
            back += [StabPos(), Rewrite(before.letters)]
        elif isinstance(m, StabNeg):
            if m.k != before.strands:
                raise MoveError("only plain negative stabilization (k = n) can be inverted")
            back.append(DestabNeg(before.letters))
        elif isinstance(m, DestabNeg):
            back += [StabNeg(words[k + 1].strands), Rewrite(before.letters)]
        else:
            back.append(Rewrite(before.letters))
    return back


def conj_steps(conjugator: Sequence[int]) -> list[Move]:
    """Moves carrying b to c^-1 b c for the conjugator word c."""
    return [Conj(-g) for g in conjugator]


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class MoveCertificate:
    start: BraidWord
    steps: tuple[Move, ...]
    end: BraidWord
    mode: str = TRANSVERSAL

    @property
    def markov_moves(self) -> int:
        return sum(isinstance(m, (StabPos, DestabPos, StabNeg, DestabNeg)) for m in self.steps)


@dataclass(frozen=True)
class Verification:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(c: MoveCertificate) -> Verification:
    if c.mode not in MODES:
        return Verification(False, None, f"unknown mode {c.mode!r}")
    current = c.start
    for k, m in enumerate(c.steps):
        try:
            current = apply_move(current, m, c.mode)
        except MoveError as exc:
            return Verification(False, k, str(exc))
    if current.strands != c.end.strands:
        return Verification(False, len(c.steps),
                            f"final braid has {current.strands} strands, end has {c.end.strands}")
    if normal_form(current) != normal_form(c.end):
        return Verification(False, len(c.steps), "final braid is not equal to the stated end")
    return Verification(True)


def _letters_text(letters: Sequence[int]) -> str:
    return " ".join(map(str, letters))


def _with_letters(head: str, letters: Sequence[int]) -> str:
    text = _letters_text(letters)
    return f"{head} : {text}" if text else f"{head} :"


def format_move(m: Move) -> str:
    if isinstance(m, Conj):
        return f"conj {m.g:+d}"
    if isinstance(m, StabPos):
        return "stab+"
    if isinstance(m, DestabPos):
        return _with_letters("destab+", m.witness)
    if isinstance(m, StabNeg):
        return f"stab- k={m.k}"
    if isinstance(m, DestabNeg):
        return _with_letters("destab-", m.witness)
    if isinstance(m, Rewrite):
        return _with_letters("rewrite", m.witness)
    raise TypeError(m)


def parse_move(line: str) -> Move:
    head, sep, tail = line.partition(":")
    head = head.strip()
    if head.startswith("conj"):
        parts = head.split()
        if len(parts) != 2 or sep:
            raise ValueError(f"malformed conj step: {line!r}")
        return Conj(int(parts[1]))
    if head == "stab+" and not sep:
        return StabPos()
    if head.startswith("stab-") and not sep:
        arg = head[len("stab-"):].strip()
        if not arg.startswith("k="):
            raise ValueError(f"malformed stab- step: {line!r}")
        return StabNeg(int(arg[2:]))
    kinds = {"destab+": DestabPos, "destab-": DestabNeg, "rewrite": Rewrite}
    if head in kinds and sep:
        return kinds[head](parse_letters(tail))
    raise ValueError(f"unknown certificate step: {line!r}")


def _format_endpoint(tag: str, b: BraidWord) -> str:
    return _with_letters(f"{tag} n={b.strands}", b.letters)


def _parse_endpoint(tag: str, line: str) -> BraidWord:
    head, sep, tail = line.partition(":")
    parts = head.split()
    if not sep or len(parts) != 2 or parts[0] != tag:
        raise ValueError(f"expected '{tag} n=<n> : <letters>', got {line!r}")
    return BraidWord(parse_strands(parts[1]), parse_letters(tail))


def format_certificate(c: MoveCertificate) -> str:
    lines = [f"mode {c.mode}", _format_endpoint("start", c.start)]
    lines += [format_move(m) for m in c.steps]
    lines.append(_format_endpoint("end", c.end))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> MoveCertificate:
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if len(lines) < 3:
        raise ValueError("certificate needs mode, start and end lines")
    mode_parts = lines[0].split()
    if len(mode_parts) != 2 or mode_parts[0] != "mode" or mode_parts[1] not in MODES:
        raise ValueError(f"bad mode line: {lines[0]!r}")
    start = _parse_endpoint("start", lines[1])
    end = _parse_endpoint("end", lines[-1])
    steps = tuple(parse_move(line) for line in lines[2:-1])
    return MoveCertificate(start, steps, end, mode_parts[1])


# ---------------------------------------------------------------------------
# destabilization discovery


@dataclass(frozen=True)
class DestabCandidate:
    """Conjugate b by ``conjugator`` then apply ``move`` to reach ``result``."""

    conjugator: tuple[int, ...]
    move: Move
    result: BraidWord

    def steps(self) -> list[Move]:
        return conj_steps(self.conjugator) + [self.move]


def _rotations(b: BraidWord) -> dict:
    """Cyclic rotations of the literal word, keyed by normal form, with conjugators."""
    out = {}
    letters = b.letters
    for k in range(len(letters)):
        # rotating the first k letters to the back conjugates by letters[:k]
        out.setdefault(normal_form_letters(b.strands, letters[k:] + letters[:k]), letters[:k])
    return out


def destab_candidates(b: BraidWord, engine: ConjugacyEngine | None = None, *,
                      negative: bool = False, slack: int = 1,
                      limit: int = 5000, allow_partial: bool = False) -> list[DestabCandidate]:
    """Legal destabilizations found among swept conjugates of b.

    Heuristic: only the summit-set neighbourhood and the cyclic rotations of
    b are examined, so a destabilizable class may yield nothing.  Every
    candidate returned is legal.
    """
    n = b.strands
    if n < 2:
        return []
    engine = engine or ConjugacyEngine(limit)
    pool = dict(_rotations(b))
    for y, c in engine.sweep(b, slack=slack, limit=limit, allow_partial=allow_partial).items():
        pool.setdefault(y, c)
    undo = normal_form_letters(n, (n - 1,) if negative else (-(n - 1),))
    out: list[DestabCandidate] = []
    seen = set()
    for y, c in pool.items():
        w = parabolic_letters(nf_multiply(y, undo), n - 1)
        if w is None:
            continue
        w_nf = normal_form_letters(n - 1, w)
        if w_nf in seen:
            continue
        seen.add(w_nf)
        w = _shortest(w, w_nf)
        move = DestabNeg(w) if negative else DestabPos(w)
        out.append(DestabCandidate(tuple(c), move, BraidWord(n - 1, w)))
    out.sort(key=lambda d: (len(d.result.letters), len(d.conjugator)))
    return out


def _shortest(letters: tuple[int, ...], nf: NormalForm) -> tuple[int, ...]:
    reduced = free_reduce_letters(letters)
    alt = nf.letters()
    return alt if len(alt) < len(reduced) else reduced
