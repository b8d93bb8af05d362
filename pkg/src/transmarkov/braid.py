"""
Braid words and the combinatorics of their closures.

A braid word in B_n is stored as a strand count plus a tuple of signed
generator indices: ``g > 0`` is sigma_g and ``g < 0`` is sigma_|g|^-1,
generators indexed from 1 to n - 1.  Positions and strands are 0-based
internally; everything user-facing (generators, permutations, cycles) is
1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"letter {g} is not a generator of B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return f"B{self.strands}[{' '.join(map(str, self.letters))}]"

    def is_positive(self) -> bool:
        return all(g > 0 for g in self.letters)


@dataclass(frozen=True)
class ClosurePermutation:
    perm: tuple[int, ...]               # perm[i - 1] = end position of the strand starting at i
    cycles: tuple[tuple[int, ...], ...]

    @property
    def components(self) -> int:
        return len(self.cycles)


def word(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise ValueError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def invert(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-g for g in reversed(b.letters)))


def invert_letters(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(letters))


def free_reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for g in letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def free_reduce(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, free_reduce_letters(b.letters))


def degree(b: BraidWord) -> int:
    """Exponent sum of the word (the algebraic degree)."""
    return sum(1 if g > 0 else -1 for g in b.letters)


def _strand_paths(b: BraidWord) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Track strands through the word.

    Returns the final position of every strand and, for each letter, the
    pair of strands (by starting position) it crosses together with its sign.
    """
    at = list(range(b.strands))  # at[pos] = strand currently at pos
    crossings = []
    for g in b.letters:
        i = abs(g)
        s1, s2 = at[i - 1], at[i]
        crossings.append((s1, s2, 1 if g > 0 else -1))
        at[i - 1], at[i] = s2, s1
    end = [0] * b.strands
    for pos, s in enumerate(at):
        end[s] = pos
    return end, crossings


def closure_permutation(b: BraidWord) -> ClosurePermutation:
    end, _ = _strand_paths(b)
    seen = [False] * b.strands
    cycles = []
    for start in range(b.strands):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = end[j]
        cycles.append(tuple(cyc))
    return ClosurePermutation(tuple(e + 1 for e in end), tuple(cycles))


def components(b: BraidWord) -> int:
    return closure_permutation(b).components


def component_of_strand(b: BraidWord) -> list[int]:
    """Component index of every strand, components ordered by smallest strand."""
    comp = [0] * b.strands
    for k, cyc in enumerate(closure_permutation(b).cycles):
        for s in cyc:
            comp[s - 1] = k
    return comp


def self_linking(b: BraidWord) -> int:
    """Self-linking number (transversal tb) of the closure: deg(b) - n."""
    return degree(b) - b.strands


def linking_matrix(b: BraidWord) -> list[list[int]]:
    comp = component_of_strand(b)
    m = max(comp) + 1
    twice = [[0] * m for _ in range(m)]
    _, crossings = _strand_paths(b)
    for s1, s2, sign in crossings:
        c1, c2 = comp[s1], comp[s2]
        if c1 != c2:
            twice[c1][c2] += sign
            twice[c2][c1] += sign
    for row in twice:
        for v in row:
            # a closed braid crosses any two components an even number of times
            assert v % 2 == 0
    return [[v // 2 for v in row] for row in twice]


def restrict_to_component(b: BraidWord, k: int) -> BraidWord:
    """Sub-braid formed by the strands of closure component ``k``."""
    comp = component_of_strand(b)
    at = list(range(b.strands))
    letters = []
    for g in b.letters:
        i = abs(g)
        s1, s2 = at[i - 1], at[i]
        if comp[s1] == k and comp[s2] == k:
            rank = sum(1 for pos in range(i - 1) if comp[at[pos]] == k)
            letters.append(rank + 1 if g > 0 else -(rank + 1))
        at[i - 1], at[i] = s2, s1
    return BraidWord(comp.count(k), tuple(letters))


def component_tb_decomposition(b: BraidWord) -> list[int]:
    m = max(component_of_strand(b)) + 1
    return [self_linking(restrict_to_component(b, k)) for k in range(m)]


def bennequin_surface_euler(b: BraidWord) -> int:
    """Euler characteristic of the Bennequin surface: n disks joined by one band per letter."""
    return b.strands - len(b.letters)


def juxtapose(b1: BraidWord, b2: BraidWord) -> BraidWord:
    """Block-diagonal sum: b2 placed to the right of b1 with generators shifted."""
    shift = b1.strands
    letters = b1.letters + tuple(g + shift if g > 0 else g - shift for g in b2.letters)
    return BraidWord(b1.strands + b2.strands, letters)


def half_twist(n: int) -> BraidWord:
    """Positive half twist (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1}...sigma_1)."""
    if n < 1:
        raise ValueError("half twist needs n >= 1")
    letters = [g for k in range(1, n) for g in range(k, 0, -1)]
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# text format
#
#   n=<int>
#   <space separated signed integers, possibly empty>
#
# '#' starts a comment.


def format_braid(b: BraidWord) -> str:
    return f"n={b.strands}\n{' '.join(map(str, b.letters))}\n"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_letters(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"malformed braid letters: {text!r}") from None


def parse_strands(text: str) -> int:
    text = text.strip()
    if not text.startswith("n="):
        raise ValueError(f"expected 'n=<int>', got {text!r}")
    try:
        return int(text[2:])
    except ValueError:
        raise ValueError(f"malformed strand count: {text!r}") from None


def parse_braid(text: str) -> BraidWord:
    lines = [_strip_comment(line) for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("empty braid file")
    if len(lines) > 2:
        raise ValueError("braid file has more than two content lines")
    n = parse_strands(lines[0])
    letters = parse_letters(lines[1]) if len(lines) == 2 else ()
    return BraidWord(n, letters)


def parse_inline(spec: str) -> BraidWord:
    """Parse the one-line form ``n=<int>:<letters>`` used on the command line."""
    head, _, tail = spec.partition(":")
    return BraidWord(parse_strands(head), parse_letters(tail.replace(",", " ")))
