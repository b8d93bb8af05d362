"""
Dehornoy handle reduction: a word-problem solver independent of normal forms.

A sigma_i-handle is a subword ``sigma_i^e w sigma_i^-e`` whose interior ``w``
contains no sigma_i^(+-1) and no sigma_{i-1}^(+-1).  Reducing it deletes the
two ends and replaces each sigma_{i+1}^d in ``w`` by
``sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e``.  A word with no handles is
empty or has its lowest generator occurring with one sign only, hence
represents the identity exactly when it is empty.
"""

from __future__ import annotations

from .braid import BraidWord


def _leftmost_handle(w: list[int]) -> tuple[int, int] | None:
    """Handle whose right end is leftmost; its interior holds no handle."""
    # last[i] = (position, sign) of latest sigma_i letter not yet blocked
    last: dict[int, int] = {}
    for pos, g in enumerate(w):
        i = abs(g)
        start = last.get(i)
        if start is not None and w[start] == -g:
            return start, pos
        last[i] = pos
        # a sigma_i letter blocks pending sigma_{i+1} handles
        last.pop(i + 1, None)
    return None


def _reduce_once(w: list[int], start: int, stop: int) -> list[int]:
    e = 1 if w[start] > 0 else -1
    i = abs(w[start])
    middle: list[int] = []
    for g in w[start + 1:stop]:
        if abs(g) == i + 1:
            d = 1 if g > 0 else -1
            middle += [-e * (i + 1), d * i, e * (i + 1)]
        else:
            middle.append(g)
    return w[:start] + middle + w[stop + 1:]


def handle_reduce_letters(letters, max_steps: int = 1_000_000) -> tuple[int, ...]:
    w = list(letters)
    for _ in range(max_steps):
        h = _leftmost_handle(w)
        if h is None:
            return tuple(w)
        w = _reduce_once(w, *h)
    raise RuntimeError("handle reduction did not terminate within the step limit")


def handle_reduce(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, handle_reduce_letters(b.letters))


def is_trivial(b: BraidWord) -> bool:
    return not handle_reduce_letters(b.letters)
