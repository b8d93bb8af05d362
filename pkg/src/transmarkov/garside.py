"""
Garside machinery for B_n: left normal forms, equality, and conjugacy keys.

A simple (permutation) braid is a tuple ``p`` with ``p[j]`` the final
position of the strand starting at position ``j`` (0-based); two strands
``j < k`` cross exactly when ``p[j] > p[k]``.  Every braid is written
uniquely as ``Delta^inf * x_1 ... x_r`` with left-weighted simple factors,
none of them trivial or equal to Delta.

Conjugacy classes are canonicalised through the super summit set: reach it
by cycling and decycling, close it under conjugation by the minimal simple
elements, and take the least normal form.  Conjugators are tracked as
words throughout so that search can replay them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .braid import BraidWord, invert_letters

Perm = tuple[int, ...]


class ConjugacyBudgetExceeded(RuntimeError):
    """The super summit set grew past the configured node cap."""

    def __init__(self, cap: int, partial: "SummitSet"):
        super().__init__(f"super summit set exceeds {cap} elements")
        self.cap = cap
        self.partial = partial


# ---------------------------------------------------------------------------
# simple elements


@lru_cache(maxsize=None)
def identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def generator(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = i, i - 1
    return tuple(p)


def inverse_perm(p: Perm) -> Perm:
    q = [0] * len(p)
    for j, v in enumerate(p):
        q[v] = j
    return tuple(q)


def then(a: Perm, b: Perm) -> Perm:
    """Permutation of the product a*b (a on top)."""
    return tuple(b[v] for v in a)


@lru_cache(maxsize=None)
def tau(p: Perm) -> Perm:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


@lru_cache(maxsize=None)
def left_complement(p: Perm) -> Perm:
    """The simple element X with X * p = Delta."""
    n = len(p)
    q = inverse_perm(p)
    return tuple(q[n - 1 - j] for j in range(n))


@lru_cache(maxsize=None)
def right_complement(p: Perm) -> Perm:
    """The simple element X with p * X = Delta."""
    n = len(p)
    q = inverse_perm(p)
    return tuple(n - 1 - q[j] for j in range(n))


def starting_set(p: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def finishing_set(p: Perm) -> frozenset[int]:
    q = inverse_perm(p)
    return frozenset(i for i in range(1, len(p)) if q[i - 1] > q[i])


def length(p: Perm) -> int:
    n = len(p)
    return sum(1 for j in range(n) for k in range(j + 1, n) if p[j] > p[k])


@lru_cache(maxsize=None)
def simple_word(p: Perm) -> tuple[int, ...]:
    """A positive word for the simple element (each strand pair crosses at most once)."""
    p = list(p)
    out = []
    while True:
        for i in range(1, len(p)):
            if p[i - 1] > p[i]:
                out.append(i)
                p[i - 1], p[i] = p[i], p[i - 1]
                break
        else:
            return tuple(out)


@lru_cache(maxsize=None)
def support(p: Perm) -> frozenset[int]:
    """Generators occurring in any positive word for p."""
    out = set()
    hi = -1
    for i in range(1, len(p)):
        hi = max(hi, p[i - 1])
        if hi >= i:  # {0..i-1} not preserved
            out.add(i)
    return frozenset(out)


def _inversions(p: Perm) -> set[tuple[int, int]]:
    n = len(p)
    return {(j, k) for j in range(n) for k in range(j + 1, n) if p[j] > p[k]}


def _from_inversions(n: int, inv: set[tuple[int, int]]) -> Perm:
    p = []
    for j in range(n):
        left = sum(1 for i in range(j) if (i, j) in inv)
        right = sum(1 for k in range(j + 1, n) if (j, k) in inv)
        p.append(j - left + right)
    return tuple(p)


@lru_cache(maxsize=None)
def join(a: Perm, b: Perm) -> Perm:
    """Least common right multiple of two simple elements (prefix order)."""
    n = len(a)
    inv = _inversions(a) | _inversions(b)
    changed = True
    while changed:
        changed = False
        for (i, j) in list(inv):
            for k in range(j + 1, n):
                if (j, k) in inv and (i, k) not in inv:
                    inv.add((i, k))
                    changed = True
    return _from_inversions(n, inv)


def prefix_of(a: Perm, b: Perm) -> bool:
    return _inversions(a) <= _inversions(b)


@lru_cache(maxsize=None)
def remainder(a: Perm, b: Perm) -> Perm:
    """a^-1 (a v b): the least simple c with b a prefix of a*c."""
    j = join(a, b)
    qa = inverse_perm(a)
    return tuple(j[qa[m]] for m in range(len(a)))


@lru_cache(maxsize=None)
def left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Make the pair (a, b) left-weighted, preserving the product."""
    a, b = list(a), list(b)
    while True:
        qa = inverse_perm(tuple(a))
        for i in range(1, len(a)):
            # i starts b but does not finish a: slide sigma_i across
            if b[i - 1] > b[i] and qa[i - 1] < qa[i]:
                x, y = i - 1, i
                a = [y if v == x else x if v == y else v for v in a]
                b[i - 1], b[i] = b[i], b[i - 1]
                break
        else:
            return tuple(a), tuple(b)


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True, order=False)
class NormalForm:
    strands: int
    inf: int
    factors: tuple[Perm, ...] = ()

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def sort_key(self) -> tuple:
        return (self.strands, self.inf, len(self.factors), self.factors)

    def __lt__(self, other: "NormalForm") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        parts = [f"D^{self.inf}"]
        parts += ["[" + " ".join(str(v + 1) for v in f) + "]" for f in self.factors]
        return " | ".join(parts)

    def letters(self) -> tuple[int, ...]:
        """A word for the element: Delta power followed by the factors."""
        d = simple_word(delta(self.strands))
        if self.inf >= 0:
            out = list(d * self.inf)
        else:
            out = list(invert_letters(d) * (-self.inf))
        for f in self.factors:
            out.extend(simple_word(f))
        return tuple(out)

    def to_word(self) -> BraidWord:
        return BraidWord(self.strands, self.letters())

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors


def _normalize(n: int, inf: int, raw: Iterable[Perm]) -> NormalForm:
    """Left normal form of Delta^inf times an arbitrary product of simples."""
    e, d = identity(n), delta(n)
    out: list[Perm] = []
    for f in raw:
        if f == e:
            continue
        out.append(f)
        for j in range(len(out) - 2, -1, -1):
            a, b = left_weight(out[j], out[j + 1])
            if a == out[j]:
                break
            out[j], out[j + 1] = a, b
        while out and out[-1] == e:
            out.pop()
    lead = 0
    while lead < len(out) and out[lead] == d:
        lead += 1
    return NormalForm(n, inf + lead, tuple(out[lead:]))


def _collect(n: int, items: Sequence[int | Perm]) -> NormalForm:
    """Normal form of a product of simples and Delta powers (ints)."""
    total = 0
    parity = 0
    raw: list[Perm] = []
    for item in reversed(items):
        if isinstance(item, int):
            total += item
            parity ^= item & 1
        else:
            raw.append(tau(item) if parity else item)
    raw.reverse()
    return _normalize(n, total, raw)


def _letter_items(n: int, letters: Iterable[int]) -> list[int | Perm]:
    items: list[int | Perm] = []
    for g in letters:
        if g > 0:
            items.append(generator(n, g))
        else:
            # sigma^-1 = Delta^-1 (Delta sigma^-1)
            items.append(-1)
            items.append(left_complement(generator(n, -g)))
    return items


def normal_form_letters(n: int, letters: Iterable[int]) -> NormalForm:
    return _collect(n, _letter_items(n, letters))


def normal_form(b: BraidWord) -> NormalForm:
    return normal_form_letters(b.strands, b.letters)


def equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise ValueError(f"cannot compare braids on {a.strands} and {b.strands} strands")
    return normal_form(a) == normal_form(b)


def _nf_items(x: NormalForm) -> list[int | Perm]:
    return [x.inf, *x.factors]


def nf_multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    return _collect(x.strands, _nf_items(x) + _nf_items(y))


def nf_inverse(x: NormalForm) -> NormalForm:
    items: list[int | Perm] = []
    for f in reversed(x.factors):
        items += [right_complement(f), -1]
    items.append(-x.inf)
    return _collect(x.strands, items)


def conjugate_by_simple(x: NormalForm, s: Perm) -> NormalForm:
    """s^-1 x s."""
    return _collect(x.strands, [right_complement(s), -1, *_nf_items(x), s])


def positive_decomposition(b: BraidWord) -> tuple[int, BraidWord]:
    """Return (k, b_plus) with b = Delta^-k b_plus, b_plus positive, k minimal."""
    x = normal_form(b)
    k = max(0, -x.inf)
    shifted = NormalForm(x.strands, x.inf + k, x.factors)
    return k, shifted.to_word()


def half_twist_nf(n: int) -> NormalForm:
    return NormalForm(n, 1, ()) if n > 1 else NormalForm(n, 0, ())


def parabolic_letters(x: NormalForm, m: int) -> tuple[int, ...] | None:
    """A word in sigma_1..sigma_{m-1} for x, or None when x is not in that subgroup.

    Uses the orthogonal form x = a^-1 b with gcd(a, b) = 1; x is in the
    standard parabolic subgroup exactly when both a and b are.
    """
    allowed = set(range(1, m))
    n = x.strands
    if x.inf > 0:
        return x.letters() if n <= m else None
    if x.inf == 0:
        if all(support(f) <= allowed for f in x.factors):
            return x.letters()
        return None
    # the first min(k, r) factors form gcd(Delta^k, x_1..x_r)
    k = -x.inf
    j = min(k, len(x.factors))
    b = x.factors[j:]
    if any(not support(f) <= allowed for f in b):
        return None
    items: list[int | Perm] = []
    for f in reversed(x.factors[:j]):
        items += [right_complement(f), -1]
    items.append(k)
    a = _collect(n, items)
    if a.inf > 0:
        return None if n > m else x.letters()
    if any(not support(f) <= allowed for f in a.factors):
        return None
    out: list[int] = []
    for f in reversed(a.factors):
        out.extend(invert_letters(simple_word(f)))
    for f in b:
        out.extend(simple_word(f))
    return tuple(out)


def in_parabolic(x: NormalForm, m: int) -> bool:
    """Whether x lies in the subgroup generated by sigma_1..sigma_{m-1}."""
    return parabolic_letters(x, m) is not None


def conjugate_by_letter(x: NormalForm, g: int) -> NormalForm:
    """s^-1 x s for the single letter s = sigma_g^(+-1)."""
    n = x.strands
    return _collect(n, _letter_items(n, [-g]) + _nf_items(x) + _letter_items(n, [g]))


# ---------------------------------------------------------------------------
# cycling, decycling, super summit sets
#
# A conjugator c carries x to c^-1 x c; conjugators are kept as letter tuples.


def cycle(x: NormalForm) -> tuple[NormalForm, Perm]:
    if not x.factors:
        return x, identity(x.strands)
    c = tau(x.factors[0]) if x.inf % 2 else x.factors[0]
    return conjugate_by_simple(x, c), c


def decycle(x: NormalForm) -> tuple[NormalForm, tuple[int, ...]]:
    if not x.factors:
        return x, ()
    last = x.factors[-1]
    y = _collect(x.strands, [x.inf, tau(last) if x.inf % 2 else last, *x.factors[:-1]])
    return y, invert_letters(simple_word(last))


def to_super_summit(x: NormalForm) -> tuple[NormalForm, tuple[int, ...]]:
    """Conjugate x into its super summit set by iterated cycling and decycling."""
    n = x.strands
    bound = max(1, n * (n - 1) // 2)
    conj: list[int] = []
    improved = True
    while improved and x.factors:
        improved = False
        y, trail = x, []
        for _ in range(bound):
            y, c = cycle(y)
            trail += simple_word(c)
            if y.inf > x.inf:
                x = y
                conj += trail
                improved = True
                break
    improved = True
    while improved and x.factors:
        improved = False
        y, trail = x, []
        for _ in range(bound):
            y, c = decycle(y)
            trail += c
            if y.sup < x.sup:
                x = y
                conj += trail
                improved = True
                break
    return x, tuple(conj)


def _inf_closure(inf: int, factors: Sequence[Perm], u: Perm) -> Perm:
    """Least simple extension step for the condition tau^inf(u) <= factors * u."""
    t = tau(u) if inf % 2 else u
    for f in factors:
        t = remainder(f, t)
    return t


def minimal_simple(x: NormalForm, x_inv: NormalForm, u: Perm) -> Perm:
    """Least simple s >= u with s^-1 x s in the super summit set of x."""
    s = u
    while True:
        nxt = join(s, _inf_closure(x.inf, x.factors, s))
        nxt = join(nxt, _inf_closure(x_inv.inf, x_inv.factors, nxt))
        if nxt == s:
            return s
        s = nxt


@dataclass
class SummitSet:
    """Explored part of a super summit set.

    ``members`` maps each element to a conjugator (letters) carrying
    ``base`` to it.
    """

    base: NormalForm
    members: dict[NormalForm, tuple[int, ...]]
    complete: bool

    def least(self) -> NormalForm:
        return min(self.members, key=NormalForm.sort_key)


def super_summit_set(x: NormalForm, cap: int = 5000) -> SummitSet:
    """Close x (assumed in its super summit set) under minimal simple conjugations."""
    n = x.strands
    members = {x: ()}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        if not y.factors:
            continue
        y_inv = nf_inverse(y)
        seen_here = set()
        for i in range(1, n):
            s = minimal_simple(y, y_inv, generator(n, i))
            if s in seen_here:
                continue
            seen_here.add(s)
            z = conjugate_by_simple(y, s)
            if z not in members:
                members[z] = members[y] + simple_word(s)
                if len(members) > cap:
                    raise ConjugacyBudgetExceeded(cap, SummitSet(x, members, False))
                queue.append(z)
    return SummitSet(x, members, True)


@dataclass(frozen=True)
class ConjKey:
    """Canonical representative of a conjugacy class."""

    nf: NormalForm

    def __str__(self) -> str:
        return str(self.nf)


class ConjugacyEngine:
    """Caches super summit sets so repeated class lookups are cheap.

    Engine-local; not shared across threads.
    """

    def __init__(self, cap: int = 5000):
        self.cap = cap
        self._classes: dict[NormalForm, SummitSet] = {}

    def summit(self, b: BraidWord | NormalForm,
               allow_partial: bool = False) -> tuple[SummitSet, tuple[int, ...]]:
        """Super summit set of the class of b plus a conjugator from b to its base.

        Raises ConjugacyBudgetExceeded when the set is larger than the cap,
        unless ``allow_partial`` is set: then the explored part is cached and
        returned with ``complete`` false.  Keys drawn from a partial set are
        still genuine conjugates of b, they just may fail to coincide for
        conjugate inputs.
        """
        x = b if isinstance(b, NormalForm) else normal_form(b)
        s0, c0 = to_super_summit(x)
        known = self._classes.get(s0)
        if known is not None and (known.complete or allow_partial):
            return known, c0 + invert_letters(known.members[s0])
        try:
            sss = super_summit_set(s0, self.cap)
        except ConjugacyBudgetExceeded as exc:
            if not allow_partial:
                raise
            sss = exc.partial
        for m in sss.members:
            self._classes[m] = sss
        return sss, c0

    def key_with_conjugator(self, b: BraidWord | NormalForm,
                            allow_partial: bool = False) -> tuple[ConjKey, tuple[int, ...]]:
        """Key and a conjugator c with c^-1 b c equal to the key element."""
        sss, c = self.summit(b, allow_partial)
        least = sss.least()
        return ConjKey(least), c + sss.members[least]

    def key(self, b: BraidWord | NormalForm) -> ConjKey:
        return self.key_with_conjugator(b)[0]

    def sweep(self, b: BraidWord | NormalForm, slack: int = 1, limit: int = 5000,
              allow_partial: bool = False) -> dict[NormalForm, tuple[int, ...]]:
        """Conjugates of b reachable from its summit set by single letters.

        Elements stay within ``slack`` of the summit infimum and supremum.
        Returns each element with a conjugator carrying b to it.  The summit
        set itself must fit the engine cap unless ``allow_partial`` is set.
        """
        x = b if isinstance(b, NormalForm) else normal_form(b)
        sss, c = self.summit(x, allow_partial)
        base_conj = {m: c + w for m, w in sss.members.items()}
        if not sss.base.factors:
            return base_conj
        lo, hi = sss.base.inf - slack, sss.base.sup + slack
        found = dict(base_conj)
        queue = deque(found)
        n = x.strands
        letters = [g for i in range(1, n) for g in (i, -i)]
        while queue and len(found) < limit:
            y = queue.popleft()
            for g in letters:
                z = conjugate_by_letter(y, g)
                if z.inf >= lo and z.sup <= hi and z not in found:
                    found[z] = found[y] + (g,)
                    queue.append(z)
                    if len(found) >= limit:
                        break
        return found


_default_engine = ConjugacyEngine()


def conj_key(b: BraidWord, cap: int | None = None) -> ConjKey:
    engine = _default_engine if cap is None else ConjugacyEngine(cap)
    return engine.key(b)
