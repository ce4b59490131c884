"""Pinnacle sets, their admissible orderings, and witness permutations.

A *pinnacle* of a permutation ``w`` (one-line notation over ``1..n``) is a
value ``w[i]`` with ``w[i-1] < w[i] > w[i+1]``; a *vale* is a value at a
valley.  Reading the pinnacles left to right gives both the pinnacle set and
its ordering.

For a set ``S`` and ``x`` in ``S`` the *slack* is::

    k_x = #{non-pinnacles <= x} - #{pinnacles <= x} - 1 = x - 2 * rank(x) - 1

``S`` is admissible iff every slack is non-negative, and an ordering of an
admissible ``S`` is admissible iff each down-set ``{y in S : y <= x}`` is
interrupted at most ``k_x`` times in it.

Sets and orderings print as ``"3,5,8,9,13,14"``; permutations print as
``"9 10 3 6 1 4 2 11 5 8 7"``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "PinnacleError",
    "InadmissibleSetError",
    "InadmissibleOrderingError",
    "PinnacleSet",
    "PinnacleOrdering",
    "Permutation",
    "SlackEntry",
    "SlackProfile",
    "InterruptionRecord",
    "InterruptionReport",
    "pinnacles_of",
    "vales_of",
    "k_profile",
    "is_admissible_set",
    "is_admissible_set_recursive",
    "interruption_count",
    "interruption_report",
    "is_admissible_ordering",
    "reduced_check_elements",
    "is_admissible_ordering_reduced",
    "construct_witness",
    "enumerate_admissible_orderings",
    "count_admissible_orderings",
    "is_maximally_admissible",
]

MAX_ELEMENT = 2**31 - 1


class PinnacleError(ValueError):
    """Base class for malformed input and domain errors."""


class InadmissibleSetError(PinnacleError):
    """An operation that needs an admissible pinnacle set got one that is not."""

    def __init__(self, pset: "PinnacleSet"):
        self.pset = pset
        bad = [e.x for e in k_profile(pset) if e.slack < 0]
        super().__init__(
            f"{{{pset}}} is not an admissible pinnacle set "
            f"(negative slack at {', '.join(map(str, bad))})"
        )


class InadmissibleOrderingError(PinnacleError):
    """Raised when a witness is requested for an ordering that has none."""

    def __init__(self, report: "InterruptionReport"):
        self.report = report
        bad = ", ".join(
            f"x={r.x} ({r.actual} > {r.allowed})" for r in report.violations
        )
        super().__init__(f"ordering ({report.ordering}) is not admissible: {bad}")


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(int(token))
        except ValueError:
            raise PinnacleError(f"not an integer: {token!r}") from None
    return tuple(out)


@dataclass(frozen=True, order=True)
class PinnacleSet:
    """A finite set of positive integers kept as a strictly increasing tuple.

    Admissibility is *not* enforced here; see :func:`is_admissible_set`.
    """

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elements = tuple(int(v) for v in self.elements)
        object.__setattr__(self, "elements", elements)
        for v in elements:
            if not 1 <= v <= MAX_ELEMENT:
                raise PinnacleError(f"element out of range: {v}")
        for a, b in zip(elements, elements[1:]):
            if a >= b:
                raise PinnacleError(
                    f"elements must be strictly increasing: {a} then {b}"
                )

    @classmethod
    def of(cls, values: Iterable[int]) -> "PinnacleSet":
        """Build from any iterable of distinct positive integers (any order)."""
        values = [int(v) for v in values]
        if len(set(values)) != len(values):
            raise PinnacleError(f"duplicate elements in {values}")
        return cls(tuple(sorted(values)))

    @classmethod
    def parse(cls, text: str) -> "PinnacleSet":
        return cls(_parse_ints(text))

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def max(self) -> int:
        if not self.elements:
            raise PinnacleError("the empty set has no maximum")
        return self.elements[-1]

    def rank(self, x: int) -> int:
        """1-based position of ``x`` in the sorted elements."""
        i = bisect.bisect_left(self.elements, x)
        if i == len(self.elements) or self.elements[i] != x:
            raise PinnacleError(f"{x} is not in {{{self}}}")
        return i + 1

    def down_set(self, x: int) -> "PinnacleSet":
        """Elements ``<= x``."""
        return PinnacleSet(self.elements[: bisect.bisect_right(self.elements, x)])

    def non_pinnacles(self) -> tuple[int, ...]:
        """``1..max`` minus the set (empty for the empty set)."""
        if not self.elements:
            return ()
        members = set(self.elements)
        return tuple(v for v in range(1, self.max + 1) if v not in members)

    def __contains__(self, x) -> bool:
        i = bisect.bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))


@dataclass(frozen=True, order=True)
class PinnacleOrdering:
    """An arrangement of all elements of a pinnacle set."""

    sequence: tuple[int, ...] = ()
    base: PinnacleSet = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        seq = tuple(int(v) for v in self.sequence)
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "base", PinnacleSet.of(seq))

    @classmethod
    def parse(cls, text: str) -> "PinnacleOrdering":
        return cls(_parse_ints(text))

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    def __str__(self) -> str:
        return ",".join(map(str, self.sequence))


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    word: tuple[int, ...] = ()

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PinnacleError(f"not a permutation of 1..{len(word)}: {word}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accepts ``"9 10 3 6"``; an all-single-digit word may be run together (``"4523176"``)."""
        text = text.strip()
        if not text:
            return cls(())
        if " " in text or "," in text:
            tokens = text.replace(",", " ").split()
        else:
            tokens = list(text)
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError:
            raise PinnacleError(f"cannot parse permutation {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


SetLike = Union[PinnacleSet, Iterable[int]]
OrderingLike = Union[PinnacleOrdering, Sequence[int]]


def _as_set(s: SetLike) -> PinnacleSet:
    if isinstance(s, PinnacleSet):
        return s
    if isinstance(s, str):
        return PinnacleSet.parse(s)
    return PinnacleSet.of(s)


def _as_ordering(a: OrderingLike) -> PinnacleOrdering:
    if isinstance(a, PinnacleOrdering):
        return a
    if isinstance(a, str):
        return PinnacleOrdering.parse(a)
    return PinnacleOrdering(tuple(a))


def _word(w) -> Sequence[int]:
    if isinstance(w, Permutation):
        return w.word
    if isinstance(w, str):
        return Permutation.parse(w).word
    return w


# ---------------------------------------------------------------------------
# statistics of a permutation


def pinnacles_of(w) -> tuple[int, ...]:
    """Pinnacle values of ``w`` in left-to-right order.

    >>> pinnacles_of("13287564")
    (3, 8, 6)
    """
    w = _word(w)
    return tuple(b for a, b, c in zip(w, w[1:], w[2:]) if a < b > c)


def vales_of(w) -> tuple[int, ...]:
    """Vale values of ``w`` (values at valleys) in left-to-right order."""
    w = _word(w)
    return tuple(b for a, b, c in zip(w, w[1:], w[2:]) if a > b < c)


# ---------------------------------------------------------------------------
# sets


@dataclass(frozen=True)
class SlackEntry:
    x: int
    rank: int
    small_pinnacles: int
    small_nonpinnacles: int
    slack: int


@dataclass(frozen=True)
class SlackProfile:
    pset: PinnacleSet
    entries: tuple[SlackEntry, ...]

    @property
    def slacks(self) -> tuple[int, ...]:
        return tuple(e.slack for e in self.entries)

    def __getitem__(self, x: int) -> SlackEntry:
        return self.entries[self.pset.rank(x) - 1]

    def __iter__(self) -> Iterator[SlackEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def k_profile(s: SetLike) -> SlackProfile:
    """Per-element slack of ``s``; works for inadmissible sets too (slack < 0)."""
    s = _as_set(s)
    entries = []
    for i, x in enumerate(s.elements, start=1):
        small = i
        non = x - small
        entries.append(SlackEntry(x, i, small, non, non - small - 1))
    return SlackProfile(s, tuple(entries))


def is_admissible_set(s: SetLike) -> bool:
    """True iff fewer than half of ``1..x`` are in ``s``, for every ``x`` in ``s``."""
    s = _as_set(s)
    return all(2 * i < x for i, x in enumerate(s.elements, start=1))


def is_admissible_set_recursive(s: SetLike) -> bool:
    """Drop-the-maximum characterisation: ``S`` is admissible iff ``S - {m}`` is and ``m > 2|S|``."""
    elements = _as_set(s).elements
    while elements:
        if not elements[-1] > 2 * len(elements):
            return False
        elements = elements[:-1]
    return True


def _require_admissible(s: PinnacleSet) -> None:
    if not is_admissible_set(s):
        raise InadmissibleSetError(s)


def is_maximally_admissible(s: SetLike) -> bool:
    """True iff every ordering of ``s`` is admissible.

    Only the interior ranks ``1 < i < p`` can restrict anything; each needs
    ``x_i >= min(p + i + 1, 3i)``.
    """
    s = _as_set(s)
    _require_admissible(s)
    p = len(s)
    return all(
        s.elements[i - 1] >= min(p + i + 1, 3 * i) for i in range(2, p)
    )


# ---------------------------------------------------------------------------
# orderings


def interruption_count(subset: SetLike, ordering: OrderingLike) -> int:
    """Number of times the elements of ``subset`` are interrupted in ``ordering``.

    That is, the number of maximal runs of ``subset`` elements, minus one.
    The empty subset counts as uninterrupted.
    """
    a = _as_ordering(ordering)
    t = set(_as_set(subset).elements)
    missing = t.difference(a.sequence)
    if missing:
        raise PinnacleError(
            f"{sorted(missing)} not in the ordered set {{{a.base}}}"
        )
    runs = 0
    inside = False
    for v in a.sequence:
        member = v in t
        if member and not inside:
            runs += 1
        inside = member
    return max(runs - 1, 0)


def _run_counts(a: PinnacleOrdering) -> list[int]:
    """For each rank r (0-based), the number of runs of the r+1 smallest elements."""
    base = a.base
    p = len(base)
    ranks = [base.rank(v) - 1 for v in a.sequence]
    runs = [0] * p
    prev = p
    for r in ranks:
        # the new element starts a run of S_{x_j} unless the previous one is also in it
        for j in range(r, min(prev, p)):
            runs[j] += 1
        prev = r
    return runs


@dataclass(frozen=True)
class InterruptionRecord:
    x: int
    allowed: int
    actual: int

    @property
    def violated(self) -> bool:
        return self.actual > self.allowed


@dataclass(frozen=True)
class InterruptionReport:
    ordering: PinnacleOrdering
    per_x: tuple[InterruptionRecord, ...]

    @property
    def admissible(self) -> bool:
        return not any(r.violated for r in self.per_x)

    @property
    def violations(self) -> tuple[InterruptionRecord, ...]:
        return tuple(r for r in self.per_x if r.violated)

    def __getitem__(self, x: int) -> InterruptionRecord:
        return self.per_x[self.ordering.base.rank(x) - 1]


def interruption_report(ordering: OrderingLike) -> InterruptionReport:
    a = _as_ordering(ordering)
    _require_admissible(a.base)
    runs = _run_counts(a)
    records = tuple(
        InterruptionRecord(e.x, e.slack, max(r - 1, 0))
        for e, r in zip(k_profile(a.base), runs)
    )
    return InterruptionReport(a, records)


def is_admissible_ordering(ordering: OrderingLike) -> bool:
    """True iff some permutation has exactly these pinnacles in this order."""
    return interruption_report(ordering).admissible


def reduced_check_elements(s: SetLike) -> tuple[int, ...]:
    """Elements ``x_i`` whose down-set still needs an interruption check.

    These are the interior ranks ``1 < i < p`` with ``x_i < min(p+i+1, 3i)``
    and ``x_{i-1} + 2 >= x_i <= x_{i+1} - 2``; every other bound is implied.
    """
    s = _as_set(s)
    xs = s.elements
    p = len(xs)
    out = []
    for i in range(2, p):
        x = xs[i - 1]
        if x < min(p + i + 1, 3 * i) and xs[i - 2] + 2 >= x <= xs[i] - 2:
            out.append(x)
    return tuple(out)


def is_admissible_ordering_reduced(ordering: OrderingLike) -> bool:
    """Same answer as :func:`is_admissible_ordering`, checking fewer down-sets."""
    a = _as_ordering(ordering)
    base = a.base
    _require_admissible(base)
    profile = k_profile(base)
    return all(
        interruption_count(base.down_set(x), a) <= profile[x].slack
        for x in reduced_check_elements(base)
    )


def construct_witness(ordering: OrderingLike) -> Permutation:
    """A permutation of ``1..max S`` whose pinnacles are exactly ``ordering``.

    Vale slots sit before, between and after the pinnacles.  Each slot is
    bounded by its smaller neighbouring pinnacle; slots are filled in order
    of increasing bound (ties left to right) with the smallest unused
    non-pinnacles.  Unused non-pinnacles form a decreasing prefix.

    Raises :class:`InadmissibleOrderingError` if no such permutation exists.
    """
    a = _as_ordering(ordering)
    report = interruption_report(a)
    if not report.admissible:
        raise InadmissibleOrderingError(report)
    seq = a.sequence
    if not seq:
        return Permutation(())

    p = len(seq)
    bounds = [seq[0]] + [min(seq[j - 1], seq[j]) for j in range(1, p)] + [seq[-1]]
    order = sorted(range(p + 1), key=lambda j: (bounds[j], j))
    pool = a.base.non_pinnacles()
    vales = [0] * (p + 1)
    for value, j in zip(pool, order):
        assert value < bounds[j], f"greedy fill failed at slot {j} for {a}"
        vales[j] = value

    word = list(reversed(pool[p + 1 :]))
    for j in range(p):
        word += [vales[j], seq[j]]
    word.append(vales[p])
    return Permutation(tuple(word))


def _enumerate(s: PinnacleSet) -> Iterator[tuple[int, ...]]:
    xs = s.elements
    p = len(xs)
    slack = k_profile(s).slacks
    runs = [0] * p
    used = [False] * p
    prefix: list[int] = []

    def extend(prev: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == p:
            yield tuple(xs[r] for r in prefix)
            return
        for r in range(p):
            if used[r]:
                continue
            hi = min(prev, p)
            # runs never merge later, so runs - 1 is a lower bound on interruptions
            ok = True
            for j in range(r, hi):
                runs[j] += 1
                if runs[j] - 1 > slack[j]:
                    ok = False
            if ok:
                used[r] = True
                prefix.append(r)
                yield from extend(r)
                prefix.pop()
                used[r] = False
            for j in range(r, hi):
                runs[j] -= 1

    yield from extend(p)


def enumerate_admissible_orderings(s: SetLike) -> Iterator[PinnacleOrdering]:
    """All admissible orderings of ``s`` in lexicographic order.

    Backtracks over prefixes, abandoning one as soon as some down-set has
    already been split into more runs than its slack allows.
    """
    s = _as_set(s)
    _require_admissible(s)
    for seq in _enumerate(s):
        yield PinnacleOrdering(seq)


def count_admissible_orderings(s: SetLike) -> int:
    s = _as_set(s)
    _require_admissible(s)
    return sum(1 for _ in _enumerate(s))
