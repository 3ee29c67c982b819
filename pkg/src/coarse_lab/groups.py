"""Finite quotient groups as word-metric spaces, filtrations, and box spaces.

Groups arrive as permutation images of abstract generators.  Normality and
nestedness of the corresponding kernels are *asserted by the caller* (they
are not checkable from the images); what the code verifies instead is the
observable consequence used downstream: injectivity radii that grow along
a filtration, and isometric lifting of small balls.

Parent-group convention: words live in the group freely generated by the
original letters, except that two distinct letters whose permutation images
are mutually inverse are treated as formal inverses of each other (so a
generator passed together with its inverse behaves like one letter of
infinite order, while an involutive image stays free unless its inverse
letter is literally present).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DepthCapReachedError,
    GroupSpecError,
    OrderExceededError,
)
from .metric import BlockSpace, FiniteMetricSpace, coarse_disjoint_union

Perm = tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    """(a * b)(x) = a(b(x))"""
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def _letter_name(orig: int, inverted: bool) -> str:
    base = chr(ord("a") + orig) if orig < 26 else f"x{orig}"
    return base.upper() if inverted else base


@dataclass(frozen=True)
class QuotientGroupSpec:
    """Permutation images of the generators of a finite quotient."""

    degree: int
    generators: tuple[Perm, ...]
    symmetric_closure: bool = True
    name: str = ""

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.degree < 1:
            raise GroupSpecError("degree must be at least 1")
        for g in gens:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise GroupSpecError(f"not a permutation of degree {self.degree}: {g}")
        if not gens:
            raise GroupSpecError("at least one generator required")

    def closed_letters(self) -> list[tuple[Perm, int, bool]]:
        """Deduplicated generator list as (perm, source index, inverted)."""
        letters: list[tuple[Perm, int, bool]] = []
        seen: set[Perm] = set()
        for i, g in enumerate(self.generators):
            if g not in seen:
                letters.append((g, i, False))
                seen.add(g)
        if self.symmetric_closure:
            for i, g in enumerate(self.generators):
                gi = inverse(g)
                if gi not in seen:
                    letters.append((gi, i, True))
                    seen.add(gi)
        return letters


class PermGroup:
    """BFS enumeration of the group generated by a QuotientGroupSpec.

    Elements are indexed in breadth-first order from the identity, so the
    stored word per element is its lexicographically-least shortest word
    over the closed letter list; labels are deterministic.
    """

    def __init__(self, spec: QuotientGroupSpec, max_elements: int = 4096):
        self.spec = spec
        letters = spec.closed_letters()
        self.letter_perms: list[Perm] = [l[0] for l in letters]
        self.letter_sources: list[tuple[int, bool]] = [(l[1], l[2]) for l in letters]
        self.letter_names: list[str] = [_letter_name(l[1], l[2]) for l in letters]
        # formal-inverse pairing: first *other* letter with the inverse image
        self.inv_letter: list[int | None] = []
        for i, p in enumerate(self.letter_perms):
            pi = inverse(p)
            match = None
            for j, q in enumerate(self.letter_perms):
                if j != i and q == pi:
                    match = j
                    break
            self.inv_letter.append(match)

        e = identity(spec.degree)
        self.elements: list[Perm] = [e]
        self.index: dict[Perm, int] = {e: 0}
        self.words: list[tuple[int, ...]] = [()]
        frontier = deque([0])
        while frontier:
            gidx = frontier.popleft()
            g = self.elements[gidx]
            for j, p in enumerate(self.letter_perms):
                h = compose(g, p)
                if h not in self.index:
                    if len(self.elements) >= max_elements:
                        raise OrderExceededError(max_elements)
                    self.index[h] = len(self.elements)
                    self.elements.append(h)
                    self.words.append(self.words[gidx] + (j,))
                    frontier.append(len(self.elements) - 1)

    @property
    def order(self) -> int:
        return len(self.elements)

    def label(self, i: int) -> str:
        w = self.words[i]
        return "e" if not w else "".join(self.letter_names[j] for j in w)

    def word_length(self, i: int) -> int:
        return len(self.words[i])

    def mult(self, i: int, j: int) -> int:
        return self.index[compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.index[inverse(self.elements[i])]

    def dist(self, i: int, j: int) -> int:
        """Left-invariant word distance."""
        return self.word_length(self.mult(self.inv(i), j))

    def distance_matrix(self) -> np.ndarray:
        n = self.order
        d = np.zeros((n, n))
        for i in range(n):
            gi = inverse(self.elements[i])
            for j in range(n):
                d[i, j] = self.word_length(self.index[compose(gi, self.elements[j])])
        return d

    def ball(self, center: int, radius: float) -> list[int]:
        return [j for j in range(self.order) if self.dist(center, j) <= radius]

    # -- parent (free-product) word arithmetic --------------------------

    def reduce_word(self, word: Sequence[int]) -> tuple[int, ...]:
        """Cancel adjacent formal-inverse letter pairs."""
        stack: list[int] = []
        for j in word:
            if stack and self.inv_letter[j] == stack[-1]:
                stack.pop()
            else:
                stack.append(j)
        return tuple(stack)

    def invert_word(self, word: Sequence[int]) -> tuple[int, ...]:
        out = []
        for j in reversed(word):
            k = self.inv_letter[j]
            if k is None:
                raise GroupSpecError(
                    f"letter {self.letter_names[j]} has no inverse letter; "
                    "parent word arithmetic unavailable"
                )
            out.append(k)
        return tuple(out)

    def parent_dist(self, word_a: Sequence[int], word_b: Sequence[int]) -> int:
        """Distance between two parent elements given as letter words."""
        return len(self.reduce_word(self.invert_word(word_a) + tuple(word_b)))


def word_metric_space(
    spec: QuotientGroupSpec, max_elements: int = 4096
) -> FiniteMetricSpace:
    """Enumerate the quotient and return it with its word metric.

    Labels are the canonical (lexicographically-least shortest) words.
    Raises OrderExceededError when enumeration passes `max_elements`.
    """
    group = PermGroup(spec, max_elements=max_elements)
    labels = tuple(group.label(i) for i in range(group.order))
    return FiniteMetricSpace(labels, group.distance_matrix())


@dataclass(frozen=True)
class Radius:
    """Injectivity radius result; `exact=False` means a verified lower bound."""

    value: float
    exact: bool = True


def injectivity_radius(
    spec: QuotientGroupSpec,
    parent_lengths: Callable[[tuple[int, ...]], float] | None = None,
    depth_cap: int = 96,
    state_budget: int = 2_000_000,
) -> Radius:
    """Shortest parent length of a nontrivial word mapping to the identity.

    Searches reduced words over the closed letter list in breadth-first
    order.  With the default length (word length), the first hit is
    minimal and the search stops there; a custom `parent_lengths` is
    applied to every kernel word found within the cap and may return 0 or
    None to mark words that are trivial in the parent.

    The quotient map is isometric on every set of diameter below half the
    returned value.  Raises DepthCapReachedError (carrying the proven
    lower bound) when the cap is hit first.
    """
    group_letters = spec.closed_letters()
    perms = [l[0] for l in group_letters]
    e = identity(spec.degree)
    inv_letter: list[int | None] = []
    for i, p in enumerate(perms):
        pi = inverse(p)
        inv_letter.append(
            next((j for j, q in enumerate(perms) if j != i and q == pi), None)
        )

    best: float | None = None
    frontier: list[tuple[tuple[int, ...], Perm]] = [((), e)]
    states = 0
    for depth in range(1, depth_cap + 1):
        nxt: list[tuple[tuple[int, ...], Perm]] = []
        for word, img in frontier:
            for j, p in enumerate(perms):
                if word and inv_letter[j] is not None and word[-1] == inv_letter[j]:
                    continue  # cancellation: not reduced
                w2 = word + (j,)
                img2 = compose(img, p)
                if img2 == e:
                    if parent_lengths is None:
                        return Radius(float(len(w2)), True)
                    plen = parent_lengths(w2)
                    if plen:
                        best = plen if best is None else min(best, plen)
                nxt.append((w2, img2))
                states += 1
        if states > state_budget:
            if best is not None:
                return Radius(float(best), True)
            raise DepthCapReachedError(depth + 1)
        frontier = nxt
    if best is not None:
        return Radius(float(best), True)
    raise DepthCapReachedError(depth_cap + 1)


@dataclass(frozen=True)
class FiltrationSpec:
    """Ordered quotient stages sharing a generator list."""

    stages: tuple[QuotientGroupSpec, ...]

    def __post_init__(self):
        if not self.stages:
            raise GroupSpecError("a filtration needs at least one stage")
        counts = {len(s.generators) for s in self.stages}
        if len(counts) != 1:
            raise GroupSpecError("stages must share the generator count")


def box_space_build(
    filtration: FiltrationSpec,
    max_elements: int = 4096,
    depth_cap: int = 96,
) -> BlockSpace:
    """Box space of a filtration: one word-metric block per stage.

    Injectivity radii are computed per stage, checked non-decreasing, and
    attached to the BlockSpace so scans can use the radius-based exclusion
    rule.
    """
    blocks = []
    radii = []
    for stage in filtration.stages:
        blocks.append(word_metric_space(stage, max_elements=max_elements))
        radii.append(injectivity_radius(stage, depth_cap=depth_cap).value)
    for a, b in zip(radii, radii[1:]):
        if b < a:
            raise GroupSpecError(
                f"injectivity radii must be non-decreasing along the filtration "
                f"(got {a} then {b})"
            )
    return coarse_disjoint_union(blocks, injectivity_radii=radii)


def lift_isometric(
    group: PermGroup, points: Sequence[int], tol: float = 0.0
) -> bool:
    """Check that a ball-sized subset lifts isometrically to the parent.

    The lift sends each element p to the parent element spelled by the
    canonical word of base^-1 * p (base = first point).  Returns True when
    all pairwise parent distances equal the quotient distances; valid
    reasoning requires diam(points) below half the injectivity radius.
    """
    pts = list(points)
    if not pts:
        return True
    base_inv = group.inv(pts[0])
    lifted_words = [group.words[group.mult(base_inv, p)] for p in pts]
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            dq = group.dist(pts[a], pts[b])
            dp = group.parent_dist(lifted_words[a], lifted_words[b])
            if abs(dp - dq) > tol:
                return False
    return True


def cyclic_group_spec(n: int) -> QuotientGroupSpec:
    """Z/n with generators +1 and -1 (the integers' standard images)."""
    fwd = tuple((i + 1) % n for i in range(n))
    return QuotientGroupSpec(n, (fwd,), symmetric_closure=True, name=f"Z/{n}")


def integer_filtration(moduli: Sequence[int]) -> FiltrationSpec:
    """Filtration of the integers by the subgroups m*Z for given moduli."""
    return FiltrationSpec(tuple(cyclic_group_spec(m) for m in moduli))
