"""Epimorphisms from F2 onto a finite group and the automorphism action.

An epimorphism is the ordered pair (pi(x), pi(y)) of element indices.
The special automorphism group acts on the right, pi -> pi o f, through
the eight acting generators u, u^-1, v, v^-1, ax, ax^-1, ay, ay^-1 in
that fixed order; orbits are enumerated breadth-first, which makes
orbit order, Schreier trees and stabilizer generators reproducible.

Stabilizer generators come from Schreier's lemma: for every non-tree
edge, (word to the point) * (generator) * (word to the image)^-1 fixes
the seed.  Trivial and duplicate generators are removed by comparing
cached images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .autf2 import AX, AY, U, V, FreeAutomorphism
from .groups import CapExceeded, GroupTable
from .words import cancel

# Acting generators, fixed once: the orbit code, the Schreier trees and
# every reported stabilizer depend on this order.
ACTING_LETTERS: tuple[int, ...] = (U, -U, V, -V, AX, -AX, AY, -AY)
ACTING_GENERATORS: tuple[FreeAutomorphism, ...] = tuple(
    FreeAutomorphism((code,)) for code in ACTING_LETTERS
)
INNER_LETTERS: tuple[int, ...] = (AX, -AX, AY, -AY)


class NotSurjective(ValueError):
    """The chosen pair of elements does not generate the group."""


@dataclass(frozen=True)
class Epimorphism:
    """A surjection F2 -> G recorded as the images of x and y."""

    group: GroupTable
    gx: int
    gy: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.gx, self.gy)

    def describe(self) -> str:
        if self.group.labels:
            return f"x -> {self.group.labels[self.gx]}, y -> {self.group.labels[self.gy]}"
        return f"x -> {self.gx}, y -> {self.gy}"


def make_epi(group: GroupTable, gx: int, gy: int) -> Epimorphism:
    """Build an epimorphism, rejecting non-generating pairs."""
    if not (0 <= gx < group.order and 0 <= gy < group.order):
        raise ValueError("element index out of range")
    if len(group.closure((gx, gy))) != group.order:
        raise NotSurjective(f"elements {gx}, {gy} do not generate the group")
    return Epimorphism(group, gx, gy)


def evaluate_word(group: GroupTable, letters: Sequence[int], gx: int, gy: int) -> int:
    """Evaluate a word in F2 (signed letter codes) under x -> gx, y -> gy."""
    images = {1: gx, -1: group.inv[gx], 2: gy, -2: group.inv[gy]}
    val = 0
    for c in letters:
        val = group.mul[val][images[c]]
    return val


def act(f: FreeAutomorphism, e: Epimorphism) -> Epimorphism:
    """Right action: the epimorphism pi o f, i.e. (pi(f(x)), pi(f(y))).

    Satisfies act(f * g, e) == act(g, act(f, e)) for the composition
    convention of FreeAutomorphism.
    """
    g = e.group
    return Epimorphism(
        g,
        evaluate_word(g, f.image_x.letters, e.gx, e.gy),
        evaluate_word(g, f.image_y.letters, e.gx, e.gy),
    )


def act_letters(e: Epimorphism, letters: Sequence[int]) -> Epimorphism:
    """Act by a word in the basic generators, one letter at a time.

    Equivalent to act(FreeAutomorphism(letters), e) but never builds
    the free-group images, so it stays cheap for long words.
    """
    moves = _pair_moves(e.group)
    a, b = e.gx, e.gy
    for code in letters:
        a, b = moves[code](a, b)
    return Epimorphism(e.group, a, b)


def _pair_moves(g: GroupTable) -> dict[int, Callable[[int, int], tuple[int, int]]]:
    """The action of each basic generator on a pair (pi(x), pi(y)),
    written out directly from the generator images."""
    mul, inv = g.mul, g.inv
    return {
        U: lambda a, b: (mul[a][b], b),                    # x -> xy
        -U: lambda a, b: (mul[a][inv[b]], b),              # x -> xy^-1
        V: lambda a, b: (a, mul[a][b]),                    # y -> xy
        -V: lambda a, b: (a, mul[inv[a]][b]),              # y -> x^-1 y
        AX: lambda a, b: (a, mul[mul[a][b]][inv[a]]),      # y -> xyx^-1
        -AX: lambda a, b: (a, mul[mul[inv[a]][b]][a]),     # y -> x^-1 y x
        AY: lambda a, b: (mul[mul[b][a]][inv[b]], b),      # x -> yxy^-1
        -AY: lambda a, b: (mul[mul[inv[b]][a]][b], b),     # x -> y^-1 x y
    }


def _orbit_pairs(
    seed: Epimorphism, letters: Sequence[int] = ACTING_LETTERS
) -> tuple[list[tuple[int, int]], list[tuple[int, int]], list[tuple[int, int, int]]]:
    """Breadth-first orbit of the seed pair.

    Returns (orbit, tree, extra_edges): tree[i] is (parent, generator
    position) with (-1, -1) at the root; extra_edges are the non-tree
    edges (point, generator position, image point) in discovery order.
    """
    g = seed.group
    moves = [_pair_moves(g)[c] for c in letters]
    start = seed.pair
    orbit = [start]
    index = {start: 0}
    tree: list[tuple[int, int]] = [(-1, -1)]
    extra: list[tuple[int, int, int]] = []
    head = 0
    while head < len(orbit):
        a, b = orbit[head]
        for k, move in enumerate(moves):
            pt = move(a, b)
            found = index.get(pt)
            if found is None:
                index[pt] = len(orbit)
                orbit.append(pt)
                tree.append((head, k))
            else:
                extra.append((head, k, found))
        head += 1
    return orbit, tree, extra


@dataclass
class OrbitResult:
    """Orbit of an epimorphism with its Schreier tree and stabilizer
    generators; the orbit length is the subgroup index."""

    seed: Epimorphism
    orbit: list[tuple[int, int]]
    tree: list[tuple[int, int]]
    stabilizer_gens: list[FreeAutomorphism]

    @property
    def length(self) -> int:
        return len(self.orbit)

    def tree_word(self, i: int, letters: Sequence[int] = ACTING_LETTERS) -> tuple[int, ...]:
        """The generator word carrying the seed to orbit point i."""
        out: list[int] = []
        while i != 0:
            parent, k = self.tree[i]
            out.append(letters[k])
            i = parent
        out.reverse()
        return tuple(out)


def orbit_stabilizer(seed: Epimorphism, letters: Sequence[int] = ACTING_LETTERS) -> OrbitResult:
    """Enumerate the orbit of the seed and a Schreier generating set of
    its stabilizer."""
    orbit, tree, extra = _orbit_pairs(seed, letters)

    # Tree words, built once per orbit point by extending the parent's.
    words: list[tuple[int, ...]] = [()] * len(orbit)
    for i in range(1, len(orbit)):
        parent, k = tree[i]
        words[i] = words[parent] + (letters[k],)

    seen_words: set[tuple[int, ...]] = set()
    seen_images: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    gens: list[FreeAutomorphism] = []
    for point, k, image in extra:
        schreier = cancel(
            words[point] + (letters[k],) + tuple(-c for c in reversed(words[image]))
        )
        if not schreier or schreier in seen_words:
            continue
        seen_words.add(schreier)
        f = FreeAutomorphism(schreier)
        key = (f.image_x.letters, f.image_y.letters)
        if f.is_identity or key in seen_images:
            continue
        seen_images.add(key)
        gens.append(f)
    return OrbitResult(seed, orbit, tree, gens)


def orbit_length(seed: Epimorphism, letters: Sequence[int] = ACTING_LETTERS) -> int:
    return len(_orbit_pairs(seed, letters)[0])


def inner_index(e: Epimorphism) -> int:
    """Index of the stabilizer inside the inner automorphisms: the orbit
    length under conjugations only, which equals [G : Z(G)]."""
    return orbit_length(e, INNER_LETTERS)


def same_kernel(e1: Epimorphism, e2: Epimorphism) -> bool:
    """Do two epimorphisms onto the same group have equal kernels?

    Equivalent to asking whether gx1 -> gx2, gy1 -> gy2 extends to an
    automorphism of G.  The partial map is closed under multiplication
    along generator edges; any conflict kills it, and the surviving
    total map is accepted iff it is a bijection.  Checking every edge
    (a, a*gen) makes the homomorphism property hold for all products.
    """
    g = e1.group
    if e2.group is not g and e2.group.mul != g.mul:
        raise ValueError("epimorphisms live on different groups")
    n = g.order
    fmap = [-1] * n
    fmap[0] = 0
    queue = [0]
    head = 0
    gen_pairs = ((e1.gx, e2.gx), (e1.gy, e2.gy))
    while head < len(queue):
        a = queue[head]
        head += 1
        fa = fmap[a]
        for s, t in gen_pairs:
            b = g.mul[a][s]
            fb = g.mul[fa][t]
            if fmap[b] == -1:
                fmap[b] = fb
                queue.append(b)
            elif fmap[b] != fb:
                return False
    return len(set(fmap)) == n


def abelianized_epi(e: Epimorphism):
    """The induced epimorphism onto G/G' (with the projection kept on
    the side for tests)."""
    from .groups import derived_subgroup, quotient

    q, proj = quotient(e.group, derived_subgroup(e.group))
    return make_epi(q, proj[e.gx], proj[e.gy])


@dataclass(frozen=True)
class CensusRow:
    """One orbit of the action on epimorphisms."""

    orbit_length: int
    kernel_classes: int
    stabilizer_index: int
    representative: tuple[int, int]


@dataclass(frozen=True)
class CensusReport:
    rows: tuple[CensusRow, ...]
    epimorphism_count: int
    kernel_count: int
    kernel_orbit_count: int

    @property
    def transitive_on_kernels(self) -> bool:
        return self.kernel_orbit_count == 1


def kernel_orbit_census(g: GroupTable, cap: int = 4_000_000) -> CensusReport:
    """Partition all epimorphisms F2 -> G into orbits and count how the
    kernels fall into place.

    Kernel classes are tracked globally (two epimorphisms share a class
    iff same_kernel holds); orbits sharing a kernel class are merged to
    count orbits of the action on the set of kernels.
    """
    n = g.order
    if n * n > cap:
        raise CapExceeded(f"{n * n} candidate pairs exceed cap {cap}")

    surjective = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if len(g.closure((a, b))) == n
    ]
    seen: set[tuple[int, int]] = set()
    class_reps: list[Epimorphism] = []  # global kernel-class representatives
    rows: list[CensusRow] = []
    orbit_classes: list[set[int]] = []
    for pair in surjective:
        if pair in seen:
            continue
        seed = Epimorphism(g, *pair)
        orbit, _, _ = _orbit_pairs(seed)
        seen.update(orbit)
        classes_here: set[int] = set()
        for a, b in orbit:
            e = Epimorphism(g, a, b)
            for ci in classes_here:
                if same_kernel(class_reps[ci], e):
                    break
            else:
                for ci, rep in enumerate(class_reps):
                    if same_kernel(rep, e):
                        classes_here.add(ci)
                        break
                else:
                    class_reps.append(e)
                    classes_here.add(len(class_reps) - 1)
        rows.append(CensusRow(len(orbit), len(classes_here), len(orbit), pair))
        orbit_classes.append(classes_here)

    # Orbits of the kernel action: merge epimorphism orbits that share a
    # kernel class.
    parent = list(range(len(rows)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, classes in enumerate(orbit_classes):
        for ci in classes:
            if ci in owner:
                parent[find(i)] = find(owner[ci])
            else:
                owner[ci] = i
    kernel_orbits = len({find(i) for i in range(len(rows))})
    return CensusReport(tuple(rows), len(surjective), len(class_reps), kernel_orbits)
