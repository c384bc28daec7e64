"""Finite group backends, all normalized to an indexed multiplication table.

Constructors: direct products of two cyclic groups, dihedral groups,
permutation-generated groups, and finitely presented groups through a
Todd-Coxeter coset enumerator (HLT strategy, deterministic coset
numbering in discovery order, in-place coincidence handling).

Group elements are plain indices into the table; labels are attached
for presentation only and no algorithm ever inspects them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_MAX_COSETS = 65536
DEFAULT_ORDER_CAP = 16384


class EnumerationLimit(RuntimeError):
    """Coset enumeration did not close within the allowed number of
    cosets.  Says nothing about finiteness; raise the cap and retry."""


class CapExceeded(RuntimeError):
    """A closure or census grew past a configured size cap."""


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table over indices 0..N-1,
    with 0 the identity."""

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    id: int = 0

    def multiply(self, i: int, j: int) -> int:
        return self.mul[i][j]

    def inverse(self, i: int) -> int:
        return self.inv[i]

    def element_order(self, i: int) -> int:
        n, k = 1, i
        while k != 0:
            k = self.mul[k][i]
            n += 1
        return n

    def order_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(i) for i in range(self.order)))

    def closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        """The subgroup generated by `gens`, as a sorted index tuple."""
        gens = [g for g in gens]
        seen = {0}
        queue = [0]
        while queue:
            a = queue.pop()
            for g in gens:
                b = self.mul[a][g]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return tuple(sorted(seen))

    def label_index(self, label: str) -> int:
        if self.labels is None:
            raise ValueError("group has no element labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"no element labeled {label!r}") from None

    def validate(self, full_associativity_up_to: int = 256) -> None:
        """Check the table axioms; associativity is checked fully up to
        the given order and on a deterministic sample above it."""
        n = self.order
        ident = list(range(n))
        assert list(self.mul[0]) == ident, "row 0 is not the identity"
        assert [row[0] for row in self.mul] == ident, "column 0 is not the identity"
        for i in range(n):
            assert sorted(self.mul[i]) == ident, f"row {i} is not a permutation"
            assert sorted(row[i] for row in self.mul) == ident, f"column {i} is not a permutation"
            assert self.mul[i][self.inv[i]] == 0 and self.mul[self.inv[i]][i] == 0
        if n <= full_associativity_up_to:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            step = max(1, n // 16)
            sample = range(0, n, step)
            triples = ((a, b, c) for a in sample for b in sample for c in sample)
        for a, b, c in triples:
            assert self.mul[self.mul[a][b]][c] == self.mul[a][self.mul[b][c]]


def abelian(m: int, n: int) -> GroupTable:
    """The direct product Z/m x Z/n, elements labeled ``(i,j)``."""
    if m < 1 or n < 1:
        raise ValueError("moduli must be positive")
    order = m * n
    idx = lambda i, j: i * n + j
    mul = tuple(
        tuple(idx((i1 + i2) % m, (j1 + j2) % n) for i2 in range(m) for j2 in range(n))
        for i1 in range(m)
        for j1 in range(n)
    )
    inv = tuple(idx((-i) % m, (-j) % n) for i in range(m) for j in range(n))
    labels = tuple(f"({i},{j})" for i in range(m) for j in range(n))
    return GroupTable(order, mul, inv, labels)


def cyclic(m: int) -> GroupTable:
    return abelian(m, 1)


def dihedral(n: int) -> GroupTable:
    """The dihedral group of order 2n, n >= 3.

    Elements 0..n-1 are the rotations r^k, elements n..2n-1 are the
    reflections s r^k; the defining relations are r^n = s^2 = 1 and
    r s = s r^-1.
    """
    if n < 3:
        raise ValueError("dihedral groups require n >= 3")
    order = 2 * n

    def mult(i: int, j: int) -> int:
        flip_i, a = divmod(i, n)
        flip_j, b = divmod(j, n)
        if not flip_i and not flip_j:
            return (a + b) % n
        if not flip_i:
            return n + (b - a) % n  # r^a (s r^b) = s r^(b-a)
        if not flip_j:
            return n + (a + b) % n  # (s r^a) r^b = s r^(a+b)
        return (b - a) % n          # (s r^a)(s r^b) = r^(b-a)

    def rot_label(k: int) -> str:
        return "1" if k == 0 else "r" if k == 1 else f"r{k}"

    mul = tuple(tuple(mult(i, j) for j in range(order)) for i in range(order))
    inv = tuple(mul[i].index(0) for i in range(order))
    labels = tuple(rot_label(k) for k in range(n)) + tuple(
        "s" if k == 0 else "s" + rot_label(k) for k in range(n)
    )
    return GroupTable(order, mul, inv, labels)


def _cycle_string(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "()"


def from_permutations(generators: Sequence[Sequence[int]], cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Close a list of permutations (0-based image tuples, common degree)
    under composition and build the multiplication table.

    Composition convention: (p * q)(k) = q(p(k)), i.e. p acts first.
    """
    gens = [tuple(p) for p in generators]
    if not gens:
        raise ValueError("need at least one permutation")
    degree = len(gens[0])
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {p!r}")

    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[k]] for k in range(degree))
                if q not in index:
                    if len(elements) >= cap:
                        raise CapExceeded(f"permutation closure exceeded cap {cap}")
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        frontier = nxt

    order = len(elements)
    mul = tuple(
        tuple(index[tuple(q[p[k]] for k in range(degree))] for q in elements)
        for p in elements
    )
    inv = tuple(mul[i].index(0) for i in range(order))
    labels = tuple(_cycle_string(p) for p in elements)
    return GroupTable(order, mul, inv, labels)


# ---------------------------------------------------------------------------
# Finitely presented groups: Todd-Coxeter coset enumeration
# ---------------------------------------------------------------------------


def _parse_letter_word(generator_names: Sequence[str], text: str) -> tuple[int, ...]:
    """Parse a whitespace-separated word like ``g1 g2^-2`` into signed
    1-based generator letters."""
    out: list[int] = []
    for tok in text.split():
        name, caret, exp = tok.partition("^")
        try:
            g = list(generator_names).index(name) + 1
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None
        k = int(exp) if caret else 1
        out.extend([g if k > 0 else -g] * abs(k))
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators, relators as words of signed 1-based
    generator letters (+i for generator i-1, -i for its inverse)."""

    generator_names: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for rel in self.relators:
            if not rel:
                raise ValueError("empty relator")
            for letter in rel:
                if not 1 <= abs(letter) <= len(self.generator_names):
                    raise ValueError(f"relator letter {letter} out of range")

    def parse_word(self, text: str) -> tuple[int, ...]:
        return _parse_letter_word(self.generator_names, text)

    @classmethod
    def from_strings(cls, generator_names: Sequence[str], relator_strings: Sequence[str]) -> "Presentation":
        names = tuple(generator_names)
        return cls(names, tuple(_parse_letter_word(names, s) for s in relator_strings))

    @classmethod
    def parse_text(cls, text: str) -> "Presentation":
        """Parse the presentation file format: a ``gens:`` line followed
        by one ``rel:`` line per relator."""
        gens: list[str] | None = None
        rel_strings: list[str] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, rest = line.partition(":")
            if not sep:
                raise ValueError(f"line {lineno}: expected 'gens:' or 'rel:'")
            key = key.strip()
            if key == "gens":
                if gens is not None:
                    raise ValueError(f"line {lineno}: duplicate gens line")
                gens = rest.split()
            elif key == "rel":
                if gens is None:
                    raise ValueError(f"line {lineno}: rel before gens")
                rel_strings.append(rest)
            else:
                raise ValueError(f"line {lineno}: unknown key {key!r}")
        if gens is None:
            raise ValueError("missing gens line")
        return cls.from_strings(gens, rel_strings)

    @classmethod
    def load(cls, path) -> "Presentation":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse_text(fh.read())


@dataclass(frozen=True)
class SubgroupCosetTable:
    """Closed coset table: the permutation action of each generator on
    the cosets of a finitely generated subgroup, coset 0 the subgroup."""

    num_cosets: int
    action: tuple[tuple[int, ...], ...]          # one permutation per generator
    inverse_action: tuple[tuple[int, ...], ...]  # inverse permutations

    def trace(self, coset: int, letters: Iterable[int]) -> int:
        for l in letters:
            coset = self.action[l - 1][coset] if l > 0 else self.inverse_action[-l - 1][coset]
        return coset


def todd_coxeter(
    pres: Presentation,
    subgroup_gens: Sequence[tuple[int, ...]] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> SubgroupCosetTable:
    """HLT coset enumeration of the subgroup generated by `subgroup_gens`
    inside the presented group.

    Every relator is scanned at every live coset, filling undefined
    entries as needed; incorrectly closing scans trigger coincidence
    processing over a queue with a path-compressed union-find.  Raises
    EnumerationLimit when more than `max_cosets` cosets get defined.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    ngens = len(pres.generator_names)
    ncols = 2 * ngens

    def cols(word: tuple[int, ...]) -> tuple[int, ...]:
        # column 2g is the action of generator g, column 2g+1 its inverse
        return tuple(2 * (l - 1) if l > 0 else 2 * (-l - 1) + 1 for l in word)

    relators = [cols(w) for w in pres.relators]
    subgroups = [cols(w) for w in subgroup_gens]

    table: list[list[int | None]] = [[None] * ncols]
    p = [0]

    def rep(k: int) -> int:
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def define(alpha: int, c: int) -> None:
        if len(table) >= max_cosets:
            raise EnumerationLimit(
                f"enumeration defined {len(table)} cosets without closing; "
                f"raise max_cosets (currently {max_cosets})"
            )
        beta = len(table)
        table.append([None] * ncols)
        p.append(beta)
        table[alpha][c] = beta
        table[beta][c ^ 1] = alpha

    def merge(k: int, l: int, queue: list[int]) -> None:
        k, l = rep(k), rep(l)
        if k != l:
            k, l = min(k, l), max(k, l)
            p[l] = k
            queue.append(l)

    def coincidence(alpha: int, beta: int) -> None:
        queue: list[int] = []
        merge(alpha, beta, queue)
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            for c in range(ncols):
                delta = table[gamma][c]
                if delta is None:
                    continue
                table[delta][c ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][c] is not None:
                    merge(nu, table[mu][c], queue)
                elif table[nu][c ^ 1] is not None:
                    merge(mu, table[nu][c ^ 1], queue)
                else:
                    table[mu][c] = nu
                    table[nu][c ^ 1] = mu

    def scan_and_fill(alpha: int, word: tuple[int, ...]) -> None:
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    for word in subgroups:
        scan_and_fill(0, word)
    alpha = 0
    while alpha < len(table):
        if p[alpha] == alpha:
            for word in relators:
                scan_and_fill(alpha, word)
                if p[alpha] < alpha:
                    break
            if p[alpha] == alpha:
                for c in range(ncols):
                    if table[alpha][c] is None:
                        define(alpha, c)
        alpha += 1

    live = [i for i in range(len(table)) if p[i] == i]
    renumber = {old: new for new, old in enumerate(live)}
    action = tuple(
        tuple(renumber[rep(table[i][2 * g])] for i in live) for g in range(ngens)
    )
    inverse_action = tuple(
        tuple(renumber[rep(table[i][2 * g + 1])] for i in live) for g in range(ngens)
    )
    return SubgroupCosetTable(len(live), action, inverse_action)


def coset_representative_words(ct: SubgroupCosetTable) -> list[tuple[int, ...]]:
    """One word (signed 1-based letters) per coset, reaching it from
    coset 0; breadth-first in generator order, so deterministic."""
    ngens = len(ct.action)
    reps: list[tuple[int, ...] | None] = [None] * ct.num_cosets
    reps[0] = ()
    queue = [0]
    head = 0
    while head < len(queue):
        c = queue[head]
        head += 1
        for g in range(ngens):
            for sign, perm in ((1, ct.action[g]), (-1, ct.inverse_action[g])):
                d = perm[c]
                if reps[d] is None:
                    reps[d] = reps[c] + (sign * (g + 1),)
                    queue.append(d)
    assert all(r is not None for r in reps), "coset action is not transitive"
    return reps  # type: ignore[return-value]


def table_from_presentation(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> GroupTable:
    """Multiplication table of a finite presented group via the regular
    action: enumerate the trivial subgroup, then read off products."""
    ct = todd_coxeter(pres, (), max_cosets)
    n = ct.num_cosets
    if n > DEFAULT_ORDER_CAP:
        raise CapExceeded(f"group order {n} exceeds table cap {DEFAULT_ORDER_CAP}")
    reps = coset_representative_words(ct)
    mul = tuple(tuple(ct.trace(i, reps[j]) for j in range(n)) for i in range(n))
    inv = tuple(mul[i].index(0) for i in range(n))

    def label(word: tuple[int, ...]) -> str:
        if not word:
            return "1"
        out = []
        for l in word:
            name = pres.generator_names[abs(l) - 1]
            out.append(name if l > 0 else name + "^-1")
        return "*".join(out)

    labels = tuple(label(w) for w in reps)
    return GroupTable(n, mul, inv, labels)


def metacyclic(p: int, q: int, max_cosets: int = DEFAULT_MAX_COSETS) -> GroupTable:
    """The nonabelian semidirect product of Z/p acting on Z/q, for
    primes p, q with q = 1 mod p; generators labeled a (order p) and
    b (order q)."""
    if p < 2 or q < 2:
        raise ValueError("p and q must be primes")
    if (q - 1) % p != 0:
        raise ValueError("need q = 1 mod p for a faithful action")
    r = next((r for r in range(2, q) if pow(r, p, q) == 1), None)
    if r is None:
        raise ValueError(f"no element of order {p} in (Z/{q})^*; is q prime?")
    pres = Presentation.from_strings(["a", "b"], [f"a^{p}", f"b^{q}", f"a^-1 b a b^-{r}"])
    return table_from_presentation(pres, max_cosets)


# ---------------------------------------------------------------------------
# Structure computations on tables
# ---------------------------------------------------------------------------


def center(g: GroupTable) -> list[int]:
    """Indices of all central elements."""
    return [
        z
        for z in range(g.order)
        if all(g.mul[z][h] == g.mul[h][z] for h in range(g.order))
    ]


def derived_subgroup(g: GroupTable, within: Sequence[int] | None = None) -> tuple[int, ...]:
    """Closure of all commutators of the given subgroup (default: G)."""
    elems = range(g.order) if within is None else within
    commutators = set()
    for a in elems:
        ia = g.inv[a]
        for b in elems:
            commutators.add(g.mul[g.mul[g.mul[ia][g.inv[b]]][a]][b])
    return g.closure(sorted(commutators))


def derived_series_lengths(g: GroupTable) -> list[int]:
    """Orders along G >= G' >= G'' >= ... down to the trivial group."""
    lengths = [g.order]
    current: Sequence[int] = range(g.order)
    while lengths[-1] > 1:
        current = derived_subgroup(g, current)
        if len(current) == lengths[-1]:
            raise ValueError("derived series does not terminate (group is not solvable)")
        lengths.append(len(current))
    return lengths


def quotient(g: GroupTable, normal: Sequence[int]) -> tuple[GroupTable, list[int]]:
    """Quotient by a normal subgroup given as element indices.

    Returns the quotient table plus the projection list mapping old
    indices to new ones.  Cosets are represented by their smallest
    member, ordered with the identity coset first.
    """
    nset = set(normal)
    coset_rep = [-1] * g.order
    reps = []
    for a in range(g.order):
        if coset_rep[a] != -1:
            continue
        members = sorted(g.mul[a][h] for h in nset)
        r = members[0]
        for m in members:
            coset_rep[m] = r
        reps.append(r)
    reps.sort()
    new_index = {r: i for i, r in enumerate(reps)}
    proj = [new_index[coset_rep[a]] for a in range(g.order)]
    order = len(reps)
    mul = tuple(
        tuple(new_index[coset_rep[g.mul[reps[i]][reps[j]]]] for j in range(order))
        for i in range(order)
    )
    inv = tuple(mul[i].index(0) for i in range(order))
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[r] + "N" for r in reps)
    return GroupTable(order, mul, inv, labels), proj
