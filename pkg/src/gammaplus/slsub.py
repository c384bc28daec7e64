"""Finite-index subgroups of SL2(Z) given by matrix generators.

A subgroup is stored through the permutation action of e1 and e2 on
its cosets, obtained by coset enumeration over the two-relator
presentation of SL2(Z).  On top of the action live membership, the
level (smallest a with the normal closure of e2^a inside the
subgroup), and the congruence decision: a subgroup of level a is a
congruence subgroup iff the principal congruence subgroup of level a
is contained in it, which happens iff the coset representation
factors through SL2(Z/aZ).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .groups import DEFAULT_MAX_COSETS, Presentation, SubgroupCosetTable, coset_representative_words, todd_coxeter
from .sl2 import E1, E2, IDENTITY, Mat2, index_principal, matrix_to_word

SL2_PRESENTATION = Presentation.from_strings(
    ["e1", "e2"],
    ["e2 e1^-1 e2 e1 e2^-1 e1", "e2 e1^-1 e2 e2 e1^-1 e2 e2 e1^-1 e2 e2 e1^-1 e2"],
)


@dataclass(frozen=True)
class SL2Subgroup:
    """A finite-index subgroup with its coset permutation action;
    coset 0 is the subgroup itself."""

    generators: tuple[Mat2, ...]
    cosets: SubgroupCosetTable

    @property
    def index(self) -> int:
        return self.cosets.num_cosets

    @property
    def perm_e1(self) -> tuple[int, ...]:
        return self.cosets.action[0]

    @property
    def perm_e2(self) -> tuple[int, ...]:
        return self.cosets.action[1]

    def coset_of(self, m: Mat2) -> int:
        return self.cosets.trace(0, matrix_to_word(m).letters())

    def coset_representatives(self) -> list[Mat2]:
        """One matrix per coset, breadth-first from the subgroup."""
        reps = []
        for word in coset_representative_words(self.cosets):
            m = IDENTITY
            for letter in word:
                m = m * (E1 if letter == 1 else E1.inverse() if letter == -1 else E2 if letter == 2 else E2.inverse())
            reps.append(m)
        return reps


@dataclass(frozen=True)
class LevelReport:
    """Level of a subgroup plus the congruence verdict; when the verdict
    is negative, `witness` is congruent to I mod the level but lies
    outside the subgroup."""

    level: int
    is_congruence: bool
    witness: Mat2 | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "level": self.level,
                "is_congruence": self.is_congruence,
                "witness": None if self.witness is None else str(self.witness),
            },
            sort_keys=True,
        )


def build(generators: Sequence[Mat2], max_cosets: int = DEFAULT_MAX_COSETS) -> SL2Subgroup:
    """Coset enumeration for the subgroup generated by the matrices.

    Raises EnumerationLimit if the table does not close, which in
    particular happens for infinite-index subgroups such as a single
    parabolic generator.
    """
    words = tuple(matrix_to_word(m).letters() for m in generators)
    ct = todd_coxeter(SL2_PRESENTATION, words, max_cosets)
    return SL2Subgroup(tuple(generators), ct)


def contains(s: SL2Subgroup, m: Mat2) -> bool:
    """Membership: the word of m must fix the subgroup's coset."""
    return s.coset_of(m) == 0


def level(s: SL2Subgroup) -> int:
    """Smallest a such that the subgroup contains every conjugate of
    e2^a: the lcm of the cycle lengths of the e2-permutation."""
    perm = s.perm_e2
    seen = [False] * len(perm)
    result = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        c = start
        while not seen[c]:
            seen[c] = True
            c = perm[c]
            length += 1
        result = result * length // math.gcd(result, length)
    return result


def level_by_conjugation(s: SL2Subgroup, limit: int | None = None) -> int:
    """Independent route to the level: walk a = 1, 2, ... and test
    t e2^a t^-1 for every coset representative t by actual matrix
    membership.  Slower than the cycle lcm but follows the definition
    letter by letter."""
    reps = s.coset_representatives()
    limit = level(s) if limit is None else limit
    for a in range(1, limit + 1):
        e2a = E2 ** a
        if all(contains(s, t * e2a * t.inverse()) for t in reps):
            return a
    raise AssertionError("no level found up to limit, subgroup action is inconsistent")


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p first, then q (both act on cosets on the right)
    return tuple(q[p[i]] for i in range(len(p)))


def representation_factors_mod(
    s: SL2Subgroup, a: int
) -> tuple[bool, tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]] | None]:
    """Does the coset representation factor through SL2(Z/aZ)?

    Walks SL2(Z/aZ) breadth-first as words in e1, e2, carrying both the
    residue matrix and the coset permutation.  Meeting a residue twice
    with different permutations disproves factoring; the two word paths
    are returned as the conflict certificate.
    """
    n = s.index
    perms = {
        (1, 1): s.perm_e1,
        (2, 1): s.perm_e2,
        (1, -1): _invert_perm(s.perm_e1),
        (2, -1): _invert_perm(s.perm_e2),
    }
    steps = [
        ((1, 1), E1),
        ((1, -1), E1.inverse()),
        ((2, 1), E2),
        ((2, -1), E2.inverse()),
    ]
    start = IDENTITY.mod(a)
    seen: dict[tuple[int, int, int, int], tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = {
        start: (tuple(range(n)), ())
    }
    queue = [start]
    head = 0
    budget = index_principal(a)
    while head < len(queue):
        residue = queue[head]
        head += 1
        perm, word = seen[residue]
        for (key, mat) in steps:
            new_res = _mod_mul(residue, mat, a)
            new_perm = _perm_compose(perm, perms[key])
            new_word = word + (key,)
            if new_res not in seen:
                if len(seen) > budget:
                    raise AssertionError("factoring walk outgrew SL2(Z/aZ)")
                seen[new_res] = (new_perm, new_word)
                queue.append(new_res)
            elif seen[new_res][0] != new_perm:
                return False, (seen[new_res][1], new_word)
    return True, None


def is_congruence(s: SL2Subgroup) -> LevelReport:
    """Decide whether the subgroup is a congruence subgroup.

    With a = level(s), the subgroup is congruence iff it contains the
    principal congruence subgroup of level a, iff the coset
    representation factors through SL2(Z/aZ).  When factoring fails,
    the conflicting word pair yields an element of the principal
    subgroup outside the representation core, and conjugating it with
    coset representatives produces a witness outside s.
    """
    a = level(s)
    factors, conflict = representation_factors_mod(s, a)
    if factors:
        return LevelReport(a, True, None)
    word_a, word_b = conflict
    witness = _extract_witness(s, word_a, word_b, a)
    return LevelReport(a, False, witness)


def _invert_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return out


def _mod_mul(residue: tuple[int, int, int, int], m: Mat2, a: int) -> tuple[int, int, int, int]:
    r0, r1, r2, r3 = residue
    return (
        (r0 * m.a + r1 * m.c) % a,
        (r0 * m.b + r1 * m.d) % a,
        (r2 * m.a + r3 * m.c) % a,
        (r2 * m.b + r3 * m.d) % a,
    )


def _eval_steps(word: tuple[tuple[int, int], ...]) -> Mat2:
    m = IDENTITY
    for gen, sign in word:
        step = E1 if gen == 1 else E2
        m = m * (step if sign == 1 else step.inverse())
    return m


def _extract_witness(
    s: SL2Subgroup, word_a: tuple[tuple[int, int], ...], word_b: tuple[tuple[int, int], ...], a: int
) -> Mat2:
    """From two words with equal residue but different coset action,
    produce a matrix congruent to I mod a that is not in s."""
    m = _eval_steps(word_b) * _eval_steps(word_a).inverse()
    for t in s.coset_representatives():
        candidate = t * m * t.inverse()
        if not contains(s, candidate):
            return candidate
    raise AssertionError("conflicting words produced no witness; coset action inconsistent")
