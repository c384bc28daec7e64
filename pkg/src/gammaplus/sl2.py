"""Exact SL2(Z) arithmetic and the classical congruence subgroups.

Matrices carry arbitrary-precision integer entries (plain Python ints);
words over the two standard generators

    e1 = [[1,0],[1,1]]   and   e2 = [[1,1],[0,1]]

are kept in run-length form.  Membership in Gamma(m,n), the index
formulas, and a Euclidean decomposition of a matrix into a word in
e1, e2 live here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Mat2:
    """An integer 2x2 matrix [[a, b], [c, d]] with determinant +1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det != 1:
            raise ValueError(f"matrix {self} has determinant {self.det}, expected 1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(n)):
            result = result * base
        return result

    def mod(self, m: int) -> tuple[int, int, int, int]:
        return (self.a % m, self.b % m, self.c % m, self.d % m)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    @classmethod
    def parse(cls, text: str) -> "Mat2":
        """Parse the text form ``[[a,b],[c,d]]`` (whitespace tolerated)."""
        nums = re.findall(r"-?\d+", text)
        if len(nums) != 4 or not re.fullmatch(r"\s*\[\s*\[[^][]*\]\s*,\s*\[[^][]*\]\s*\]\s*", text):
            raise ValueError(f"cannot parse matrix from {text!r}")
        return cls(*(int(n) for n in nums))


IDENTITY = Mat2(1, 0, 0, 1)
E1 = Mat2(1, 0, 1, 1)
E2 = Mat2(1, 1, 0, 1)
MINUS_IDENTITY = Mat2(-1, 0, 0, -1)


def _e1_pow(k: int) -> Mat2:
    return Mat2(1, 0, k, 1)


def _e2_pow(k: int) -> Mat2:
    return Mat2(1, k, 0, 1)


class SL2Word:
    """A word in e1, e2 in run-length form: adjacent terms use distinct
    generators and exponents are nonzero."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, int]] = ()):
        out: list[tuple[int, int]] = []
        for gen, exp in terms:
            if gen not in (1, 2):
                raise ValueError(f"invalid generator index {gen!r}")
            if exp == 0:
                continue
            if out and out[-1][0] == gen:
                merged = out[-1][1] + exp
                out.pop()
                if merged:
                    out.append((gen, merged))
            else:
                out.append((gen, exp))
        self.terms: tuple[tuple[int, int], ...] = tuple(out)

    def inverse(self) -> "SL2Word":
        return SL2Word((g, -k) for g, k in reversed(self.terms))

    def __mul__(self, other: "SL2Word") -> "SL2Word":
        return SL2Word(self.terms + other.terms)

    def letters(self) -> tuple[int, ...]:
        """Flat signed-letter expansion: +g repeated, or -g for inverses."""
        out = []
        for g, k in self.terms:
            out.extend([g if k > 0 else -g] * abs(k))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, SL2Word) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "1"
        return " ".join(f"e{g}" if k == 1 else f"e{g}^{k}" for g, k in self.terms)

    def __repr__(self) -> str:
        return f"SL2Word.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "SL2Word":
        """Parse e.g. ``e1^-1 e2^3`` or ``(e2 e1 e2)^4`` into a word."""
        tokens = re.findall(r"e[12]|\(|\)|\^-?\d+|\S", text)
        pos = 0

        def parse_seq(depth: int) -> list[tuple[int, int]]:
            nonlocal pos
            out: list[tuple[int, int]] = []
            while pos < len(tokens):
                tok = tokens[pos]
                if tok == ")":
                    if depth == 0:
                        raise ValueError(f"unbalanced ')' in {text!r}")
                    return out
                pos += 1
                if tok == "(":
                    inner = parse_seq(depth + 1)
                    if pos >= len(tokens) or tokens[pos] != ")":
                        raise ValueError(f"unbalanced '(' in {text!r}")
                    pos += 1
                    exp = 1
                    if pos < len(tokens) and tokens[pos].startswith("^"):
                        exp = int(tokens[pos][1:])
                        pos += 1
                    seq = inner if exp >= 0 else [(g, -k) for g, k in reversed(inner)]
                    out.extend(seq * abs(exp))
                elif tok in ("e1", "e2"):
                    exp = 1
                    if pos < len(tokens) and tokens[pos].startswith("^"):
                        exp = int(tokens[pos][1:])
                        pos += 1
                    out.append((int(tok[1]), exp))
                elif tok == "1" and not out and pos == len(tokens):
                    return out
                else:
                    raise ValueError(f"unexpected token {tok!r} in {text!r}")
            return out

        terms = parse_seq(0)
        if pos != len(tokens):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        return cls(terms)


# Relators of the standard presentation of SL2(Z) on e1, e2.
RELATOR_1 = SL2Word.parse("e2 e1^-1 e2 e1 e2^-1 e1")
RELATOR_2 = SL2Word.parse("(e2 e1^-1 e2)^4")
MINUS_IDENTITY_WORD = SL2Word.parse("(e2 e1^-1 e2)^2")


def eval_word(word: SL2Word) -> Mat2:
    """Multiply out a word in e1, e2."""
    result = IDENTITY
    for gen, exp in word.terms:
        result = result * (_e1_pow(exp) if gen == 1 else _e2_pow(exp))
    return result


def in_gamma(mat: Mat2, m: int, n: int) -> bool:
    """Test the Gamma(m,n) congruences: a=1, b=0 mod m and c=0, d=1 mod n."""
    return (
        (mat.a - 1) % m == 0
        and mat.b % m == 0
        and mat.c % n == 0
        and (mat.d - 1) % n == 0
    )


def _prime_factors(m: int) -> list[int]:
    # Trial division is plenty: all moduli in scope are tiny.
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def index_gamma1(m: int) -> int:
    """[SL2(Z) : Gamma_1(m)] = [SL2(Z) : Gamma^1(m)] = m^2 prod (1 - 1/p^2)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    val = m * m
    for p in _prime_factors(m):
        val = val // (p * p) * (p * p - 1)
    return val


def index_principal(m: int) -> int:
    """[SL2(Z) : Gamma(m)] = m^3 prod (1 - 1/p^2)."""
    return m * index_gamma1(m)


def index_gamma(m: int, n: int) -> int:
    """[SL2(Z) : Gamma(m,n)] for arbitrary positive m, n.

    The index depends only on (lcm, gcd): with M = lcm(m,n) and
    N = gcd(m,n) it equals N * M^2 * prod_{p | M} (1 - 1/p^2).
    """
    if m < 1 or n < 1:
        raise ValueError("moduli must be positive")
    big, small = (m * n) // math.gcd(m, n), math.gcd(m, n)
    return small * index_gamma1(big)


def matrix_to_word(mat: Mat2) -> SL2Word:
    """Decompose a determinant-1 matrix as a word in e1, e2.

    Euclidean reduction of the first column by row operations; no
    canonical form is promised, only eval_word(result) == mat.
    -I is emitted as the fixed torsion word (e2 e1^-1 e2)^2.
    """
    a, b, c, d = mat.a, mat.b, mat.c, mat.d
    ops: list[tuple[int, int]] = []  # left-multiplications applied, in order
    while c != 0:
        if a == 0:
            # row1 += row2 makes the corner nonzero
            ops.append((2, 1))
            a, b = a + c, b + d
        elif abs(a) <= abs(c):
            q = c // a
            ops.append((1, -q))  # row2 -= q * row1
            c, d = c - q * a, d - q * b
        else:
            q = a // c
            ops.append((2, -q))  # row1 -= q * row2
            a, b = a - q * c, b - q * d
    # Now the matrix is [[a, b], [0, d]] with a == d == +-1.
    tail: list[tuple[int, int]] = []
    if a == 1:
        tail = [(2, b)]
    else:
        tail = list(MINUS_IDENTITY_WORD.terms) + [(2, -b)]
    return SL2Word([(g, -k) for g, k in ops] + tail)


def rho_subgroup_generators(stabilizer_gens: Sequence) -> list[Mat2]:
    """Abelianization images of a list of automorphisms, deduplicated
    preserving first occurrence."""
    seen = set()
    out = []
    for f in stabilizer_gens:
        m = f.rho()
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out
