"""Elements of the special automorphism group of F2.

An automorphism is stored as a formal word in the four generators

    u:  x -> xy, y -> y          v:  x -> x, y -> xy
    ax: conjugation by x         ay: conjugation by y

together with its cached action on the basis, i.e. the images of x
and y.  Juxtaposition follows written composition order: in a word
``f g`` the right factor acts first, (f g)(w) = f(g(w)).  Two
automorphisms are equal iff their cached images agree.

The abelianization map rho sends an automorphism to the 2x2 integer
matrix whose columns are the exponent vectors of the images of x and
y; with the conventions above rho(u) = e1, rho(v) = e2 and rho is a
homomorphism into SL2(Z).
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .sl2 import Mat2
from .words import ReducedWord, cancel, substitute

U, V, AX, AY = 1, 2, 3, 4

_NAME_TO_CODE = {"u": U, "v": V, "ax": AX, "ay": AY}
_CODE_TO_NAME = {v: k for k, v in _NAME_TO_CODE.items()}

_W = ReducedWord.parse

# Generator actions, keyed by signed generator code.
_BASIC_IMAGES: Mapping[int, tuple[ReducedWord, ReducedWord]] = {
    U: (_W("xy"), _W("y")),
    -U: (_W("xY"), _W("y")),
    V: (_W("x"), _W("xy")),
    -V: (_W("x"), _W("Xy")),
    AX: (_W("x"), _W("xyX")),
    -AX: (_W("x"), _W("Xyx")),
    AY: (_W("yxY"), _W("y")),
    -AY: (_W("Yxy"), _W("y")),
}

_IDENTITY_IMAGES = (_W("x"), _W("y"))


class AutLetter:
    """Signed generator codes for words in u, v, ax, ay."""

    U, V, AX, AY = U, V, AX, AY

    @staticmethod
    def name(code: int) -> str:
        return _CODE_TO_NAME[abs(code)]


class FreeAutomorphism:
    """A special automorphism of F2 with cached generator images."""

    __slots__ = ("word", "image_x", "image_y")

    def __init__(self, word: Iterable[int] = ()):
        self.word: tuple[int, ...] = cancel(self._check(c) for c in word)
        ix, iy = _IDENTITY_IMAGES
        # Rightmost letter acts first, so accumulate from the right and
        # apply each basic action to the partial images.
        for code in reversed(self.word):
            bx, by = _BASIC_IMAGES[code]
            ix = substitute(ix, bx, by)
            iy = substitute(iy, bx, by)
        self.image_x = ix
        self.image_y = iy

    @staticmethod
    def _check(code: int) -> int:
        if not isinstance(code, int) or abs(code) not in (U, V, AX, AY):
            raise ValueError(f"invalid generator code {code!r}")
        return code

    @classmethod
    def _raw(cls, word, image_x, image_y) -> "FreeAutomorphism":
        f = object.__new__(cls)
        f.word = word
        f.image_x = image_x
        f.image_y = image_y
        return f

    @classmethod
    def identity(cls) -> "FreeAutomorphism":
        return cls._raw((), *_IDENTITY_IMAGES)

    @classmethod
    def basic(cls, name, sign: int = 1) -> "FreeAutomorphism":
        """The generator (or inverse generator) named u, v, ax or ay."""
        code = _NAME_TO_CODE[name] if isinstance(name, str) else cls._check(name)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        code *= sign
        return cls._raw((code,), *_BASIC_IMAGES[code])

    def compose(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """self after other: (self * other)(w) = self(other(w))."""
        return FreeAutomorphism._raw(
            cancel(self.word + other.word),
            substitute(other.image_x, self.image_x, self.image_y),
            substitute(other.image_y, self.image_x, self.image_y),
        )

    __mul__ = compose

    def inverse(self) -> "FreeAutomorphism":
        return FreeAutomorphism(tuple(-c for c in reversed(self.word)))

    def __pow__(self, n: int) -> "FreeAutomorphism":
        base = self if n >= 0 else self.inverse()
        result = FreeAutomorphism.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    def __call__(self, w: ReducedWord) -> ReducedWord:
        return substitute(w, self.image_x, self.image_y)

    @property
    def is_identity(self) -> bool:
        return (self.image_x, self.image_y) == _IDENTITY_IMAGES

    def rho(self) -> Mat2:
        """Abelianized matrix: columns are the exponent vectors of the
        images of x and y.  Always has determinant +1."""
        ex = self.image_x.exponent_vector()
        ey = self.image_y.exponent_vector()
        return Mat2(ex.a, ey.a, ex.b, ey.b)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeAutomorphism)
            and self.image_x == other.image_x
            and self.image_y == other.image_y
        )

    def __hash__(self) -> int:
        return hash((self.image_x.letters, self.image_y.letters))

    def __str__(self) -> str:
        if not self.word:
            return "1"
        out = []
        i = 0
        while i < len(self.word):
            code = self.word[i]
            j = i
            while j < len(self.word) and self.word[j] == code:
                j += 1
            name = _CODE_TO_NAME[abs(code)]
            exp = (j - i) * (1 if code > 0 else -1)
            out.append(name if exp == 1 else f"{name}^{exp}")
            i = j
        return " ".join(out)

    def __repr__(self) -> str:
        return f"<aut {self} : x -> {self.image_x}, y -> {self.image_y}>"


def identity() -> FreeAutomorphism:
    return FreeAutomorphism.identity()


def basic(name, sign: int = 1) -> FreeAutomorphism:
    return FreeAutomorphism.basic(name, sign)


def compose(f: FreeAutomorphism, g: FreeAutomorphism) -> FreeAutomorphism:
    return f.compose(g)


def invert_aut(f: FreeAutomorphism) -> FreeAutomorphism:
    return f.inverse()


def apply(f: FreeAutomorphism, w: ReducedWord) -> ReducedWord:
    return f(w)


def equal(f: FreeAutomorphism, g: FreeAutomorphism) -> bool:
    """Automorphisms of a free group agree iff they agree on the basis."""
    return f == g


def rho(f: FreeAutomorphism) -> Mat2:
    return f.rho()


def inner_automorphism(w: ReducedWord) -> FreeAutomorphism:
    """Conjugation z -> w z w^-1 as a word in ax, ay."""
    shift = {1: AX, -1: -AX, 2: AY, -2: -AY}
    return FreeAutomorphism(shift[c] for c in w.letters)


def _const_p() -> FreeAutomorphism:
    return FreeAutomorphism((-AX, -U, V, -U))


def _const_q() -> FreeAutomorphism:
    return FreeAutomorphism((-AX, -AX, -U, V, -U, -U))


def gamma1() -> FreeAutomorphism:
    """u^2, stabilizing x -> r, y -> s for every dihedral group."""
    return FreeAutomorphism((U, U))


def gamma2(n: int) -> FreeAutomorphism:
    """v^n (the only member of the family that depends on n)."""
    return FreeAutomorphism((V,) * n)


def gamma3() -> FreeAutomorphism:
    """ax^-1 v^2, with images x -> x, y -> xyx."""
    return FreeAutomorphism((-AX, V, V))


def gamma4() -> FreeAutomorphism:
    """ax^-1 (u^-1 v)^3, with images x -> y^-1 x^-1 y, y -> y^-1."""
    return FreeAutomorphism((-AX, -U, V, -U, V, -U, V))


def named_constants(n: int = 3) -> dict[str, FreeAutomorphism]:
    """The named automorphisms used throughout: p, q and the dihedral
    stabilizer generators gamma1..gamma4 (gamma2 = v^n)."""
    return {
        "p": _const_p(),
        "q": _const_q(),
        "gamma1": gamma1(),
        "gamma2": gamma2(n),
        "gamma3": gamma3(),
        "gamma4": gamma4(),
    }


_TOKEN_RE = re.compile(r"ax|ay|[uvpq1]|\(|\)|\^-?\d+|\S")

_CONSTANT_WORDS = {
    "p": (-AX, -U, V, -U),
    "q": (-AX, -AX, -U, V, -U, -U),
}


def parse_aut(text: str) -> FreeAutomorphism:
    """Parse a word over u, v, ax, ay, p, q with ^-exponents and
    parentheses; the leftmost token acts last, matching written
    composition order."""
    tokens = _TOKEN_RE.findall(text)
    pos = 0

    def invert(seq: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(-c for c in reversed(seq))

    def parse_seq(depth: int) -> tuple[int, ...]:
        nonlocal pos
        out: list[int] = []
        while pos < len(tokens):
            tok = tokens[pos]
            if tok == ")":
                if depth == 0:
                    raise ValueError(f"unbalanced ')' in {text!r}")
                return tuple(out)
            pos += 1
            if tok == "(":
                inner = parse_seq(depth + 1)
                if pos >= len(tokens) or tokens[pos] != ")":
                    raise ValueError(f"unbalanced '(' in {text!r}")
                pos += 1
                exp = _maybe_exponent()
                base = inner if exp >= 0 else invert(inner)
                out.extend(base * abs(exp))
            elif tok in _NAME_TO_CODE or tok in _CONSTANT_WORDS:
                base = _CONSTANT_WORDS.get(tok, (_NAME_TO_CODE.get(tok),))
                exp = _maybe_exponent()
                seq = base if exp >= 0 else invert(base)
                out.extend(seq * abs(exp))
            elif tok == "1":
                _maybe_exponent()
            else:
                raise ValueError(f"unknown token {tok!r} in {text!r}")
        return tuple(out)

    def _maybe_exponent() -> int:
        nonlocal pos
        if pos < len(tokens) and tokens[pos].startswith("^"):
            exp = int(tokens[pos][1:])
            pos += 1
            return exp
        return 1

    word = parse_seq(0)
    if pos != len(tokens):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    return FreeAutomorphism(word)
