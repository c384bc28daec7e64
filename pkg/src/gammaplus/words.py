"""Exact arithmetic in the free group F2 on the two letters x and y.

Letters are encoded as signed integers: +1 = x, -1 = x^-1, +2 = y,
-2 = y^-1.  Words are kept freely reduced at all times, so equality of
group elements is plain equality of letter tuples.  The text form uses
``x``, ``y`` for the generators and ``X``, ``Y`` for their inverses;
the empty word prints as ``1``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

X_GEN = 1
Y_GEN = 2

_CODE_TO_CHAR = {1: "x", -1: "X", 2: "y", -2: "Y"}
_CHAR_TO_CODE = {c: n for n, c in _CODE_TO_CHAR.items()}


class Letter(NamedTuple):
    """A single letter: one of the two generators together with a sign."""

    generator: str  # "x" or "y"
    sign: int       # +1 or -1

    @property
    def code(self) -> int:
        return (X_GEN if self.generator == "x" else Y_GEN) * self.sign

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        if code not in _CODE_TO_CHAR:
            raise ValueError(f"invalid letter code {code!r}")
        return cls("x" if abs(code) == X_GEN else "y", 1 if code > 0 else -1)


def _as_code(letter) -> int:
    code = letter.code if isinstance(letter, Letter) else letter
    if not isinstance(code, int) or abs(code) not in (X_GEN, Y_GEN):
        raise ValueError(f"invalid letter {letter!r}")
    return code


def cancel(codes: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a sequence of signed letter codes."""
    out: list[int] = []
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


class ReducedWord:
    """A freely reduced word in F2, immutable after construction.

    The constructor reduces its input eagerly, so ``letters`` is always
    in canonical form and ``==`` compares group elements.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable = ()):
        self.letters: tuple[int, ...] = cancel(_as_code(l) for l in letters)

    @classmethod
    def _raw(cls, letters: tuple[int, ...]) -> "ReducedWord":
        # Internal fast path; caller guarantees `letters` is reduced.
        w = object.__new__(cls)
        w.letters = letters
        return w

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        """Parse the text form, e.g. ``xyYX`` (reduces to ``x``)."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        codes = []
        for ch in text:
            if ch not in _CHAR_TO_CODE:
                raise ValueError(f"invalid word character {ch!r} in {text!r}")
            codes.append(_CHAR_TO_CODE[ch])
        return cls(codes)

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        a, b = list(self.letters), other.letters
        i = 0
        while a and i < len(b) and a[-1] == -b[i]:
            a.pop()
            i += 1
        return ReducedWord._raw(tuple(a) + b[i:])

    def inverse(self) -> "ReducedWord":
        return ReducedWord._raw(tuple(-c for c in reversed(self.letters)))

    def __pow__(self, n: int) -> "ReducedWord":
        if n < 0:
            return self.inverse() ** (-n)
        result = ReducedWord._raw(())
        for _ in range(n):
            result = result * self
        return result

    def exponent_vector(self) -> "ExponentVector":
        a = b = 0
        for c in self.letters:
            if abs(c) == X_GEN:
                a += 1 if c > 0 else -1
            else:
                b += 1 if c > 0 else -1
        return ExponentVector(a, b)

    def as_letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, ReducedWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(_CODE_TO_CHAR[c] for c in self.letters)

    def __repr__(self) -> str:
        return f"ReducedWord.parse({str(self)!r})"


class ExponentVector(NamedTuple):
    """Image of a word in the abelianization F2/[F2,F2], i.e. Z^2."""

    a: int  # exponent sum of x
    b: int  # exponent sum of y


EMPTY = ReducedWord()
X = ReducedWord([X_GEN])
Y = ReducedWord([Y_GEN])


def reduce(letters: Iterable) -> ReducedWord:
    """Freely reduce a letter sequence into a ReducedWord."""
    return ReducedWord(letters)


def multiply(w: ReducedWord, v: ReducedWord) -> ReducedWord:
    return w * v


def invert(w: ReducedWord) -> ReducedWord:
    return w.inverse()


def substitute(w: ReducedWord, image_x: ReducedWord, image_y: ReducedWord) -> ReducedWord:
    """Apply the endomorphism x -> image_x, y -> image_y to w.

    Positive letters are replaced by the image, negative letters by the
    inverted image; the result is reduced on the fly.
    """
    images = {
        X_GEN: image_x.letters,
        -X_GEN: image_x.inverse().letters,
        Y_GEN: image_y.letters,
        -Y_GEN: image_y.inverse().letters,
    }
    out: list[int] = []
    for c in w.letters:
        for m in images[c]:
            if out and out[-1] == -m:
                out.pop()
            else:
                out.append(m)
    return ReducedWord._raw(tuple(out))


def exponent_vector(w: ReducedWord) -> ExponentVector:
    return w.exponent_vector()
