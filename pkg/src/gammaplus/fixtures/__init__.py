"""Checked-in data files: the order-128 presentation, the two word
tables, and the level-8 witness word.

Files are read from the packaged ``fixtures`` directory unless an
override directory is supplied (the CLI flag --fixtures).  Reports
embed a sha256 of every file they used, so results are traceable to
the exact inputs.
"""

from __future__ import annotations

import hashlib
from importlib import resources
from pathlib import Path

from ..autf2 import FreeAutomorphism, parse_aut
from ..groups import Presentation
from ..sl2 import SL2Word

G128_PRESENTATION = "g128.pres"
TABLE1_WORDS = "table1.words"
TABLE2_WORDS = "table2.words"
WITNESS_WORD = "witness.word"

ALL_FILES = (G128_PRESENTATION, TABLE1_WORDS, TABLE2_WORDS, WITNESS_WORD)


def read_fixture(name: str, directory: str | Path | None = None) -> str:
    if directory is not None:
        return (Path(directory) / name).read_text(encoding="utf-8")
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")


def fixture_hash(name: str, directory: str | Path | None = None) -> str:
    return hashlib.sha256(read_fixture(name, directory).encode("utf-8")).hexdigest()


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def load_g128_presentation(directory: str | Path | None = None) -> Presentation:
    return Presentation.parse_text(read_fixture(G128_PRESENTATION, directory))


def load_table1(directory: str | Path | None = None) -> list[FreeAutomorphism]:
    """The 30 stabilizer words over p, q."""
    return [parse_aut(line) for line in _data_lines(read_fixture(TABLE1_WORDS, directory))]


def load_table2(directory: str | Path | None = None) -> list[SL2Word]:
    """The generator words of the abelianized stabilizer image."""
    return [SL2Word.parse(line) for line in _data_lines(read_fixture(TABLE2_WORDS, directory))]


def load_witness(directory: str | Path | None = None) -> SL2Word:
    lines = _data_lines(read_fixture(WITNESS_WORD, directory))
    if len(lines) != 1:
        raise ValueError(f"expected exactly one witness word, found {len(lines)}")
    return SL2Word.parse(lines[0])
