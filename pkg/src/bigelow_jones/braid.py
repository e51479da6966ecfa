"""Braid words: parsing, writhe and the doubled word b x 1^m."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

Letter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    """Signed Artin letters on a fixed number of strands.

    Letters are read left to right and the leftmost letter acts first.
    """

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise InputError(f"strand count must be positive, got {self.strands}")
        for index, sign in self.letters:
            if not 0 < index < self.strands:
                raise InputError(f"letter index {index} out of range for {self.strands} strands")
            if sign not in (1, -1):
                raise InputError(f"letter sign must be +1 or -1, got {sign}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_braid(self)

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.letters))


def parse_braid(text: str, strands: int) -> BraidWord:
    letters = []
    for token in text.split():
        try:
            value = int(token)
        except ValueError:
            raise InputError(f"malformed braid token {token!r}") from None
        if value == 0 or abs(value) >= strands:
            raise InputError(f"braid letter {value} out of range for {strands} strands")
        letters.append((abs(value), 1 if value > 0 else -1))
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    return " ".join(str(i * s) for i, s in b.letters)


def writhe(b: BraidWord) -> int:
    return sum(s for _, s in b.letters)


def to_plat(b: BraidWord) -> BraidWord:
    """The word b x 1^m on 2m strands; letters keep their indices."""
    return BraidWord(2 * b.strands, b.letters)
