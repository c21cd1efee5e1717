"""
Braid Word Grammar

Text form of braids used on the command line: ``"n: i1 i2 ..."`` where each
token is a nonzero generator index with |i| < n (negative for inverses), or
``D`` / ``D^k`` for a power of the half twist. A lone ``.`` is skipped, so the
printed form of a normal form (``D^-1 . 1 2``) reads back as the same braid.
"""

import re

from .errors import BraidParseError
from .normal_form import BraidWord
from .simple import delta, simple_word

_HEADER = re.compile(r"\s*(\d+)\s*:")
_TOKEN = re.compile(r"\S+")
_DELTA = re.compile(r"D(?:\^([+-]?\d+))?$")
_INDEX = re.compile(r"[+-]?\d+$")


def parse_braid(text):
    """
    Parse ``"n: i1 i2 ..."`` into a BraidWord.

    Parameters
    ----------
    text : str
        E.g. ``"3: 1 1 2"`` for σ_1σ_1σ_2 in B_3, ``"3:"`` for the identity.

    Returns
    -------
    BraidWord

    Raises
    ------
    BraidParseError
        On a malformed header, an unknown token, a zero index or an index
        outside 1..n-1; the message carries the character position.
    """
    header = _HEADER.match(text)
    if header is None:
        raise BraidParseError("Expected header 'n:'", text, 0)
    n = int(header.group(1))
    if n < 2:
        raise BraidParseError(f"Strand count must be >= 2, got {n}", text, header.start(1))

    delta_word = simple_word(delta(n))
    letters = []
    for match in _TOKEN.finditer(text, header.end()):
        token, position = match.group(), match.start()
        if token == ".":
            continue
        power = _DELTA.match(token)
        if power:
            k = int(power.group(1)) if power.group(1) is not None else 1
            if k >= 0:
                letters.extend(delta_word * k)
            else:
                letters.extend([-i for i in reversed(delta_word)] * (-k))
            continue
        if not _INDEX.match(token):
            raise BraidParseError(f"Unexpected token {token!r}", text, position)
        value = int(token)
        if value == 0:
            raise BraidParseError("Generator index 0 does not exist", text, position)
        if abs(value) >= n:
            raise BraidParseError(f"Generator index {value} out of range for B_{n}", text, position)
        letters.append(value)

    return BraidWord.from_ints(n, letters)


def format_braid_word(word):
    """The inverse of parse_braid for plain words."""
    return f"{word.n}: " + " ".join(str(i) for i in word.signed())
