"""Self-delimiting codes over binary strings.

Bit strings are plain Python ``str`` objects over the characters ``'0'``
and ``'1'``; the empty string is a valid value.  Strings are identified
with the natural numbers through the length-increasing lexicographic
enumeration

    '' -> 0,  '0' -> 1,  '1' -> 2,  '00' -> 3,  '01' -> 4,  ...

``encode_lg`` implements the code ladder: level 0 is the unary code of
the string's index (``1^n 0``), and each higher level prefixes the
payload with the previous level's encoding of the payload length.  Level
1 therefore costs ``2*len(x) + 1`` bits and level 2 costs
``len(x) + 2*len(len-string) + 1`` bits.

Decoders return ``None`` on a truncated or malformed stream instead of
raising, so enumeration loops can treat failures as "undefined".
"""

from __future__ import annotations

MAX_LEVEL = 3

_BITCHARS = frozenset("01")


def ensure_bits(x: str) -> str:
    """Validate that *x* contains only '0'/'1' characters and return it."""
    if not _BITCHARS.issuperset(x):
        raise ValueError(f"not a bit string: {x!r}")
    return x


def index_to_string(n: int) -> str:
    """Return the n-th string in the length-increasing lexicographic order."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    # Strings of length L occupy indices 2^L - 1 .. 2^(L+1) - 2.
    length = (n + 1).bit_length() - 1
    offset = n - ((1 << length) - 1)
    if length == 0:
        return ""
    return format(offset, f"0{length}b")


def string_to_index(x: str) -> int:
    """Inverse of :func:`index_to_string`."""
    if not x:
        return 0
    return (1 << len(x)) - 1 + int(x, 2)


def encode_lg(level: int, x: str) -> str:
    """Encode *x* with the level-``level`` self-delimiting code.

    Level 0 interprets the payload as its index value and emits unary
    ``1^index 0``.  Level i > 0 emits ``encode_lg(i-1, len-string) + x``
    where ``len-string`` is ``index_to_string(len(x))``.
    """
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {level}")
    if level == 0:
        return "1" * string_to_index(x) + "0"
    return encode_lg(level - 1, index_to_string(len(x))) + x


def decode_lg(level: int, stream: str) -> tuple[str, int] | None:
    """Decode one level-``level`` codeword from the front of *stream*.

    Returns ``(payload, bits_consumed)``, or ``None`` if the stream does
    not begin with a complete codeword.
    """
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {level}")
    if level == 0:
        stop = stream.find("0")
        if stop < 0:
            return None
        return index_to_string(stop), stop + 1
    head = decode_lg(level - 1, stream)
    if head is None:
        return None
    length_string, consumed = head
    n = string_to_index(length_string)
    payload = stream[consumed : consumed + n]
    if len(payload) < n:
        return None
    return payload, consumed + n


def pair(x: str, y: str) -> str:
    """Pair two strings as ``encode_lg(2, x) + y``; injective."""
    return encode_lg(2, x) + y


def unpair(z: str) -> tuple[str, str] | None:
    """Inverse of :func:`pair`; ``None`` if *z* is not a valid pairing."""
    head = decode_lg(2, z)
    if head is None:
        return None
    x, consumed = head
    return x, z[consumed:]


def pair_second(z: str) -> str | None:
    """Second projection of a paired string."""
    parts = unpair(z)
    return None if parts is None else parts[1]
