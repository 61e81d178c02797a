"""Mixed-radix digits.

With radices (g_1, ..., g_r) and place values G_0 = 1, G_i = G_{i-1} g_i,
every n >= 0 is uniquely

    n = x_1 G_0 + x_2 G_1 + ... + x_r G_{r-1} + overflow * G_r,  0 <= x_i < g_i.

Digits are stored least significant first, so ``digits[0]`` is x_1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from addsys.errors import DigitOutOfRange, UnknownPreset
from addsys.transforms import check_radices


@dataclass(frozen=True)
class MixedRadixDigits:
    digits: tuple[int, ...]
    overflow: int = 0

    def __str__(self) -> str:
        return format_digits(self)


def encode(n: int, radices: Sequence[int]) -> MixedRadixDigits:
    """Digits of ``n`` by repeated division, lowest place first."""
    if n < 0:
        raise ValueError(f"cannot encode negative integer {n}")
    radices = check_radices(radices)
    digits = []
    for g in radices:
        n, x = divmod(n, g)
        digits.append(x)
    return MixedRadixDigits(tuple(digits), n)


def decode(d: MixedRadixDigits, radices: Sequence[int]) -> int:
    radices = check_radices(radices)
    if len(d.digits) != len(radices):
        raise ValueError(f"{len(d.digits)} digits for {len(radices)} radices")
    if d.overflow < 0:
        raise ValueError(f"overflow must be >= 0, got {d.overflow}")
    n = 0
    place = 1
    for i, (x, g) in enumerate(zip(d.digits, radices), start=1):
        if not 0 <= x < g:
            raise DigitOutOfRange(i, x, g)
        n += x * place
        place *= g
    return n + d.overflow * place


_GADIC = re.compile(r"g-adic\((\d+),(\d+)\)")
_COUNTED = re.compile(r"(binary|factorial)-(\d+)")


def preset(name: str) -> tuple[int, ...]:
    """Radix sequence for a named system.

    ``british-monetary`` is pence-shillings-pounds (12, 20); ``binary-k``,
    ``g-adic(g,k)`` and ``factorial-k`` give k radices.
    """
    key = name.strip().replace(" ", "")
    if key == "british-monetary":
        return (12, 20)
    m = _COUNTED.fullmatch(key)
    if m:
        k = int(m.group(2))
        return (2,) * k if m.group(1) == "binary" else tuple(range(2, k + 2))
    m = _GADIC.fullmatch(key)
    if m:
        return check_radices((int(m.group(1)),) * int(m.group(2)))
    raise UnknownPreset(
        f"unknown preset {name!r}; expected british-monetary, binary-k, g-adic(g,k) or factorial-k"
    )


def format_digits(d: MixedRadixDigits, msd_first: bool = False) -> str:
    """Text form ``x_1,...,x_r+overflow``, e.g. ``7,9+3``.

    The ``+overflow`` suffix is omitted when it is 0.  With ``msd_first``
    the digit list is reversed for reading.
    """
    digits = reversed(d.digits) if msd_first else d.digits
    text = ",".join(map(str, digits))
    if d.overflow:
        text += f"+{d.overflow}"
    return text


def parse_digits(text: str, msd_first: bool = False) -> MixedRadixDigits:
    text = text.strip()
    body, plus, over = text.partition("+")
    try:
        digits = tuple(int(x) for x in body.split(",")) if body.strip() else ()
        overflow = int(over) if plus else 0
    except ValueError:
        raise ValueError(f"malformed digit string {text!r}; expected e.g. 7,9+3") from None
    if msd_first:
        digits = digits[::-1]
    return MixedRadixDigits(digits, overflow)
