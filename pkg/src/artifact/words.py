"""Word helpers and the plain-text letter syntax (``a1 A1 a2``)."""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .kernels import free_reduce

Word = tuple  # tuple of nonzero ints; k is a_k, -k is its inverse


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def mul(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def power(w: Sequence[int], k: int) -> Word:
    base = tuple(w) if k >= 0 else inverse(w)
    return free_reduce(base * abs(k))


def check_letters(w: Iterable[int], g: int) -> Word:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or x == 0 or abs(x) > g:
            raise ValueError(f"letter {x!r} out of range for genus {g}")
    return w


def cyclic_free_reduce(w: Sequence[int]) -> tuple[Word, Word]:
    """Return ``(p, core)`` with w = p core p^-1 freely and core cyclically reduced."""
    w = free_reduce(w)
    k = 0
    while k < len(w) // 2 and w[k] == -w[len(w) - 1 - k]:
        k += 1
    return w[:k], w[k:len(w) - k]


def abelianize(w: Sequence[int], g: int) -> list[int]:
    v = [0] * g
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "1"
    return " ".join(f"a{x}" if x > 0 else f"A{-x}" for x in w)


_TOKEN = re.compile(r"([aA])(\d+)$")


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1", "e"):
        return ()
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad letter {tok!r}")
        k = int(m.group(2))
        if k == 0:
            raise ValueError("letters are numbered from 1")
        out.append(k if m.group(1) == "a" else -k)
    return tuple(out)
