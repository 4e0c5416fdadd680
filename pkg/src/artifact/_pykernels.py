"""Pure-Python word kernels.

Words are tuples of nonzero ints: ``k`` stands for a_k and ``-k`` for its
inverse.  The compiled module ``_kernels`` implements the same three
functions with the same algorithm, so results agree letter for letter.
"""
from __future__ import annotations

from typing import Sequence

_TABLES: dict[int, dict[tuple[int, int], int]] = {}


def free_reduce(letters: Sequence[int]) -> tuple:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def apply_images(images: Sequence[tuple], word: Sequence[int]) -> tuple:
    """Image of ``word`` under the endomorphism a_k -> images[k-1]."""
    out: list[int] = []
    for x in word:
        img = images[x - 1] if x > 0 else [-y for y in reversed(images[-x - 1])]
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def _relators(g: int) -> tuple:
    r = tuple(x for i in range(1, g + 1) for x in (i, i))
    return r, tuple(-x for x in reversed(r))


def _pair_table(g: int) -> dict[tuple[int, int], int]:
    tab = _TABLES.get(g)
    if tab is None:
        tab = {}
        n = 2 * g
        for ri, rel in enumerate(_relators(g)):
            for p in range(n):
                tab[(rel[p], rel[(p + 1) % n])] = ri * n + p
        _TABLES[g] = tab
    return tab


def dehn_reduce(word: Sequence[int], g: int) -> tuple:
    """Dehn's algorithm for a_1^2...a_g^2.

    Any subword longer than g that is a cyclic subword of the relator or its
    inverse is replaced by the inverse of the complementary piece.  Scans
    restart a relator length to the left after each step and the whole word
    is rescanned until no step applies.
    """
    rels = _relators(g)
    tab = _pair_table(g)
    n = 2 * g
    w = list(free_reduce(word))
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(w) - g:
            code = tab.get((w[i], w[i + 1]))
            if code is not None:
                rel = rels[code // n]
                p = code % n
                L = 2
                while i + L < len(w) and L < n and w[i + L] == rel[(p + L) % n]:
                    L += 1
                if L > g:
                    rep = [-rel[(p + n - 1 - k) % n] for k in range(n - L)]
                    w = list(free_reduce(w[:i] + rep + w[i + L:]))
                    changed = True
                    i = max(0, i - n)
                    continue
            i += 1
    return tuple(w)
