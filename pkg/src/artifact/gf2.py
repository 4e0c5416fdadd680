"""Square matrices over GF(2) stored as tuples of column bitmasks."""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

Matrix = tuple  # tuple of g ints; column j is the image of basis vector j


def identity(g: int) -> Matrix:
    return tuple(1 << j for j in range(g))


def apply(m: Matrix, v: int) -> int:
    out = 0
    j = 0
    while v:
        if v & 1:
            out ^= m[j]
        v >>= 1
        j += 1
    return out


def mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix of a after b."""
    return tuple(apply(a, col) for col in b)


def transpose(m: Matrix) -> Matrix:
    g = len(m)
    return tuple(sum(((m[j] >> i) & 1) << j for j in range(g)) for i in range(g))


def pairing(u: int, v: int) -> int:
    return bin(u & v).count("1") & 1


def is_isometry(m: Matrix) -> bool:
    g = len(m)
    return all(pairing(m[i], m[j]) == (i == j) for i in range(g) for j in range(i, g))


def transvection(c: int, g: int) -> Matrix:
    if pairing(c, c):
        raise ValueError("transvection needs a class with <c,c> = 0")
    return tuple((1 << j) ^ (c if (c >> j) & 1 else 0) for j in range(g))


def rank(rows: Iterable[int]) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


def to_rows(m: Matrix) -> list[list[int]]:
    g = len(m)
    return [[(m[j] >> i) & 1 for j in range(g)] for i in range(g)]


def isometry_count(g: int) -> int:
    """Count M with M^T M = I by choosing orthonormal columns one at a time."""
    vectors = [v for v in range(1 << g) if pairing(v, v) == 1]

    def extend(chosen: list[int]) -> int:
        if len(chosen) == g:
            return 1
        total = 0
        for v in vectors:
            if all(pairing(v, c) == 0 for c in chosen) and rank(chosen + [v]) == len(chosen) + 1:
                chosen.append(v)
                total += extend(chosen)
                chosen.pop()
        return total

    return extend([])


def closure_order(gens: Sequence[Matrix], limit: int = 10 ** 7) -> int:
    """Order of the group generated by ``gens`` (breadth-first closure)."""
    if not gens:
        return 1
    start = identity(len(gens[0]))
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for s in gens:
            n = mul(s, m)
            if n not in seen:
                seen.add(n)
                if len(seen) > limit:
                    raise RuntimeError("closure exceeded limit")
                queue.append(n)
    return len(seen)
