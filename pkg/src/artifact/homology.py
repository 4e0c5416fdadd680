"""Induced homology actions, level-2 membership and the mod-2 isometry group."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf2
from .mapping import FreeAut, MappingClass, ribbon_twist

BRUTEFORCE_MAX_GENUS = 5


def _bits(c) -> tuple[int, Optional[int]]:
    if isinstance(c, int):
        return c, None
    c = tuple(c)
    if any(x not in (0, 1) for x in c):
        raise ValueError("mod-2 class must be a bit vector")
    return sum(b << i for i, b in enumerate(c)), len(c)


def intersection_mod2(c1, c2) -> int:
    """Pairing <c1, c2> over GF(2); accepts bitmasks or bit vectors."""
    v1, n1 = _bits(c1)
    v2, n2 = _bits(c2)
    if n1 is not None and n2 is not None and n1 != n2:
        raise ValueError("length mismatch")
    return gf2.pairing(v1, v2)


def induced_mod2(f: MappingClass) -> gf2.Matrix:
    m = f.mod2()
    if not gf2.is_isometry(m):
        raise ValueError("malformed automorphism: mod-2 action is not an isometry")
    return m


def induced_int(f: MappingClass) -> tuple:
    return f.integral()


def is_level2(f: MappingClass) -> bool:
    return induced_mod2(f) == gf2.identity(f.g)


def free_mod2(a: FreeAut) -> gf2.Matrix:
    """Mod-2 action of a free automorphism; usable below genus 4."""
    cols = []
    for im in a.f:
        v = 0
        for x in im:
            v ^= 1 << (abs(x) - 1)
        cols.append(v)
    return tuple(cols)


def twist_generators(g: int) -> list[gf2.Matrix]:
    """Mod-2 actions of the twists along alpha{i,i+1} and alpha{1,j,k,l}."""
    idx = [(i, i + 1) for i in range(1, g)]
    idx += [(1, j, k, l) for j in range(2, g + 1) for k in range(j + 1, g + 1)
            for l in range(k + 1, g + 1)]
    return [free_mod2(ribbon_twist(g, I)) for I in idx]


@dataclass(frozen=True)
class IsometryReport:
    genus: int
    order: int
    method: str
    generators: int = 0

    def text(self) -> str:
        extra = f", {self.generators} generators" if self.method == "closure" else ""
        return f"g={self.genus}: order {self.order} ({self.method}{extra})"


def isometry_order(g: int, method: str = "bruteforce",
                   gens: Optional[Sequence[gf2.Matrix]] = None) -> IsometryReport:
    if g < 1:
        raise ValueError("genus must be positive")
    if method == "bruteforce":
        if g > BRUTEFORCE_MAX_GENUS:
            raise ValueError(f"bruteforce enumeration limited to g <= {BRUTEFORCE_MAX_GENUS}")
        return IsometryReport(g, gf2.isometry_count(g), method)
    if method == "closure":
        if gens is None:
            gens = twist_generators(g)
        gens = list(gens)
        if any(len(m) != g for m in gens):
            raise ValueError("generator size does not match genus")
        return IsometryReport(g, gf2.closure_order(gens), method, len(gens))
    raise ValueError(f"unknown method {method!r}")
