"""Named curves in the disk-with-crosscaps model.

A curve is recorded by the crosscaps it passes through, in order, and for
every crosscap strictly between two consecutive passages whether the strand
runs over it or under it.  The fundamental group word reads a_m at each
passage and a_m^2 at each Under crosscap.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

OVER, UNDER = "Over", "Under"


@dataclass(frozen=True)
class CurveSpec:
    family: str                  # Alpha | AlphaBar | AlphaBar4 | Generic
    params: tuple
    genus: int
    passages: tuple              # ((m, None) for a passage, (m, tag) in between)

    @property
    def crosscaps(self) -> tuple:
        return tuple(m for m, tag in self.passages if tag is None)

    @property
    def two_sided(self) -> bool:
        return len(self.crosscaps) % 2 == 0

    def label(self) -> str:
        idx = ",".join(str(i) for i in self.params)
        return {"Alpha": "alpha", "AlphaBar": "abar", "AlphaBar4": "abar4"}.get(
            self.family, "curve") + "{" + idx + "}"

    __str__ = label


def _passages(points: Sequence[int], under_gaps: Sequence[bool]) -> tuple:
    out = []
    for t, m in enumerate(points):
        out.append((m, None))
        if t + 1 < len(points):
            tag = UNDER if under_gaps[t] else OVER
            out.extend((x, tag) for x in range(m + 1, points[t + 1]))
    return tuple(out)


def make_curve(family: str, params: Sequence[int], g: int) -> CurveSpec:
    params = tuple(int(p) for p in params)
    if family == "Alpha":
        pts = params
        if not pts or any(b <= a for a, b in zip(pts, pts[1:])) or pts[0] < 1 or pts[-1] > g:
            raise ValueError(f"Alpha needs strictly increasing indices in 1..{g}")
        return CurveSpec(family, pts, g, _passages(pts, [False] * len(pts)))
    if family == "AlphaBar":
        if len(params) != 2 or not 1 <= params[0] < params[1] <= g:
            raise ValueError(f"AlphaBar(i,j) needs 1 <= i < j <= {g}")
        return CurveSpec(family, params, g, _passages(params, [True]))
    if family == "AlphaBar4":
        if len(params) != 4 or params[0] != 1 or not 1 < params[1] < params[2] < params[3] <= g:
            raise ValueError(f"AlphaBar4(1,i,j,k) needs 1 < i < j < k <= {g}")
        # below the crosscaps between i and j only; this is the curve carried
        # from alpha{1,i,j,k} by the slides of those crosscaps
        return CurveSpec(family, params, g, _passages(params, [False, True, False]))
    raise ValueError(f"unknown curve family {family!r}")


def generic_curve(passages: Sequence[tuple], g: int) -> CurveSpec:
    passages = tuple((int(m), tag) for m, tag in passages)
    for m, tag in passages:
        if not 1 <= m <= g or tag not in (None, OVER, UNDER):
            raise ValueError("bad passage entry")
    return CurveSpec("Generic", tuple(m for m, t in passages if t is None), g, passages)


def alpha(*idx: int, g: int) -> CurveSpec:
    return make_curve("Alpha", idx, g)


def alpha_bar(i: int, j: int, g: int) -> CurveSpec:
    return make_curve("AlphaBar", (i, j), g)


def alpha_bar4(i: int, j: int, k: int, g: int) -> CurveSpec:
    return make_curve("AlphaBar4", (1, i, j, k), g)


def curve_word(spec: CurveSpec) -> tuple:
    w = []
    for m, tag in spec.passages:
        if tag is None:
            w.append(m)
        elif tag == UNDER:
            w.extend((m, m))
    return tuple(w)


def mod2_class(spec: CurveSpec) -> int:
    """Bitmask over x_1..x_g (bit m-1 for crosscap m)."""
    v = 0
    for m in spec.crosscaps:
        v ^= 1 << (m - 1)
    return v


def int_class(spec: CurveSpec) -> tuple:
    from .group import context
    return context(spec.genus).homology_class(curve_word(spec))
