"""Mapping classes of N_g as automorphisms of the surface group.

Every generator is first built as an automorphism of the free group
F_g = pi_1 of N_g minus a disk, fixing the boundary word a_1^2...a_g^2
exactly; it then descends to pi_1(N_g).  Images are stored Dehn reduced
together with the images of the inverse map.  Composition is functional:
``f * h`` applies h first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import gf2
from .curves import CurveSpec, alpha, curve_word, make_curve, mod2_class
from .group import NO, UNDECIDED, YES, ConjugacyResult, GroupContext, context, DEFAULT_BUDGET
from .kernels import apply_images, dehn_reduce, free_reduce
from .words import Word, abelianize, cyclic_free_reduce, inverse, mul


# ---------------------------------------------------------------------------
# free-group automorphisms (tuples of images)

def _ident(g: int) -> tuple:
    return tuple((i,) for i in range(1, g + 1))


def _comp(f: tuple, h: tuple) -> tuple:
    return tuple(apply_images(f, im) for im in h)


def _local(g: int, k: int, fx: Sequence[int], fy: Sequence[int]) -> tuple:
    """Embed a two-generator formula (x = a_k, y = a_{k+1})."""
    sub = {1: k, 2: k + 1, -1: -k, -2: -k - 1}
    f = list(_ident(g))
    f[k - 1] = tuple(sub[x] for x in fx)
    f[k] = tuple(sub[x] for x in fy)
    return tuple(f)


# Slide of crosscap k along a_k a_{k+1} in the holed Klein bottle, its
# inverse, and the twist along a_k a_{k+1} (ribbon orientation).
_Y = ((-2, -1, 2), (-2, 1, 1, 2, 2))
_Y_INV = ((1, 1, 2, -1, -2, -1, -1), (1, 1, 2))
_TW = ((1, 1, 2), (-2, -1, 2))
_TW_INV = ((1, -2, -1), (1, 2, 2))


def _ribbon_twist(g: int, idx: Sequence[int], inverse_map: bool = False) -> tuple:
    """Twist along a_{i1}...a_{ik} with all in-between crosscaps passed over."""
    I = sorted(idx)
    c = tuple(I)
    k = len(I)
    outer, outer_inv = (c, inverse(c)) if inverse_map else (inverse(c), c)
    f = list(_ident(g))
    for t, m in enumerate(I):
        rot = c[t:] + c[:t]
        e = 1 if t % 2 == 0 else -1
        if inverse_map:
            e = -e
        f[m - 1] = mul(outer, rot if e == 1 else inverse(rot), (m,), outer_inv)
        if t + 1 < k:
            rot2 = c[t + 1:] + c[:t + 1]
            e2 = 1 if (t + 1) % 2 == 0 else -1
            if inverse_map:
                e2 = -e2
            R = rot2 if e2 == 1 else inverse(rot2)
            for mm in range(m + 1, I[t + 1]):
                f[mm - 1] = mul(outer, R, (mm,), inverse(R), outer_inv)
    return tuple(f)


@dataclass(frozen=True)
class FreeAut:
    """Automorphism of F_g with its inverse, composed without Dehn reduction."""

    f: tuple
    fi: tuple

    def __mul__(self, other: "FreeAut") -> "FreeAut":
        return FreeAut(_comp(self.f, other.f), _comp(other.fi, self.fi))

    def inv(self) -> "FreeAut":
        return FreeAut(self.fi, self.f)

    def __pow__(self, n: int) -> "FreeAut":
        g = len(self.f)
        r = FreeAut(_ident(g), _ident(g))
        b = self if n >= 0 else self.inv()
        for _ in range(abs(n)):
            r = r * b
        return r

    def conj(self, p: "FreeAut") -> "FreeAut":
        return p * self * p.inv()


def _id_aut(g: int) -> FreeAut:
    return FreeAut(_ident(g), _ident(g))


def local_aut(g: int, k: int, fwd: tuple, bwd: tuple) -> FreeAut:
    return FreeAut(_local(g, k, *fwd), _local(g, k, *bwd))


def ribbon_twist(g: int, idx: Sequence[int]) -> FreeAut:
    return FreeAut(_ribbon_twist(g, idx), _ribbon_twist(g, idx, True))


def transposition(g: int, k: int) -> FreeAut:
    """Crosscap k+1 moves to position k, crosscap k moves over it."""
    fwd = list(_ident(g))
    fwd[k - 1] = (k + 1,)
    fwd[k] = (-k - 1, -k - 1, k, k + 1, k + 1)
    bwd = list(_ident(g))
    bwd[k - 1] = (k, k, k + 1, -k, -k)
    bwd[k] = (k,)
    return FreeAut(tuple(fwd), tuple(bwd))


def fixes_boundary(a: FreeAut) -> bool:
    g = len(a.f)
    r = tuple(x for i in range(1, g + 1) for x in (i, i))
    img = cyclic_free_reduce(apply_images(a.f, r))[1]
    for target in (r, inverse(r)):
        if len(img) == len(target) and any(img[k:] + img[:k] == target for k in range(len(img))):
            return True
    return False


# ---------------------------------------------------------------------------
# mapping classes

class MappingClass:
    """Outer class of an automorphism of pi_1(N_g)."""

    __slots__ = ("g", "images", "inv_images", "_m2", "_mz", "name")

    def __init__(self, g: int, images: Sequence[Word], inv_images: Sequence[Word], name: str = ""):
        self.g = g
        self.images = tuple(dehn_reduce(w, g) for w in images)
        self.inv_images = tuple(dehn_reduce(w, g) for w in inv_images)
        self._m2 = None
        self._mz = None
        self.name = name

    @classmethod
    def from_free(cls, a: FreeAut, name: str = "") -> "MappingClass":
        if not fixes_boundary(a):
            raise ValueError("malformed automorphism: relator not preserved")
        return cls(len(a.f), a.f, a.fi, name)

    @classmethod
    def identity(cls, g: int) -> "MappingClass":
        return cls(g, _ident(g), _ident(g), "1")

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(self.g, _comp(self.images, other.images),
                            _comp(other.inv_images, self.inv_images))

    def inv(self) -> "MappingClass":
        return MappingClass(self.g, self.inv_images, self.images)

    def __pow__(self, n: int) -> "MappingClass":
        r = MappingClass.identity(self.g)
        b = self if n >= 0 else self.inv()
        for _ in range(abs(n)):
            r = r * b
        return r

    def apply(self, w: Sequence[int]) -> Word:
        return dehn_reduce(apply_images(self.images, w), self.g)

    # induced homology
    def mod2(self) -> gf2.Matrix:
        if self._m2 is None:
            cols = []
            for im in self.images:
                v = 0
                for x in im:
                    v ^= 1 << (abs(x) - 1)
                cols.append(v)
            self._m2 = tuple(cols)
        return self._m2

    def integral(self) -> tuple:
        if self._mz is None:
            self._mz = tuple(tuple(abelianize(im, self.g)) for im in self.images)
        return self._mz


def compose(f: MappingClass, h: MappingClass) -> MappingClass:
    return f * h


def invert(f: MappingClass) -> MappingClass:
    return f.inv()


def power(f: MappingClass, n: int) -> MappingClass:
    return f ** n


# ---------------------------------------------------------------------------
# integral matrices modulo the relation lattice Z(2,...,2)

def int_canon(v: Sequence[int]) -> tuple:
    s = v[0] // 2
    return tuple(x - 2 * s for x in v)


def int_apply(m: Sequence[Sequence[int]], v: Sequence[int]) -> tuple:
    g = len(m)
    return tuple(sum(m[j][i] * v[j] for j in range(g)) for i in range(g))


def int_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple:
    """Column-wise product a*b, columns canonicalized (a preserves the relation lattice)."""
    g = len(a)
    out = []
    for col in b:
        acc = [0] * g
        for k, c in enumerate(col):
            if c:
                ak = a[k]
                for i in range(g):
                    acc[i] += c * ak[i]
        out.append(int_canon(acc))
    return tuple(out)


def int_equal(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return all(int_canon(x) == int_canon(y) for x, y in zip(a, b))


def int_identity(g: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for i in range(g)) for j in range(g))


# ---------------------------------------------------------------------------
# the engine: named mapping classes at a fixed genus

@dataclass
class Verdict:
    status: str                    # yes | no | undecided
    witness: Optional[Word] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == YES


class Engine:
    """Builds and caches the named mapping classes of N_g."""

    def __init__(self, g: int, seed: int = 0):
        self.g = g
        self.ctx: GroupContext = context(g, seed)
        self._free: dict = {}
        self._mc: dict = {}

    # -- free-level building blocks -----------------------------------
    def _memo(self, key, build):
        v = self._free.get(key)
        if v is None:
            v = build()
            self._free[key] = v
        return v

    def base_slide(self, k: int) -> FreeAut:
        return self._memo(("Y1", k), lambda: local_aut(self.g, k, _Y, _Y_INV))

    def base_twist(self, k: int) -> FreeAut:
        return self._memo(("TW", k), lambda: local_aut(self.g, k, _TW, _TW_INV))

    def ribbon(self, idx: tuple) -> FreeAut:
        return self._memo(("Tr", idx), lambda: ribbon_twist(self.g, idx))

    def transport(self, i: int, j: int, under: bool) -> FreeAut:
        """Carries alpha{i,i+1} to alpha{i,j} (over) or abar{i,j} (under), fixing a_i."""
        def build():
            p = _id_aut(self.g)
            for m in range(i + 1, j):
                step = self.ribbon((m, m + 1)) if under else transposition(self.g, m)
                p = step * p
            return p
        return self._memo(("psi", i, j, under), build)

    def free_twist(self, c: CurveSpec) -> FreeAut:
        """Dehn twist along c (left-handed in the ribbon picture)."""
        def build():
            if c.family == "Alpha":
                if len(c.params) % 2:
                    raise ValueError("twist needs a two-sided curve")
                return self.ribbon(c.params).inv()
            if c.family == "AlphaBar":
                i, j = c.params
                base = self.ribbon((i, i + 1)).inv()
                return base.conj(self.transport(i, j, True))
            if c.family == "AlphaBar4":
                _, i, j, k = c.params
                base = self.ribbon((1, i, i + 1, k)).inv()
                p = _id_aut(self.g)
                for m in range(i + 1, j):
                    p = self.ribbon((m, m + 1)) * p
                return base.conj(p)
            raise ValueError("twists are built only for the named curve families")
        return self._memo(("T", c.family, c.params), build)

    def free_slide(self, mu: int, c: CurveSpec) -> FreeAut:
        """Crosscap slide of crosscap mu along a two-crosscap curve c through mu."""
        def build():
            if c.family not in ("Alpha", "AlphaBar") or len(c.params) != 2:
                raise ValueError("crosscap slides are built along two-crosscap curves")
            i, j = c.params
            if mu not in (i, j):
                raise ValueError(f"curve {c} misses crosscap {mu}")
            under = c.family == "AlphaBar" and j - i > 1
            if mu == i:
                return self.base_slide(i).conj(self.transport(i, j, under))
            if not under:
                p = self.transport(i, j, False)
                y = self.base_slide(i).conj(p)
                tw = self.base_twist(i).conj(p)
                return tw.inv() * y * tw
            q = _id_aut(self.g)
            for m in range(i, j - 1):
                q = q * self.ribbon((m, m + 1)).inv()
            return self.free_slide(j, alpha(j - 1, j, g=self.g)).conj(q)
        return self._memo(("Y", mu, c.family, c.params), build)

    # -- mapping classes ------------------------------------------------
    def _mc_memo(self, key, build, name):
        v = self._mc.get(key)
        if v is None:
            v = MappingClass.from_free(build(), name)
            self._mc[key] = v
        return v

    def twist(self, c: CurveSpec) -> MappingClass:
        return self._mc_memo(("T", c.family, c.params), lambda: self.free_twist(c), f"T[{c}]")

    def crosscap_slide(self, mu: int, c: CurveSpec) -> MappingClass:
        return self._mc_memo(("Y", mu, c.family, c.params), lambda: self.free_slide(mu, c),
                             f"Y[{mu};{c}]")

    def curve(self, i: int, j: int, bar: bool) -> CurveSpec:
        a, b = min(i, j), max(i, j)
        return make_curve("AlphaBar" if bar else "Alpha", (a, b), self.g)

    def Y(self, i: int, j: int) -> MappingClass:
        return self.crosscap_slide(i, self.curve(i, j, False))

    def Ybar(self, i: int, j: int) -> MappingClass:
        return self.crosscap_slide(i, self.curve(i, j, True))

    def Ymix(self, j: int, k: int) -> MappingClass:
        return self.crosscap_slide(k, self.curve(j, k, True))

    def T(self, *idx: int) -> MappingClass:
        return self.twist(make_curve("Alpha", sorted(idx), self.g))

    def Tbar4(self, i: int, j: int, k: int) -> MappingClass:
        return self.twist(make_curve("AlphaBar4", (1, i, j, k), self.g))

    def reflection(self) -> MappingClass:
        def build():
            g = self.g
            r = _id_aut(g)
            for i in range(g - 1, 0, -1):
                c = _id_aut(g)
                for m in range(i + 1, g):
                    c = c * self.free_twist(alpha(m, m + 1, g=g))
                y = self.free_slide(i, alpha(i, i + 1, g=g))
                r = r * (c.inv() * y * c)
            return r
        return self._mc_memo(("R",), build, "R")

    # -- equality --------------------------------------------------------
    def equal_mod_inner(self, f: MappingClass, h: MappingClass,
                        budget: int = DEFAULT_BUDGET) -> Verdict:
        if f.mod2() != h.mod2():
            return Verdict(NO, None, "mod-2 actions differ")
        if not int_equal(f.integral(), h.integral()):
            return Verdict(NO, None, "integral actions differ")
        if budget <= 0:
            return Verdict(UNDECIDED, None, "budget exhausted")
        d = f * h.inv()
        r = self.ctx.inner_witness(d.images, budget)
        if r.status == YES:
            return Verdict(YES, r.witness, "inner witness")
        return Verdict(r.status, None, "no inner witness" if r.status == NO else "search budget exhausted")

    def is_identity_class(self, f: MappingClass, budget: int = DEFAULT_BUDGET) -> Verdict:
        return self.equal_mod_inner(f, MappingClass.identity(self.g), budget)

    def apply_to_curve(self, f: MappingClass, c) -> Word:
        w = curve_word(c) if isinstance(c, CurveSpec) else tuple(c)
        return f.apply(w)

    def curve_equiv(self, w: Sequence[int], target, budget: int = DEFAULT_BUDGET,
                    oriented: bool = False) -> Verdict:
        t = curve_word(target) if isinstance(target, CurveSpec) else tuple(target)
        if budget <= 0:
            return Verdict(UNDECIDED, None, "budget exhausted")
        r = self.ctx.are_conjugate(t, w, budget) if oriented else \
            self.ctx.curve_equivalent(w, t, budget)
        return Verdict(r.status, r.witness, "conjugacy")
