"""Structured statements about the level 2 subgroup and its involution generators."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from .curves import CurveSpec, alpha, alpha_bar, alpha_bar4
from .homology import BRUTEFORCE_MAX_GENUS
from .generators import GenWord, Token, gw, gw_inv, gw_text

KINDS = ("MapEquality", "CurveImage", "InvolutionClaim", "MembershipClaim",
         "CountClaim", "MatrixClaim")


@dataclass(frozen=True)
class Statement:
    """One checkable claim at a fixed genus.

    For ``CurveImage`` the pairs in ``curves`` are ``(source, target, reversed)``;
    ``reversed`` asks for the image to be the target with opposite orientation.
    """

    id: str
    genus: int
    kind: str
    lhs: GenWord = ()
    rhs: GenWord = ()
    curves: tuple = ()
    as_printed: bool = False
    spelling: str = ""
    note: str = ""

    @property
    def family(self) -> str:
        return self.id.split("[", 1)[0].split("~", 1)[0]

    def text(self) -> str:
        if self.kind == "MapEquality":
            return f"{gw_text(self.lhs)} = {gw_text(self.rhs)}"
        if self.kind == "CurveImage":
            parts = []
            for src, tgt, rev in self.curves:
                parts.append(f"{src.label()} -> {tgt.label()}{'^-1' if rev else ''}")
            return f"{gw_text(self.lhs)}: " + ", ".join(parts)
        if self.kind == "InvolutionClaim":
            return f"({gw_text(self.lhs)})^2 = 1"
        if self.kind == "MembershipClaim":
            return f"{gw_text(self.lhs)} is level 2"
        return self.note


def _t(name: str, *idx: int, e: int = 1) -> Token:
    return Token(name, tuple(idx), e)


def Yb(i: int, j: int, e: int = 1) -> Token:
    return _t("Ybar", i, j, e=e)


def Yp(i: int, j: int, e: int = 1) -> Token:
    return _t("Y", i, j, e=e)


R = _t("R")


def Ymix(j: int, k: int, e: int = 1) -> Token:
    return _t("Ymix", j, k, e=e)


def Tb2(i: int, j: int, k: int) -> GenWord:
    return gw(("Tbar4", (1, i, j, k), 2))


def T2(*idx: int) -> GenWord:
    return gw(("T", idx, 2))


def conj(p: GenWord, x: GenWord) -> GenWord:
    """p x p^-1"""
    return tuple(p) + tuple(x) + gw_inv(p)


def chain_lt(i: int, j: int) -> GenWord:
    """Ybar(i+1,j)^-1 ... Ybar(j-1,j)^-1"""
    return tuple(Yb(m, j, -1) for m in range(i + 1, j))


def chain_gt(i: int, j: int) -> GenWord:
    """Ybar(i-1,j) ... Ybar(j+1,j), used for i > j."""
    return tuple(Yb(m, j) for m in range(i - 1, j, -1))


def chain_gt_printed(i: int, j: int) -> GenWord:
    """Literal Ybar(i,j-1) ... Ybar(i,i+1); empty whenever i > j."""
    return tuple(Yb(i, m) for m in range(j - 1, i, -1))


def reflection_chain(i: int, g: int) -> GenWord:
    """T(i+1,i+2) ... T(g-1,g)"""
    return tuple(_t("T", m, m + 1) for m in range(i + 1, g))


def l2_short(g: int) -> GenWord:
    return tuple(Yb(i, g) for i in range(g - 1, 0, -1))


def l2_long(g: int) -> GenWord:
    out: list = []
    for i in range(g - 1, 0, -1):
        out.extend(conj(gw_inv(reflection_chain(i, g)), (Yp(i, i + 1),)))
    return tuple(out)


def ymix_formula(j: int, k: int, g: int) -> GenWord:
    """Ymix(j,k) in terms of slides of crosscaps 1..g-1."""
    if k < g:
        return (Yb(k, j),)
    head = tuple(Yb(m, g) for m in range(1, g))
    tail = tuple(Yb(m, j) for m in range(g - 1, 0, -1) if m != j)
    return head + tail


def sign(i: int) -> int:
    """Exponent of Ybar(i,g) in the first item of the involution list."""
    return 1 if i % 2 == 1 else -1


# ---------------------------------------------------------------------------
# involution generating set

@dataclass(frozen=True)
class Member:
    label: str
    word: GenWord


@dataclass(frozen=True)
class GeneratingSetSpec:
    genus: int
    parity: str
    members: tuple
    expected_count: int

    def index(self, label: str) -> int:
        for n, m in enumerate(self.members):
            if m.label == label:
                return n
        raise KeyError(label)


def expected_count(g: int) -> int:
    return comb(g, 2) + comb(g, 3)


def member3(i: int, j: int, k: int, e: int = -1) -> GenWord:
    return (R, Yb(1, i), Ymix(j, k, e)) + Tb2(i, j, k)


def involution_set(g: int) -> GeneratingSetSpec:
    if g < 4:
        raise ValueError("genus must be >= 4")
    odd = g % 2 == 1
    if odd and g < 5:
        raise ValueError("odd genus must be >= 5")
    ms: list[Member] = []
    if not odd:
        ms.append(Member("R", (R,)))
    top = g - 1 if odd else g - 2
    for i in range(1, top + 1):
        e = sign(i)
        ms.append(Member(f"R*Ybar({i},{g}){'^-1' if e < 0 else ''}", (R, Yb(i, g, e))))
    for i in range(1, g):
        for j in range(1, g):
            if i != j:
                ms.append(Member(f"R*Ybar({i},{j})", (R, Yb(i, j))))
    for i, j, k in combinations(range(2, g + 1), 3):
        ms.append(Member(f"R*Ybar(1,{i})*Ymix({j},{k})^-1*Tbar4(1,{i},{j},{k})^2",
                         member3(i, j, k)))
    return GeneratingSetSpec(g, "odd" if odd else "even", tuple(ms), expected_count(g))


# ---------------------------------------------------------------------------
# regeneration: words over the members

class Regenerator:
    """Expresses derived elements as words ``((member index, exponent), ...)``."""

    def __init__(self, g: int):
        self.g = g
        self.spec = involution_set(g)
        self.odd = self.spec.parity == "odd"

    def _m(self, label: str, e: int = 1) -> tuple:
        return ((self.spec.index(label), e),)

    @staticmethod
    def inv(w: tuple) -> tuple:
        return tuple((n, -e) for n, e in reversed(w))

    def R(self) -> tuple:
        g = self.g
        if not self.odd:
            return self._m("R")
        out: tuple = ()
        for i in range(g - 1, 0, -1):
            out += self._m(f"R*Ybar({i},{g}){'^-1' if sign(i) < 0 else ''}")
        return out

    def ybar(self, a: int, b: int) -> tuple:
        g = self.g
        if a == g:
            return self.ymix(b, g)
        if b != g:
            return self.R() + self._m(f"R*Ybar({a},{b})")
        if self.odd or a <= g - 2:
            m = self._m(f"R*Ybar({a},{g}){'^-1' if sign(a) < 0 else ''}")
            return self.R() + m if sign(a) > 0 else m + self.R()
        # even genus, a = g-1: Ybar(g-1,g) = R (Ybar(g-2,g) ... Ybar(1,g))^-1
        rest: tuple = ()
        for m in range(g - 2, 0, -1):
            rest += self.ybar(m, g)
        return self.R() + self.inv(rest)

    def ymix(self, j: int, k: int) -> tuple:
        out: tuple = ()
        for t in ymix_formula(j, k, self.g):
            w = self.ybar(*t.idx)
            out += w if t.exp > 0 else self.inv(w)
        return out

    def tbar2(self, i: int, j: int, k: int) -> tuple:
        """Tbar4(1,i,j,k)^2 = Ymix(j,k)^-1 Ybar(1,i)^-1 R M."""
        m = self._m(f"R*Ybar(1,{i})*Ymix({j},{k})^-1*Tbar4(1,{i},{j},{k})^2")
        return self.ymix(j, k) + self.inv(self.ybar(1, i)) + self.R() + m

    def _expand_ybars(self, w: GenWord) -> tuple:
        out: tuple = ()
        for t in w:
            x = self.ybar(*t.idx)
            out += x if t.exp > 0 else self.inv(x)
        return out

    def hs_y(self, i: int, j: int) -> tuple:
        """Y(i;j) for i <= g-1."""
        if abs(i - j) == 1:
            return self.ybar(i, j)
        c = self._expand_ybars(chain_lt(i, j) if i < j else chain_gt(i, j))
        return self.inv(c) + self.ybar(i, j) + c

    def hs_t2(self, j: int, k: int, l: int) -> tuple:
        c = self._expand_ybars(chain_lt(j, k))
        return self.inv(c) + self.tbar2(j, k, l) + c

    def to_genword(self, w: tuple) -> GenWord:
        out: list = []
        for n, e in w:
            word = self.spec.members[n].word
            out.extend(word if e > 0 else gw_inv(word))
        return tuple(out)

    def text(self, w: tuple) -> str:
        return " * ".join(f"M{n + 1}" + ("^-1" if e < 0 else "") for n, e in w) or "1"


def hs_generators(g: int) -> list:
    """Generator names of the minimal generating set: ('Y', i, j) and ('T2', j, k, l)."""
    out = [("Y", i, j) for i in range(1, g) for j in range(1, g + 1) if i != j]
    out += [("T2", j, k, l) for j, k, l in combinations(range(2, g + 1), 3)]
    return out


def hs_label(h: tuple) -> str:
    return f"Y({h[1]};{h[2]})" if h[0] == "Y" else f"T({1},{h[1]},{h[2]},{h[3]})^2"


def regenerate_hs(g: int) -> dict:
    rg = Regenerator(g)
    out = {}
    for h in hs_generators(g):
        out[h] = rg.hs_y(h[1], h[2]) if h[0] == "Y" else rg.hs_t2(*h[1:])
    return out


def hs_genword(h: tuple) -> GenWord:
    return (Yp(h[1], h[2]),) if h[0] == "Y" else T2(1, *h[1:])


# ---------------------------------------------------------------------------
# minimality: mod-2 exponent classes of members over the minimal generators

def token_class(t: Token, g: int, col: dict) -> int:
    """Bitmask of the mod-2 class of one generator token."""
    if t.name == "R":
        return _xor(token_class(x, g, col) for x in l2_short(g))
    if t.name in ("Ybar", "Y"):
        i, j = t.idx
        if i == g:
            return token_class(Ymix(j, g), g, col)
        return 1 << col[("Y", i, j)]
    if t.name == "Ymix":
        return _xor(token_class(x, g, col) for x in ymix_formula(*t.idx, g))
    if t.name == "Tbar4":
        # only even powers occur; count the square once per two tokens
        return 1 << col[("T2",) + t.idx[1:]]
    raise ValueError(f"no class for {t.text()}")


def _xor(it) -> int:
    v = 0
    for x in it:
        v ^= x
    return v


def word_class(w: GenWord, g: int, col: dict) -> int:
    v = 0
    tb = 0
    for t in w:
        if t.name == "Tbar4":
            tb += 1
            if tb % 2 == 0:
                v ^= token_class(t, g, col)
        else:
            v ^= token_class(t, g, col)
    return v


def minimality_rows(g: int, members: Optional[tuple] = None) -> tuple[list, list]:
    gens = hs_generators(g)
    col = {h: n for n, h in enumerate(gens)}
    if members is None:
        members = involution_set(g).members
    return [word_class(m.word, g, col) for m in members], gens


# ---------------------------------------------------------------------------
# the catalog

def catalog(g: int) -> list[Statement]:
    if g < 4:
        raise ValueError("genus must be >= 4")
    S: list[Statement] = []
    add = S.append
    ME, CI = "MapEquality", "CurveImage"

    for i in range(1, g):
        add(Statement(f"LemY.adj[i={i},j={i + 1}]", g, ME, (Yb(i, i + 1),), (Yp(i, i + 1),), spelling="Y(i,j)"))
        add(Statement(f"LemY.adj[i={i + 1},j={i}]", g, ME, (Yb(i + 1, i),), (Yp(i + 1, i),), spelling="Y(i,j)"))
    for i in range(1, g - 1):
        add(Statement(f"LemY.fig1[i={i}]", g, CI, (Yb(i + 1, i + 2, -1),),
                      curves=((alpha(i, g=g), alpha(i, g=g), False),
                              (alpha(i, i + 2, g=g), alpha_bar(i, i + 2, g=g), False))))
        add(Statement(f"LemY.fig3[i={i}]", g, CI, (Yb(i + 1, i),),
                      curves=((alpha(i + 2, g=g), alpha(i + 2, g=g), False),
                              (alpha(i, i + 2, g=g), alpha_bar(i, i + 2, g=g), False))))
        add(Statement(f"LemY.conj.gt2[i={i}]", g, ME, (Yb(i + 2, i),),
                      conj((Yb(i + 1, i),), (Yp(i + 2, i),)), spelling="Y(i,j)"))
    for i in range(1, g - 2):
        add(Statement(f"LemY.fig2[i={i}]", g, CI, (Yb(i + 1, i + 3, -1), Yb(i + 2, i + 3, -1)),
                      curves=((alpha(i, g=g), alpha(i, g=g), False),
                              (alpha(i, i + 3, g=g), alpha_bar(i, i + 3, g=g), False))))
        add(Statement(f"LemY.conj.lt3[i={i}]~printed", g, ME, (Yb(i, i + 3),),
                      conj(chain_lt(i, i + 3), (Yp(i, i + 2),)), as_printed=True, spelling="Y(i,j)",
                      note="middle factor printed with second index i+2"))
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if abs(i - j) < 2:
                continue
            if i < j:
                if i <= g - 1:
                    add(Statement(f"LemY.conj.lt[i={i},j={j}]", g, ME, (Yb(i, j),),
                                  conj(chain_lt(i, j), (Yp(i, j),)), spelling="Y(i,j)"))
                add(Statement(f"Eq1.lt[i={i},j={j}]", g, ME, (Yp(i, j),),
                              conj(gw_inv(chain_lt(i, j)), (Yb(i, j),)), spelling="Y(i,j)"))
            else:
                add(Statement(f"LemY.conj.gt[i={i},j={j}]", g, ME, (Yb(i, j),),
                              conj(chain_gt(i, j), (Yp(i, j),)), spelling="Y(i,j)",
                              note="conjugating chain Ybar(i-1,j)...Ybar(j+1,j)"))
                add(Statement(f"LemY.conj.gt[i={i},j={j}]~printed", g, ME, (Yb(i, j),),
                              conj(chain_gt_printed(i, j), (Yp(i, j),)), as_printed=True,
                              spelling="Y(i,j)", note="printed chain is empty for i > j"))
                add(Statement(f"Eq1.gt[i={i},j={j}]", g, ME, (Yp(i, j),),
                              conj(gw_inv(chain_gt(i, j)), (Yb(i, j),)), spelling="Y(i,j)"))
                printed = tuple(t.inv() for t in chain_gt_printed(i, j))
                add(Statement(f"Eq1.gt[i={i},j={j}]~printed", g, ME, (Yp(i, j),),
                              conj(gw_inv(printed), (Yb(i, j),)), as_printed=True,
                              spelling="Y(i,j)", note="printed chain is empty for i > j"))

    for i, j, k in combinations(range(2, g + 1), 3):
        tag = f"i={i},j={j},k={k}"
        F = chain_lt(i, j)
        add(Statement(f"T1.transport[{tag}]", g, CI, F,
                      curves=((alpha(1, i, j, k, g=g), alpha_bar4(i, j, k, g=g), False),)))
        add(Statement(f"T1.decomp[{tag}]", g, ME, Tb2(i, j, k), conj(F, T2(1, i, j, k))))
        add(Statement(f"L4.curve[{tag}]", g, CI, (R,),
                      curves=((alpha_bar(1, i, g=g), alpha_bar(1, i, g=g), True),
                              (alpha_bar(j, k, g=g), alpha_bar(j, k, g=g), True),
                              (alpha(i, g=g), alpha(i, g=g), True),
                              (alpha(k, g=g), alpha(k, g=g), True))))
        add(Statement(f"L4.conj[{tag}]", g, ME, (R, Yb(1, i), Ymix(j, k, -1), R),
                      (Yb(1, i, -1), Ymix(j, k))))
        add(Statement(f"L4.comm[{tag}]", g, ME, (Yb(1, i, -1), Ymix(j, k)),
                      (Ymix(j, k), Yb(1, i, -1))))
        add(Statement(f"L4.rev[{tag}]", g, CI, (R, Yb(1, i), Ymix(j, k, -1)),
                      curves=((alpha_bar4(i, j, k, g=g), alpha_bar4(i, j, k, g=g), True),)))
        add(Statement(f"L4.invol[{tag}]", g, "InvolutionClaim", member3(i, j, k, -1)))
        add(Statement(f"L4.invol[{tag}]~printed", g, "InvolutionClaim", member3(i, j, k, 1),
                      as_printed=True, note="slide exponent +1 as in the statement"))
        add(Statement(f"P1.member[{tag}]", g, "MembershipClaim", member3(i, j, k, 1)))

    for j in range(1, g + 1):
        for k in range(j + 1, g + 1):
            add(Statement(f"P1.decomp[j={j},k={k}]", g, ME, (Ymix(j, k),), ymix_formula(j, k, g)))

    add(Statement("L2.short", g, ME, (R,), l2_short(g)))
    add(Statement("L2.long-vs-short", g, ME, l2_long(g), l2_short(g)))
    add(Statement("L2.member", g, "MembershipClaim", (R,)))
    add(Statement("L2.invol", g, "InvolutionClaim", (R,)))
    for i in range(1, g):
        C = reflection_chain(i, g)
        add(Statement(f"L2.conj[i={i}]", g, ME, (Yb(i, g),), conj(gw_inv(C), (Yp(i, i + 1),)),
                      spelling="Y(i,j)"))
        add(Statement(f"L2.curve[i={i}]", g, CI, gw_inv(C),
                      curves=((alpha(i, g=g), alpha(i, g=g), False),
                              (alpha(i, i + 1, g=g), alpha_bar(i, g, g=g), False))))
        if i > 1:
            add(Statement(f"L2.curve[i={i}]~printed", g, CI, gw_inv(C),
                          curves=((alpha(i, g=g), alpha(i, g=g), False),
                                  (alpha(i, i + 1, g=g), alpha_bar(1, g, g=g), False)),
                          as_printed=True, note="target printed as abar{1,g}"))

    for i in range(1, g):
        for j in range(1, g + 1):
            if i == j:
                continue
            for e in (1, -1):
                add(Statement(f"L3.invol[i={i},j={j},e={'+' if e > 0 else '-'}]", g,
                              "InvolutionClaim", (R, Yb(i, j, e))))
            add(Statement(f"L3.curve[i={i},j={j}]", g, CI, (R,),
                          curves=((alpha(i, g=g), alpha(i, g=g), True),
                                  (alpha_bar(min(i, j), max(i, j), g=g),
                                   alpha_bar(min(i, j), max(i, j), g=g), True))))

    odd = g % 2 == 1
    if not odd or g >= 5:
        spec = involution_set(g)
        fam = "T2.odd" if odd else "T2.even"
        for n, m in enumerate(spec.members):
            add(Statement(f"{fam}[{n + 1:03d}]", g, "InvolutionClaim", m.word, note=m.label))
        add(Statement("Count", g, "CountClaim", note=f"{len(spec.members)} members, "
                      f"C({g},2)+C({g},3) = {spec.expected_count}"))
        rg = Regenerator(g)
        if odd:
            rhs = tuple(t for i in range(g - 1, 0, -1) for t in (R, Yb(i, g, sign(i))))
            add(Statement("T2.regen.odd", g, ME, (R,), rhs))
        else:
            lhs = (R, R, Yb(g - 2, g))
            for m in range(g - 3, 0, -1):
                lhs += (R, Yb(m, g, 1 if (g - 2 - m) % 2 == 0 else -1))
            add(Statement("T2.regen.even~printed", g, ME, lhs, tuple(Yb(m, g) for m in range(g - 2, 0, -1)),
                          as_printed=True, note="alternating signs starting from Ybar(g-2,g)"))
            add(Statement("T2.regen.even", g, ME, (Yb(g - 1, g),), rg.to_genword(rg.ybar(g - 1, g))))
        for h, w in regenerate_hs(g).items():
            add(Statement(f"T2.regen.hs[{hs_label(h)}]", g, ME, hs_genword(h), rg.to_genword(w),
                          spelling="Y(i;j)" if h[0] == "Y" else "", note=rg.text(w)))
        add(Statement("Minimality", g, "MatrixClaim", note="minimality"))
    if g <= BRUTEFORCE_MAX_GENUS:
        add(Statement("Surjectivity", g, "MatrixClaim", note="surjectivity"))
    S.sort(key=lambda s: s.id)
    return S
