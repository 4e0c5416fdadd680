"""Symbolic words in the named generators and their realization."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .curves import alpha, alpha_bar, alpha_bar4, make_curve, mod2_class
from .mapping import Engine, MappingClass, int_identity, int_mul

NAMES = ("Y", "Ybar", "T", "Tbar4", "Ymix", "R")


@dataclass(frozen=True)
class Token:
    name: str
    idx: tuple = ()
    exp: int = 1

    def inv(self) -> "Token":
        return Token(self.name, self.idx, -self.exp)

    def text(self) -> str:
        s = self.name
        if self.idx:
            sep = ";" if self.name == "Y" and len(self.idx) == 2 and getattr(self, "_semi", False) else ","
            s += "(" + sep.join(str(i) for i in self.idx) + ")"
        return s + ("^-1" if self.exp == -1 else "")


GenWord = tuple  # tuple of Token


def gw(*parts) -> GenWord:
    """Build a GenWord from tokens, GenWords and ``(name, idx, exp)`` triples."""
    out: list[Token] = []
    for p in parts:
        if isinstance(p, Token):
            out.append(p)
        elif isinstance(p, tuple) and p and isinstance(p[0], Token):
            out.extend(p)
        elif isinstance(p, tuple) and p == ():
            continue
        else:
            name, idx, e = p
            out.extend([Token(name, tuple(idx), 1 if e > 0 else -1)] * abs(e))
    return tuple(out)


def gw_inv(w: GenWord) -> GenWord:
    return tuple(t.inv() for t in reversed(w))


def gw_text(w: GenWord) -> str:
    return " * ".join(t.text() for t in w) if w else "1"


_TOK = re.compile(r"^\s*([A-Za-z]+)\s*(?:\(([^)]*)\))?\s*(?:\^\s*([+-]?\d+))?\s*$")


def parse_genword(text: str) -> GenWord:
    """Parse ``R * Ybar(1,4)^-1 * T(1,2,3,4)^2``; powers are expanded."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out: list[Token] = []
    for part in text.split("*"):
        m = _TOK.match(part)
        if not m:
            raise ValueError(f"cannot parse generator {part.strip()!r}")
        name, args, e = m.group(1), m.group(2), m.group(3)
        if name == "Tbar":
            name = "Tbar4"
        if name not in NAMES:
            raise ValueError(f"unknown generator {name!r}")
        idx = tuple(int(x) for x in re.split(r"[;,]", args)) if args else ()
        k = int(e) if e is not None else 1
        out.extend([Token(name, idx, 1 if k > 0 else -1)] * abs(k))
    return tuple(out)


def check_token(t: Token, g: int) -> None:
    i = t.idx
    ok = True
    if t.name == "R":
        ok = i == ()
    elif t.name in ("Y", "Ybar"):
        ok = len(i) == 2 and all(1 <= x <= g for x in i) and i[0] != i[1]
    elif t.name == "Ymix":
        ok = len(i) == 2 and 1 <= i[0] < i[1] <= g
    elif t.name == "T":
        ok = len(i) >= 2 and len(i) % 2 == 0 and all(1 <= x <= g for x in i) and len(set(i)) == len(i)
    elif t.name == "Tbar4":
        ok = len(i) == 4 and i[0] == 1 and 1 < i[1] < i[2] < i[3] <= g
    if not ok:
        raise ValueError(f"invalid generator {t.text()} for genus {g}")


def generator(engine: Engine, t: Token) -> MappingClass:
    check_token(t, engine.g)
    n, i = t.name, t.idx
    if n == "R":
        f = engine.reflection()
    elif n == "Y":
        f = engine.Y(*i)
    elif n == "Ybar":
        f = engine.Ybar(*i)
    elif n == "Ymix":
        f = engine.Ymix(*i)
    elif n == "T":
        f = engine.T(*i)
    else:
        f = engine.Tbar4(*i[1:])
    return f if t.exp == 1 else f.inv()


def realize(engine: Engine, w: GenWord) -> MappingClass:
    """Product of the generators, the leftmost applied last."""
    f = MappingClass.identity(engine.g)
    for t in w:
        f = f * generator(engine, t)
    return f


_mats: dict = {}


def _token_mats(engine: Engine, t: Token) -> tuple:
    key = (engine.g, t)
    r = _mats.get(key)
    if r is None:
        f = generator(engine, t)
        r = _mats[key] = (f.mod2(), f.integral())
    return r


def realize_mod2(engine: Engine, w: GenWord) -> gf2.Matrix:
    m = gf2.identity(engine.g)
    for t in w:
        m = gf2.mul(m, _token_mats(engine, t)[0])
    return m


def realize_int(engine: Engine, w: GenWord) -> tuple:
    m = int_identity(engine.g)
    for t in w:
        m = int_mul(m, _token_mats(engine, t)[1])
    return m


# ---------------------------------------------------------------------------
# construction-soundness gate

@dataclass
class ValidationReport:
    genus: int
    checks: dict

    @property
    def ok(self) -> bool:
        return all(v for v in self.checks.values())

    def failures(self) -> list:
        return [k for k, v in self.checks.items() if not v]


def catalog_curves(g: int) -> list:
    out = [alpha(i, j, g=g) for i in range(1, g + 1) for j in range(i + 1, g + 1)]
    out += [alpha_bar(i, j, g=g) for i in range(1, g + 1) for j in range(i + 1, g + 1)]
    out += [alpha(1, j, k, l, g=g) for j in range(2, g + 1) for k in range(j + 1, g + 1)
            for l in range(k + 1, g + 1)]
    out += [alpha_bar4(i, j, k, g=g) for i in range(2, g + 1) for j in range(i + 1, g + 1)
            for k in range(j + 1, g + 1)]
    return out


def validate_generators(engine: Engine, budget: int = 4000) -> ValidationReport:
    g = engine.g
    checks: dict = {}
    ident = gf2.identity(g)
    eq = lambda a, b: engine.equal_mod_inner(a, b, budget).status == "yes"

    # every catalog generator builds, i.e. fixes the boundary word in F_g
    try:
        slides = [engine.Y(i, j) for i in range(1, g + 1) for j in range(1, g + 1) if i != j]
        slides += [engine.Ybar(i, j) for i in range(1, g + 1) for j in range(1, g + 1) if i != j]
        slides += [engine.Ymix(j, k) for j in range(1, g + 1) for k in range(j + 1, g + 1)]
        curves = catalog_curves(g)
        twists = [(c, engine.twist(c)) for c in curves]
        R = engine.reflection()
        checks["relator preserved"] = True
    except ValueError:
        checks["relator preserved"] = False
        return ValidationReport(g, checks)

    checks["twist acts as transvection"] = all(
        f.mod2() == gf2.transvection(mod2_class(c), g) for c, f in twists)
    checks["slides are level 2"] = all(f.mod2() == ident for f in slides)
    checks["squared twists are level 2"] = all((f * f).mod2() == ident for _, f in twists)
    checks["R is level 2"] = R.mod2() == ident
    checks["R is an involution"] = eq(R * R, MappingClass.identity(g))
    checks["twists fix their curves"] = all(
        engine.curve_equiv(engine.apply_to_curve(f, c), c, budget).status == "yes"
        for c, f in twists[: 3 * g])
    rev = True
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if i != j:
                f = engine.Ybar(i, j)
                rev &= engine.curve_equiv(f.apply((i,)), (-i,), budget, oriented=True).status == "yes"
    checks["slides reverse their crosscap"] = rev
    T12, T23 = engine.T(1, 2), engine.T(2, 3)
    checks["braid relation"] = eq(T12 * T23 * T12, T23 * T12 * T23)
    nat = True
    for i in range(1, g - 1):
        f = engine.Ybar(i + 1, i + 2).inv()
        nat &= eq(f * engine.T(i, i + 2) * f.inv(), engine.twist(alpha_bar(i, i + 2, g=g)))
    for i in range(2, g - 1):
        for j in range(i + 1, g):
            k = g
            F = MappingClass.identity(g)
            for m in range(i + 1, j):
                F = F * engine.Ybar(m, j).inv()
            nat &= eq(F * engine.T(1, i, j, k) * F.inv(), engine.Tbar4(i, j, k))
    checks["naturality of twists"] = nat
    comm = True
    for a in range(1, g + 1):
        for b in range(a + 1, g + 1):
            for c in range(b + 1, g + 1):
                for d in range(c + 1, g + 1):
                    X, Z = engine.Ybar(a, b), engine.Ymix(c, d)
                    comm &= eq(X * Z, Z * X)
    checks["disjoint supports commute"] = comm
    return ValidationReport(g, checks)
