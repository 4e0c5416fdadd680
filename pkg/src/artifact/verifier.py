"""Two-tier verification of catalog statements with replayable certificates."""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fnmatch import fnmatchcase
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import gf2
from .catalog import (Member, Statement, catalog, expected_count, involution_set,
                      minimality_rows)
from .curves import curve_word, int_class, mod2_class
from .generators import (GenWord, Token, gw_inv, realize, realize_int, realize_mod2,
                         validate_generators)
from .group import DEFAULT_BUDGET
from .homology import isometry_order, twist_generators, BRUTEFORCE_MAX_GENUS
from .mapping import Engine, MappingClass, int_apply, int_canon, int_equal, int_identity
from .words import format_word, inverse, mul

VERIFIED, FALSIFIED, UNDECIDED = "verified", "falsified", "undecided"
VERSION = "0.1.0"


@dataclass
class Certificate:
    statement: Statement
    verdict: str
    tier: str
    witness: str = ""
    elapsed_ms: float = 0.0
    budget: int = DEFAULT_BUDGET
    data: tuple = ()  # raw witness words, for replay

    def to_json(self) -> dict:
        s = self.statement
        return {
            "id": s.id,
            "genus": s.genus,
            "kind": s.kind,
            "as_printed": s.as_printed,
            "statement": s.text(),
            "spelling": s.spelling,
            "verdict": self.verdict,
            "tier": self.tier,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _engine(g: int, seed: int) -> Engine:
    return _engines.setdefault((g, seed), Engine(g, seed))


_engines: dict = {}


# ---------------------------------------------------------------------------
# tier A: homology invariants only

def _curve_class_ok(m: tuple, m2: gf2.Matrix, src, tgt, rev: bool) -> bool:
    if gf2.apply(m2, mod2_class(src)) != mod2_class(tgt):
        return False
    img = int_canon(int_apply(m, int_class(src)))
    t = int_class(tgt)
    neg = int_canon(tuple(-x for x in t))
    return img == neg if rev else img in (int_canon(t), neg)


def _tier_a(e: Engine, s: Statement) -> tuple[str, str]:
    g = s.genus
    if s.kind == "MapEquality":
        if realize_mod2(e, s.lhs) != realize_mod2(e, s.rhs):
            return FALSIFIED, "mod-2 actions differ"
        if not int_equal(realize_int(e, s.lhs), realize_int(e, s.rhs)):
            return FALSIFIED, "integral actions differ"
        return VERIFIED, "homology actions agree"
    if s.kind == "CurveImage":
        m, m2 = realize_int(e, s.lhs), realize_mod2(e, s.lhs)
        for src, tgt, rev in s.curves:
            if not _curve_class_ok(m, m2, src, tgt, rev):
                return FALSIFIED, f"homology class of image of {src.label()} differs"
        return VERIFIED, "homology classes agree"
    if s.kind == "InvolutionClaim":
        sq = s.lhs + s.lhs
        if realize_mod2(e, sq) != gf2.identity(g):
            return FALSIFIED, "square acts nontrivially mod 2"
        if not int_equal(realize_int(e, sq), int_identity(g)):
            return FALSIFIED, "square acts nontrivially on integral homology"
        return VERIFIED, "square acts trivially on homology"
    if s.kind == "MembershipClaim":
        if realize_mod2(e, s.lhs) == gf2.identity(g):
            return VERIFIED, "mod-2 action is the identity"
        return FALSIFIED, "mod-2 action is not the identity"
    raise ValueError(s.kind)


# ---------------------------------------------------------------------------
# tier B: inner-automorphism and conjugacy decisions

def _verdict(status: str) -> str:
    return {"yes": VERIFIED, "no": FALSIFIED}.get(status, UNDECIDED)


def _tier_b(e: Engine, s: Statement, budget: int) -> tuple[str, str, tuple]:
    g = s.genus
    if s.kind == "MembershipClaim":
        f = realize(e, s.lhs)
        ok = f.mod2() == gf2.identity(g)
        return (VERIFIED if ok else FALSIFIED), "mod-2 action " + ("trivial" if ok else "nontrivial"), ()
    if s.kind in ("MapEquality", "InvolutionClaim"):
        if s.kind == "MapEquality":
            f, h = realize(e, s.lhs), realize(e, s.rhs)
        else:
            f = realize(e, s.lhs)
            f, h = f * f, MappingClass.identity(g)
        v = e.equal_mod_inner(f, h, budget)
        if v.status == "yes":
            return VERIFIED, "inner conjugator " + format_word(v.witness), (v.witness,)
        return _verdict(v.status), v.reason, ()
    if s.kind == "CurveImage":
        f = realize(e, s.lhs)
        wits, texts = [], []
        worst = VERIFIED
        for src, tgt, rev in s.curves:
            img = f.apply(curve_word(src))
            t = curve_word(tgt)
            if rev:
                v = e.curve_equiv(img, inverse(t), budget, oriented=True)
            else:
                v = e.curve_equiv(img, t, budget)
            r = _verdict(v.status)
            if r == FALSIFIED:
                return FALSIFIED, f"image of {src.label()} is not {tgt.label()}" + ("^-1" if rev else ""), ()
            if r == UNDECIDED:
                worst = UNDECIDED
                texts.append(f"{src.label()}: undecided")
                continue
            wits.append(v.witness)
            texts.append(f"{src.label()}: conjugator {format_word(v.witness)}")
        return worst, "; ".join(texts), tuple(wits)
    raise ValueError(s.kind)


# ---------------------------------------------------------------------------
# statements that are computations rather than identities

def _count(s: Statement) -> tuple[str, str]:
    n = len(involution_set(s.genus).members)
    ok = n == expected_count(s.genus)
    return (VERIFIED if ok else FALSIFIED), f"{n} members, expected {expected_count(s.genus)}"


def minimality_matrix(g: int, members: Optional[tuple] = None) -> tuple[list, int, bool]:
    """Rows of the change-of-basis matrix, its rank, and whether it is invertible."""
    rows, gens = minimality_rows(g, members)
    r = gf2.rank(rows)
    return rows, r, len(rows) == len(gens) == r


def surjectivity_check(g: int, e: Optional[Engine] = None) -> dict:
    """Closure of twist images versus the number of isometries."""
    if e is not None:
        idx = [(i, i + 1) for i in range(1, g)]
        idx += [(1, j, k, l) for j, k, l in combinations(range(2, g + 1), 3)]
        gens = [e.T(*I).mod2() for I in idx]
    else:
        gens = twist_generators(g)
    closure = isometry_order(g, "closure", gens).order
    brute = isometry_order(g, "bruteforce").order if g <= BRUTEFORCE_MAX_GENUS else None
    return {"genus": g, "closure": closure, "bruteforce": brute,
            "agree": brute is None or brute == closure}


def _matrix(s: Statement, e: Engine) -> tuple[str, str]:
    if s.note == "minimality":
        rows, r, ok = minimality_matrix(s.genus)
        return (VERIFIED if ok else FALSIFIED), (
            f"{len(rows)}x{len(rows)} matrix of rank {r} over GF(2); "
            "assumes the minimal generators form a basis of the mod-2 abelianization")
    rep = surjectivity_check(s.genus, e)
    if rep["bruteforce"] is None:
        return VERIFIED, f"closure order {rep['closure']} (no bruteforce above g={BRUTEFORCE_MAX_GENUS})"
    return (VERIFIED if rep["agree"] else FALSIFIED), (
        f"closure order {rep['closure']}, bruteforce order {rep['bruteforce']}")


# ---------------------------------------------------------------------------

def verify(s: Statement, tier: str = "B", budget: int = DEFAULT_BUDGET, seed: int = 0,
           engine: Optional[Engine] = None) -> Certificate:
    tier = tier.upper()
    e = engine or _engine(s.genus, seed)
    t0 = time.perf_counter()
    data: tuple = ()
    if s.kind == "CountClaim":
        verdict, wit = _count(s)
    elif s.kind == "MatrixClaim":
        verdict, wit = _matrix(s, e)
    elif tier == "A":
        verdict, wit = _tier_a(e, s)
    else:
        verdict, wit, data = _tier_b(e, s, budget)
    ms = (time.perf_counter() - t0) * 1000
    return Certificate(s, verdict, tier, wit, ms, budget, data)


def replay(cert: Certificate, seed: int = 0) -> bool:
    """Re-check a tier-B certificate from its witness words alone."""
    s = cert.statement
    if cert.verdict != VERIFIED or cert.tier != "B":
        return False
    e = _engine(s.genus, seed)
    ctx = e.ctx
    g = s.genus
    if s.kind in ("MapEquality", "InvolutionClaim"):
        if s.kind == "MapEquality":
            d = realize(e, s.lhs) * realize(e, s.rhs).inv()
        else:
            f = realize(e, s.lhs)
            d = f * f
        (w,) = cert.data
        wi = inverse(w)
        return all(ctx.is_identity(mul(w, (i + 1,), wi, inverse(d.images[i]))) for i in range(g))
    if s.kind == "CurveImage":
        f = realize(e, s.lhs)
        if len(cert.data) != len(s.curves):
            return False
        for (src, tgt, rev), w in zip(s.curves, cert.data):
            img = f.apply(curve_word(src))
            t = curve_word(tgt)
            opts = [inverse(t)] if rev else [t, inverse(t)]
            if not any(ctx.is_identity(mul(w, u, inverse(w), inverse(img))) for u in opts):
                return False
        return True
    return verify(s, "B", 0, seed).verdict == VERIFIED


# ---------------------------------------------------------------------------
# mutants

def _token_pool(g: int) -> list:
    """Insertion candidates: twists on non-adjacent pairs and 4-index curves, and slides."""
    pool = [Token("T", (a, b), e) for a in range(1, g + 1) for b in range(a + 2, g + 1)
            for e in (1, -1)]
    pool += [Token("T", (1, j, k, l), e) for j, k, l in combinations(range(2, g + 1), 3)
             for e in (1, -1)]
    pool += [Token("Ybar", (a, b), e) for a in range(1, g + 1) for b in range(1, g + 1)
             if a != b for e in (1, -1)]
    return pool


def _provably_false(e: Engine, s: Statement) -> bool:
    try:
        return _tier_a(e, s)[0] == FALSIFIED
    except ValueError:
        return False


def mutate(s: Statement, seed: int = 0) -> Statement:
    """Seeded single-token mutation.

    One generator token is inserted into the left-hand word.  Among the seeded
    candidate (position, token) pairs, the first whose mutant already fails a
    homology invariant is taken, so the control is known to be a false claim;
    if no candidate qualifies the first one is used as is.  For curve images the
    token is applied last.  Count and matrix claims drop one member instead.
    """
    rng = random.Random(f"{seed}:{s.id}")
    g = s.genus
    if s.kind in ("CountClaim", "MatrixClaim"):
        return replace(s, id=s.id + "~mutant", note=s.note + "|drop")
    e = _engine(g, 0)
    word = s.lhs
    pool = _token_pool(g)
    rng.shuffle(pool)
    first = None
    for tok in pool[:64]:
        pos = 0 if s.kind == "CurveImage" else rng.randint(0, len(word))
        m = replace(s, id=s.id + "~mutant", lhs=word[:pos] + (tok,) + word[pos:])
        if first is None:
            first = m
        if _provably_false(e, m):
            return m
    return first


def verify_mutant(s: Statement, tier: str = "B", budget: int = DEFAULT_BUDGET,
                  seed: int = 0) -> Certificate:
    t0 = time.perf_counter()
    if s.kind == "CountClaim":
        members = involution_set(s.genus).members
        drop = random.Random(f"{seed}:{s.id}").randrange(len(members))
        n = len(members) - 1
        verdict = VERIFIED if n == expected_count(s.genus) else FALSIFIED
        return Certificate(s, verdict, tier, f"{n} members after dropping #{drop + 1}",
                           (time.perf_counter() - t0) * 1000, budget)
    if s.kind == "MatrixClaim":
        if s.note.startswith("minimality"):
            members = involution_set(s.genus).members
            drop = random.Random(f"{seed}:{s.id}").randrange(len(members))
            kept = members[:drop] + members[drop + 1:]
            rows, r, ok = minimality_matrix(s.genus, kept)
            return Certificate(s, VERIFIED if ok else FALSIFIED, tier,
                               f"rank {r} after dropping #{drop + 1}",
                               (time.perf_counter() - t0) * 1000, budget)
        e = _engine(s.genus, seed)
        idx = [(i, i + 1) for i in range(1, s.genus)]
        idx += [(1, j, k, l) for j, k, l in combinations(range(2, s.genus + 1), 3)]
        gens = [e.T(*I).mod2() for I in idx][1:]
        c = isometry_order(s.genus, "closure", gens).order
        b = isometry_order(s.genus, "bruteforce").order
        return Certificate(s, VERIFIED if c == b else FALSIFIED, tier,
                           f"closure {c} without T(1,2), bruteforce {b}",
                           (time.perf_counter() - t0) * 1000, budget)
    return verify(s, tier, budget, seed)


# ---------------------------------------------------------------------------
# full runs

@dataclass
class RunConfig:
    genera: tuple = (4,)
    tier: str = "B"
    statement: str = "*"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    seed: int = 0
    include_printed: bool = False

    def to_json(self) -> dict:
        return {"genus": list(self.genera), "tier": self.tier, "statement": self.statement,
                "budgets": {"search": self.budget}, "seed": self.seed, "version": VERSION,
                "include_printed": self.include_printed}


@dataclass
class VerificationReport:
    config: RunConfig
    validation: dict
    certificates: list

    def summary(self) -> dict:
        out = {VERIFIED: 0, FALSIFIED: 0, UNDECIDED: 0}
        for c in self.certificates:
            out[c.verdict] += 1
        return out

    def to_json(self) -> dict:
        certs = sorted(self.certificates, key=lambda c: (c.statement.genus, c.statement.id))
        return {"run_config": self.config.to_json(),
                "validation": self.validation,
                "certificates": [c.to_json() for c in certs],
                "summary": self.summary()}

    def exit_code(self) -> int:
        if not all(self.validation.values()):
            return 1
        s = self.summary()
        if s[FALSIFIED]:
            return 1
        if s[UNDECIDED]:
            return 2
        return 0


def select(g: int, pattern: str = "*", include_printed: bool = True) -> list[Statement]:
    pats = [p.strip() for p in pattern.split(",") if p.strip()] or ["*"]
    out = []
    for s in catalog(g):
        if not include_printed and s.as_printed:
            continue
        if any(fnmatchcase(s.id, p) or fnmatchcase(s.family, p) for p in pats):
            out.append(s)
    return out


def _work(args) -> Certificate:
    s, tier, budget, seed = args
    c = verify(s, tier, budget, seed)
    c.data = ()
    return c


def verify_all(config: RunConfig) -> VerificationReport:
    validation = {}
    for g in config.genera:
        rep = validate_generators(_engine(g, config.seed))
        for k, v in rep.checks.items():
            validation[f"g={g}: {k}"] = bool(v)
    stmts = [s for g in config.genera for s in select(g, config.statement, config.include_printed)]
    if not all(validation.values()):
        certs = [Certificate(s, UNDECIDED, config.tier, "generator validation failed", 0.0,
                             config.budget) for s in stmts]
        return VerificationReport(config, validation, certs)
    jobs = [(s, config.tier, config.budget, config.seed) for s in stmts]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as ex:
            certs = list(ex.map(_work, jobs, chunksize=4))
    else:
        certs = [verify(s, config.tier, config.budget, config.seed) for s in stmts]
    certs.sort(key=lambda c: (c.statement.genus, c.statement.id))
    return VerificationReport(config, validation, certs)
