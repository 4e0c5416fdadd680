"""Arithmetic in the surface group <a_1..a_g | a_1^2 a_2^2 ... a_g^2>."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .kernels import apply_images, dehn_reduce, free_reduce
from .words import Word, abelianize, check_letters, inverse, mul

YES, NO, UNDECIDED = "yes", "no", "undecided"
DEFAULT_BUDGET = 4000


@dataclass(frozen=True)
class ConjugacyResult:
    """Outcome of a conjugacy search; ``witness`` satisfies v = w u w^-1."""

    status: str
    witness: Optional[Word] = None
    steps: int = 0

    def __bool__(self) -> bool:
        return self.status == YES


def max_piece_length(g: int) -> int:
    """Longest common subword of two distinct cyclic shifts of r^{+-1}."""
    r = tuple(x for i in range(1, g + 1) for x in (i, i))
    n = len(r)
    shifts = [r[k:] + r[:k] for k in range(n)]
    ri = inverse(r)
    shifts += [ri[k:] + ri[:k] for k in range(n)]
    best = 0
    for a in range(len(shifts)):
        for b in range(a + 1, len(shifts)):
            s, t = shifts[a], shifts[b]
            m = 0
            while m < n and s[m] == t[m]:
                m += 1
            best = max(best, m)
    return best


def _perm_mul(p: tuple, q: tuple) -> tuple:
    # apply p first, then q
    return tuple(q[p[i]] for i in range(len(p)))


def _perm_inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _cycles(p: tuple) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if not seen[s]:
            c = []
            x = s
            while not seen[x]:
                seen[x] = True
                c.append(x)
                x = p[x]
            out.append(c)
    return out


def perm_sqrt(p: tuple) -> Optional[tuple]:
    """Some q with q*q = p, or None when the cycle type forbids it."""
    q = list(range(len(p)))
    pending: dict[int, list[int]] = {}
    for c in _cycles(p):
        L = len(c)
        if L % 2:
            h = (L + 1) // 2
            for k in range(L):
                q[c[k]] = c[(k + h) % L]
        elif L in pending:
            d = pending.pop(L)
            # interleave d and c: d0 -> c0 -> d1 -> c1 ...
            for k in range(L):
                q[d[k]] = c[k]
                q[c[k]] = d[(k + 1) % L]
        else:
            pending[L] = c
    if pending:
        return None
    return tuple(q)


class GroupContext:
    """Immutable context for pi_1(N_g), g >= 4."""

    def __init__(self, g: int, seed: int = 0):
        if not isinstance(g, int) or g < 4:
            raise ValueError("genus must be an integer >= 4")
        self.g = g
        self.relator: Word = tuple(x for i in range(1, g + 1) for x in (i, i))
        self.seed = seed
        piece = max_piece_length(g)
        if not 6 * piece < len(self.relator):
            raise ValueError("presentation is not C'(1/6)")
        n = 2 * g
        self._pairs = {}
        for ri, rel in enumerate((self.relator, inverse(self.relator))):
            for p in range(n):
                self._pairs[(rel[p], rel[(p + 1) % n])] = (ri, p)
        self._rels = (self.relator, inverse(self.relator))
        self._probes: Optional[list] = None

    # -- word problem -------------------------------------------------
    def free_reduce(self, letters: Sequence[int]) -> Word:
        return free_reduce(check_letters(letters, self.g))

    def dehn_reduce(self, w: Sequence[int]) -> Word:
        return dehn_reduce(w, self.g)

    def is_identity(self, w: Sequence[int]) -> bool:
        return len(dehn_reduce(w, self.g)) == 0

    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.is_identity(tuple(u) + inverse(v))

    def homology_class(self, w: Sequence[int]) -> tuple:
        """Integral class in Z^g / <2(1,...,1)>, first coordinate in {0, 1}."""
        v = abelianize(w, self.g)
        shift = v[0] // 2
        return tuple(x - 2 * shift for x in v)

    # -- finite quotients ---------------------------------------------
    def probes(self) -> list:
        """Seeded homomorphisms into small symmetric groups."""
        if self._probes is None:
            rng = random.Random(self.seed * 1000003 + self.g)
            out = []
            for degree in (3, 4, 5, 6, 7, 8) * 4:
                for _ in range(20):
                    gens = []
                    for _ in range(self.g - 1):
                        p = list(range(degree))
                        rng.shuffle(p)
                        gens.append(tuple(p))
                    acc = tuple(range(degree))
                    for s in gens:
                        acc = _perm_mul(acc, _perm_mul(s, s))
                    root = perm_sqrt(_perm_inv(acc))
                    if root is not None:
                        gens.append(root)
                        out.append(tuple(gens))
                        break
            self._probes = out
        return self._probes

    @staticmethod
    def _evaluate(gens: tuple, w: Sequence[int]) -> tuple:
        deg = len(gens[0])
        acc = tuple(range(deg))
        for x in w:
            s = gens[x - 1] if x > 0 else _perm_inv(gens[-x - 1])
            acc = _perm_mul(acc, s)
        return acc

    def probe_nontrivial(self, w: Sequence[int]) -> bool:
        ident = None
        for gens in self.probes():
            p = self._evaluate(gens, w)
            if ident is None:
                ident = tuple(range(len(p)))
            if p != tuple(range(len(p))):
                return True
            ident = None
        return False

    def probe_nonconjugate(self, u: Sequence[int], v: Sequence[int]) -> bool:
        for gens in self.probes():
            cu = sorted(len(c) for c in _cycles(self._evaluate(gens, u)))
            cv = sorted(len(c) for c in _cycles(self._evaluate(gens, v)))
            if cu != cv:
                return True
        return False

    def test_words(self) -> list:
        """Short words whose conjugacy classes an inner automorphism preserves."""
        g = self.g
        out = [(i,) for i in range(1, g + 1)]
        out += [(i, j) for i in range(1, g + 1) for j in range(i + 1, g + 1)]
        out += [(i, -j) for i in range(1, g + 1) for j in range(i + 1, g + 1)]
        rng = random.Random(self.seed * 7919 + g)
        for _ in range(2 * g):
            n = rng.randint(3, 6)
            out.append(tuple(rng.choice((1, -1)) * rng.randint(1, g) for _ in range(n)))
        return out

    def probe_not_inner(self, images: Sequence[Word]) -> bool:
        """True when some test word and its image are separated by a probe."""
        images = tuple(tuple(x) for x in images)
        for w in self.test_words():
            if self.probe_nonconjugate(w, apply_images(images, w)):
                return True
        return False

    # -- conjugacy ----------------------------------------------------
    def cyclic_reduce(self, w: Sequence[int]) -> tuple[Word, Word]:
        """Return ``(p, core)`` with w = p core p^-1 and core cyclically Dehn reduced."""
        w = dehn_reduce(w, self.g)
        p: list[int] = []
        while True:
            while len(w) > 1 and w[0] == -w[-1]:
                p.append(w[0])
                w = w[1:-1]
            n = len(w)
            for k in range(1, n):
                d = dehn_reduce(w[k:] + w[:k], self.g)
                if len(d) < n:
                    p.extend(w[:k])
                    w = d
                    break
            else:
                return free_reduce(p), w

    def _half_swaps(self, w: Word) -> list[tuple[Word, Word]]:
        # cyclic subwords of length exactly g lying on the relator can be
        # exchanged for the inverse of the complementary half
        g = self.g
        n = len(w)
        out = []
        if n < g or n < 2:
            return out
        for p in range(n):
            rot = w[p:] + w[:p]
            hit = self._pairs.get((rot[0], rot[1]))
            if hit is None:
                continue
            ri, q = hit
            rel = self._rels[ri]
            L = 2
            while L < g and rot[L] == rel[(q + L) % (2 * g)]:
                L += 1
            if L == g:
                rest = [rel[(q + g + k) % (2 * g)] for k in range(g)]
                out.append((w[:p], tuple(-x for x in reversed(rest)) + rot[g:]))
        return out

    @staticmethod
    def _canon(w: Word) -> tuple[Word, Word]:
        best = (w[:0], w)
        for k in range(1, len(w)):
            r = w[k:] + w[:k]
            if r < best[1]:
                best = (w[:k], r)
        return best

    def are_conjugate(self, u: Sequence[int], v: Sequence[int],
                      budget: int = DEFAULT_BUDGET) -> ConjugacyResult:
        """Decide v = w u w^-1.

        A witness is always rechecked by the word problem.  "no" comes only
        from conjugation invariants (integral homology, permutation
        quotients); an unsuccessful bounded search gives "undecided".
        """
        u = dehn_reduce(u, self.g)
        v = dehn_reduce(v, self.g)
        if self.homology_class(u) != self.homology_class(v):
            return ConjugacyResult(NO)
        if budget <= 0:
            return ConjugacyResult(UNDECIDED)
        pu, cu = self.cyclic_reduce(u)
        pv, cv = self.cyclic_reduce(v)
        x, cu0 = self._canon(cu)
        y, target = self._canon(cv)
        seen = {cu0: ()}
        queue = deque([cu0])
        steps = 0
        found = None
        if len(cu0) == len(target):
            while queue:
                w = queue.popleft()
                steps += 1
                if w == target:
                    found = seen[w]
                    break
                if len(seen) > budget:
                    break
                for pre, new in self._half_swaps(w):
                    p2, core = self.cyclic_reduce(new)
                    z, cz = self._canon(core)
                    if cz not in seen:
                        seen[cz] = mul(inverse(mul(pre, p2, z)), seen[w])
                        queue.append(cz)
        if found is not None:
            wit = mul(pv, y, found, inverse(mul(pu, x)))
            if self.is_identity(mul(wit, u, inverse(wit), inverse(v))):
                return ConjugacyResult(YES, dehn_reduce(wit, self.g), steps)
        if self.probe_nonconjugate(u, v):
            return ConjugacyResult(NO, None, steps)
        return ConjugacyResult(UNDECIDED, None, steps)

    def curve_equivalent(self, w: Sequence[int], target: Sequence[int],
                         budget: int = DEFAULT_BUDGET) -> ConjugacyResult:
        """Conjugacy to ``target`` or to its inverse (unoriented curves)."""
        r = self.are_conjugate(target, w, budget)
        if r.status == YES:
            return r
        r2 = self.are_conjugate(inverse(target), w, budget)
        if r2.status == YES:
            return r2
        if r.status == NO and r2.status == NO:
            return ConjugacyResult(NO)
        return ConjugacyResult(UNDECIDED)

    # -- inner automorphisms ------------------------------------------
    def endomorphism_defined(self, images: Sequence[Word]) -> bool:
        return self.is_identity(apply_images(tuple(images), self.relator))

    def inner_witness(self, images: Sequence[Word], budget: int = DEFAULT_BUDGET,
                      scan: int = 8) -> ConjugacyResult:
        """Find w with images[i] = w a_i w^-1 for every i.

        The witnesses for a_1 alone form a coset w0 <a_1>; the coset is
        scanned for |k| <= scan.
        """
        images = tuple(tuple(x) for x in images)
        if len(images) != self.g:
            raise ValueError("need one image per generator")
        if not self.endomorphism_defined(images):
            raise ValueError("malformed automorphism: relator not preserved")
        for i, im in enumerate(images):
            if self.homology_class(im) != self.homology_class((i + 1,)):
                return ConjugacyResult(NO)
        first = self.are_conjugate((1,), images[0], budget)
        if first.status == NO:
            return first
        if first.status != YES:
            if self.probe_not_inner(images):
                return ConjugacyResult(NO)
            return first
        w0 = first.witness
        order = sorted(range(-scan, scan + 1), key=lambda k: (abs(k), k))
        for k in order:
            w = mul(w0, (1,) * k if k >= 0 else (-1,) * (-k))
            wi = inverse(w)
            if all(self.is_identity(mul(w, (i + 1,), wi, inverse(images[i])))
                   for i in range(1, self.g)):
                return ConjugacyResult(YES, dehn_reduce(w, self.g), first.steps)
        if self.probe_not_inner(images):
            return ConjugacyResult(NO)
        for i in range(1, self.g):
            if self.probe_nonconjugate((i + 1,), images[i]):
                return ConjugacyResult(NO)
        return ConjugacyResult(UNDECIDED, None, first.steps)

    # -- independent oracle -------------------------------------------
    def triviality_oracle(self, w: Sequence[int], radius: int = 12,
                          max_states: int = 20000) -> str:
        """Independent triviality check for small words.

        "trivial" needs an explicit chain of relator insertions/deletions;
        "nontrivial" needs a nonzero homology class or a permutation
        quotient in which w acts nontrivially.
        """
        w = free_reduce(check_letters(w, self.g))
        if not w:
            return "trivial"
        if any(abelianize(w, self.g)[0] != x for x in abelianize(w, self.g)) or \
                abelianize(w, self.g)[0] % 2:
            return "nontrivial"
        if self.probe_nontrivial(w):
            return "nontrivial"
        shifts = set()
        for rel in self._rels:
            for k in range(len(rel)):
                shifts.add(rel[k:] + rel[:k])
        # all ways of rewriting x -> y^-1 where x y is a cyclic relator
        moves = []
        for s in shifts:
            for cut in range(1, len(s) + 1):
                moves.append((s[:cut], inverse(s[cut:])))
        seen = {w}
        queue = deque([w])
        while queue and len(seen) < max_states:
            cur = queue.popleft()
            for i in range(len(cur) + 1):
                for x, y in moves:
                    if cur[i:i + len(x)] == x:
                        nxt = free_reduce(cur[:i] + y + cur[i + len(x):])
                        if not nxt:
                            return "trivial"
                        if len(nxt) <= radius and nxt not in seen:
                            seen.add(nxt)
                            queue.append(nxt)
        return "unknown"


@lru_cache(maxsize=None)
def context(g: int, seed: int = 0) -> GroupContext:
    return GroupContext(g, seed)
