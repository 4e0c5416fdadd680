"""Compare the compiled and pure-Python word kernels.

    python benchmarks/bench_kernels.py [--genus 7] [--words 3000] [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import time

from artifact import _pykernels as py

try:
    from artifact import _kernels as cy
except ImportError:  # extension not built
    cy = None


def random_words(g: int, n: int, length: int, seed: int) -> list[tuple]:
    rng = random.Random(seed)
    return [tuple(rng.choice((1, -1)) * rng.randint(1, g) for _ in range(length)) for _ in range(n)]


def relator_heavy(g: int, n: int, seed: int) -> list[tuple]:
    """Words built from conjugated relators, so Dehn reduction has work to do."""
    rng = random.Random(seed)
    rel = tuple(x for i in range(1, g + 1) for x in (i, i))
    out = []
    for _ in range(n):
        w: list[int] = []
        for _ in range(4):
            c = [rng.choice((1, -1)) * rng.randint(1, g) for _ in range(rng.randint(0, 4))]
            r = rel if rng.random() < 0.5 else tuple(-x for x in reversed(rel))
            k = rng.randrange(len(r))
            w += c + list(r[k:] + r[:k]) + [-x for x in reversed(c)]
        out.append(tuple(w))
    return out


def bench(fn, args_list, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        for a in args_list:
            fn(*a)
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--genus", type=int, default=7)
    ap.add_argument("--words", type=int, default=3000)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    g = a.genus
    plain = random_words(g, a.words, 40, 1)
    heavy = relator_heavy(g, a.words, 2)
    images = tuple(tuple(w) for w in random_words(g, g, 6, 3))
    cases = [
        ("free_reduce", "free_reduce", [(w,) for w in plain]),
        ("dehn_reduce (random)", "dehn_reduce", [(w, g) for w in plain]),
        ("dehn_reduce (relators)", "dehn_reduce", [(w, g) for w in heavy]),
        ("apply_images", "apply_images", [(images, w) for w in plain]),
    ]
    print(f"genus {g}, {a.words} words, best of {a.repeat}")
    print(f"{'kernel':<24}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for label, name, args in cases:
        tp = bench(getattr(py, name), args, a.repeat)
        if cy is None:
            print(f"{label:<24}{tp:>10.4f}{'n/a':>10}{'':>9}")
            continue
        for x in args[:50]:
            assert tuple(getattr(py, name)(*x)) == tuple(getattr(cy, name)(*x))
        tc = bench(getattr(cy, name), args, a.repeat)
        print(f"{label:<24}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
