"""Compare the compiled and pure-Python stable-semantics kernels.

Two workloads:
  * raw kernel: stable-extension enumeration over random frameworks of
    growing size (the 2^n subset scan dominates);
  * end-to-end: a constrained revision on a 5-argument framework, which calls
    the acceptance kernel once per candidate attack configuration.

Run:  python benchmarks/bench_backends.py
"""

import random
import time

from argent import _stablepy

try:
    from argent import _stablec
except ImportError:
    _stablec = None


def random_attacker_masks(n, density, rng):
    masks = []
    for _ in range(n):
        mask = 0
        for i in range(n):
            if rng.random() < density:
                mask |= 1 << i
        masks.append(mask)
    return masks


def best_of(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_kernel():
    print("stable-extension enumeration, one framework per size (density 0.25)")
    print(f"{'n':>4} {'pure ms':>12} {'compiled ms':>12} {'speedup':>8}   extensions")
    for n in (14, 16, 18, 20):
        rng = random.Random(1000 + n)
        masks = random_attacker_masks(n, 0.25, rng)
        t_py, r_py = best_of(lambda: _stablepy.stable_masks(masks, n))
        if _stablec is None:
            print(f"{n:>4} {t_py * 1e3:>12.3f} {'-':>12} {'-':>8}   {len(r_py)}")
            continue
        t_c, r_c = best_of(lambda: _stablec.stable_masks(masks, n))
        assert r_py == r_c
        print(
            f"{n:>4} {t_py * 1e3:>12.3f} {t_c * 1e3:>12.3f} "
            f"{t_py / t_c:>7.1f}x   {len(r_py)}"
        )


def bench_acceptance_batch():
    # the revision search calls the acceptance kernel once per candidate
    # attack configuration: many small frameworks, not one big one
    print("acceptance kernel, 20000 random 7-argument frameworks")
    rng = random.Random(99)
    batch = [random_attacker_masks(7, 0.3, rng) for _ in range(20000)]

    def run(impl):
        return [impl.acceptance_mask(masks, 7) for masks in batch]

    t_py, r_py = best_of(lambda: run(_stablepy))
    if _stablec is None:
        print(f"pure {t_py * 1e3:10.1f} ms")
        return
    t_c, r_c = best_of(lambda: run(_stablec))
    assert r_py == r_c
    print(
        f"pure {t_py * 1e3:10.1f} ms   compiled {t_c * 1e3:10.1f} ms   "
        f"speedup {t_py / t_c:.1f}x"
    )


def bench_revision():
    import argent
    from argent import kernels

    f1 = argent.parse_af(
        "arg(x). arg(y). arg(z). arg(t). arg(u)."
        "att(x,y). att(x,t). att(y,x). att(y,z). att(z,u). att(t,u)."
    )
    enc = argent.AttAccVocabulary(f1.arguments)
    goal = argent.parse_goal("acc(u)", enc)
    constraint = argent.parse_goal("att(t,u) & att(z,u)", enc)

    def run():
        return argent.revise_af(f1, goal, constraint, mode=argent.DALAL)

    t, out = best_of(run, repeats=5)
    print(
        f"revision workload ({kernels.BACKEND} backend): "
        f"{t * 1e3:.2f} ms, {len(out)} entries"
    )


if __name__ == "__main__":
    if _stablec is None:
        print("compiled backend not built; showing pure-Python timings only")
    bench_kernel()
    print()
    bench_acceptance_batch()
    print()
    bench_revision()
    print(
        "re-run with ARGENT_PURE_PYTHON=1 to time the revision workload on the fallback"
    )
