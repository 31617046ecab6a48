"""Benchmark of the compiled Laurent kernel against the pure-python one.

Runs each workload in a subprocess with and without GUCA_PURE_PYTHON=1
and prints a comparison table.

    python3 benchmarks/bench_kernel.py
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json
import random
import time

from guca import kernel
from guca.hive import build_hive
from guca.laurent import LaurentPoly
from guca.seeds import Seed

out = {"backend": kernel.BACKEND}

# 1. seed mutation closure: all mutation words of length <= 6 on the 4-hive
start = time.monotonic()
seed = Seed.initial(build_hive(4).quiver)
stack = [(seed, 0, None)]
count = 0
while stack:
    s, depth, last = stack.pop()
    count += 1
    if depth == 6:
        continue
    for u in s.quiver.mutable:
        if u != last:
            stack.append((s.mutate(u), depth + 1, u))
out["mutation_closure_s"] = round(time.monotonic() - start, 3)
out["seeds_visited"] = count

# 2. dense-ish products
rng = random.Random(0)


def rand_poly(nvars, terms, span):
    p = LaurentPoly.zero(nvars)
    for _ in range(terms):
        e = [rng.randrange(-span, span + 1) for _ in range(nvars)]
        p = p + LaurentPoly.monomial(e, rng.randrange(-99, 100))
    return p


polys = [rand_poly(6, 60, 4) for _ in range(24)]
start = time.monotonic()
acc = 0
for i in range(len(polys)):
    for j in range(i + 1, len(polys)):
        acc += len((polys[i] * polys[j]).terms)
out["products_s"] = round(time.monotonic() - start, 3)

# 3. exact division round trips
start = time.monotonic()
for i in range(0, len(polys) - 1, 2):
    f, g = polys[i], polys[i + 1]
    q = (f * g).divexact(g)
    assert q == f
out["divisions_s"] = round(time.monotonic() - start, 3)

print(json.dumps(out))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["GUCA_PURE_PYTHON"] = "1"
    else:
        env.pop("GUCA_PURE_PYTHON", None)
    res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    compiled = run(pure=False)
    pure = run(pure=True)
    print(f"{'workload':<24}{compiled['backend']:>14}{pure['backend']:>14}"
          f"{'speedup':>10}")
    for key, label in [("mutation_closure_s", "mutation closure"),
                       ("products_s", "laurent products"),
                       ("divisions_s", "exact divisions")]:
        c, p = compiled[key], pure[key]
        ratio = p / c if c else float("inf")
        print(f"{label:<24}{c:>13.3f}s{p:>13.3f}s{ratio:>9.2f}x")
    print(f"(mutation closure visits {compiled['seeds_visited']} seeds)")


if __name__ == "__main__":
    main()
