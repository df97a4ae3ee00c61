"""Compare the compiled kernels with the pure-Python fallback.

Each workload runs in a fresh interpreter so the backend is chosen at import
time exactly as in normal use (``QUADSG_PURE_PYTHON=1`` forces the fallback).

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from quadsg.polyring import groebner, kernels, parse_poly, radical_member
from quadsg.structure import make_instance
from quadsg.polyring.poly import product

def cyclic(n):
    names = [f"x{i}" for i in range(n)]
    gens = []
    for k in range(1, n):
        terms = ["*".join(names[(i + j) % n] for j in range(k)) for i in range(n)]
        gens.append(parse_poly(" + ".join(terms), names))
    gens.append(parse_poly("*".join(names) + " - 1", names))
    return gens

def katsura(n):
    names = [f"x{i}" for i in range(n + 1)]
    x = lambda i: names[abs(i)] if abs(i) <= n else "0"
    gens = [parse_poly(" + ".join(x(i) if i == 0 else f"2*{x(i)}" for i in range(n + 1)) + " - 1", names)]
    for m in range(n):
        terms = [f"{x(l)}*{x(m - l)}" for l in range(-n, n + 1) if abs(l) <= n and abs(m - l) <= n]
        gens.append(parse_poly(" + ".join(terms) + f" - {x(m)}", names))
    return gens

def radical_batch():
    for s in range(10):
        inst = make_instance("iii", 6, s)
        f = product([q.to_poly() for q in inst.qs])
        assert radical_member(f, [inst.a.to_poly(), inst.b.to_poly()])

jobs = {
    "cyclic-5 degrevlex": lambda: groebner(cyclic(5), "degrevlex"),
    "katsura-4 degrevlex": lambda: groebner(katsura(4), "degrevlex"),
    "katsura-3 lex": lambda: groebner(katsura(3), "lex"),
    "10 radical queries": radical_batch,
}
repeat = int(sys.argv[1])
out = {"backend": kernels.BACKEND, "times": {}}
for name, job in jobs.items():
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        job()
        best = min(best, time.perf_counter() - t0)
    out["times"][name] = best
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ, QUADSG_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(res.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if fast["backend"] == slow["backend"]:
        print(f"compiled extension unavailable; both runs used {fast['backend']}", file=sys.stderr)
    print(f"{'workload':<24}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:<24}{t_fast:>11.3f}s{t_slow:>11.3f}s{t_slow / t_fast:>9.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
