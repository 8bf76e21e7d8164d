"""Time Buchberger runs with the pure-Python and the compiled kernel.

    python3 benchmarks/bench_kernel.py [--repeat N]

The workloads are the fixture statements: the grevlex basis of the
hypotheses and the two elimination steps the classifier performs.
"""

import argparse
import statistics
import time
from pathlib import Path

from partruth import kernel
from partruth.classifier import Statement
from partruth.cli import load_statement
from partruth.groebner import Encoder, buchberger, elimination_order
from partruth.polyring import MonomialOrder

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def workloads():
    for name in ("circles.json", "triangles.json", "rhombus.json"):
        s: Statement = load_statement(FIXTURES / name)
        Y = s.declared_independent or ()
        yield f"{name} grevlex", s.ring, MonomialOrder.grevlex(), list(s.hypotheses)
        t = s.ring.fresh_name("t")
        big = s.ring.extend(t)
        gens = [h.to_ring(big) for h in s.hypotheses]
        gens.append(s.thesis.to_ring(big) * big.var(t) - 1)
        yield f"{name} true-test", big, elimination_order(big, Y), gens
        gens = list(s.hypotheses) + [s.thesis]
        yield f"{name} false-test", s.ring, elimination_order(s.ring, Y), gens


def bench(backend, ring, order, gens, repeat):
    enc = Encoder(ring, order)
    times = []
    with kernel.using(backend):
        for _ in range(repeat):
            encoded = [enc.encode(g) for g in gens]
            t0 = time.perf_counter()
            buchberger(encoded, enc)
            times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernel.compiled is None:
        print("compiled kernel not built; only the pure-Python timings are shown")
    print(f"{'workload':28s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, ring, order, gens in workloads():
        py = bench(kernel.pure, ring, order, gens, args.repeat)
        if kernel.compiled is None:
            print(f"{label:28s} {py * 1e3:10.2f}")
            continue
        cy = bench(kernel.compiled, ring, order, gens, args.repeat)
        print(f"{label:28s} {py * 1e3:10.2f} {cy * 1e3:10.2f} {py / cy:7.2f}x")


if __name__ == "__main__":
    main()
