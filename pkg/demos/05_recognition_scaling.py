"""Recognition time as candidates, voters and parties all double."""

import time

from pasp import random_pasp, recognize_pasp

prev = None
for m, n, k in [(50, 50, 10), (100, 100, 20), (200, 200, 40), (400, 400, 80)]:
    e, _ = random_pasp(0, [m // k] * k, n)
    t = time.perf_counter()
    recognize_pasp(e)
    dt = time.perf_counter() - t
    ratio = f"x{dt / prev:.1f}" if prev else ""
    print(f"|C|={m:4} |V|={n:4} |P|={k:3}: {dt * 1e3:8.2f} ms {ratio}")
    prev = dt
