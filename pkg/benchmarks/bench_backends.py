#!/usr/bin/env python3
"""Hot-kernel timings, compiled backend vs the numpy references.

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --medium    # adds (1,3,9), ~1.3e6 blocks
    FLAGPROD_NO_NUMBA=1 has no effect here; both backends are imported directly.
"""

import argparse
import time

import numpy as np

from flagprod import _kernels_python as knp
from flagprod.construct import base_block
from flagprod.permaction import element_point_map, full_wreath_generators

try:
    from flagprod import _kernels_numba as knb
except ImportError:
    knb = None


def wreath_maps(omega):
    return np.stack([element_point_map(g) for g in full_wreath_generators(omega)])


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_case(c, m, omega, force):
    start = np.array([base_block(c, m, omega, force=force)], dtype=np.int32)
    maps = wreath_maps(omega)
    cap = 5_000_000

    (blocks, over), t_np = timed(knp.closure, start, maps, 0, cap)
    assert not over
    rows = {"closure": [t_np]}
    if knb is not None:
        (blocks2, _), t_nb = timed(knb.closure, start, maps, 0, cap)
        assert blocks2.shape == blocks.shape
        rows["closure"].append(t_nb)

    v = omega * omega
    for name, args in [
        ("pair_count_matrix", (blocks, v)),
        ("block_pair_classes", (blocks, omega)),
        ("grid_profile", (blocks, omega, c, c + 1)),
    ]:
        fn_np = getattr(knp, name.replace("block_pair_classes", "block_pair_class_counts")
                        .replace("grid_profile", "grid_profile_ok"))
        _, t = timed(fn_np, *args)
        rows[name] = [t]
        if knb is not None:
            fn_nb = getattr(knb, name.replace("block_pair_classes", "block_pair_class_counts")
                            .replace("grid_profile", "grid_profile_ok"))
            _, t = timed(fn_nb, *args)
            rows[name].append(t)

    print(f"(c={c}, m={m}, omega={omega}{', forced' if force else ''}): "
          f"b={blocks.shape[0]}, k={blocks.shape[1]}")
    for name, ts in rows.items():
        line = f"  {name:<20} numpy {1e3 * ts[0]:>10.1f} ms"
        if len(ts) == 2:
            line += f"   numba {1e3 * ts[1]:>10.1f} ms   {ts[0] / ts[1]:>6.1f}x"
        print(line)
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--medium", action="store_true",
                    help="also run (1,3,9), takes a few extra minutes on numpy")
    args = ap.parse_args()

    if knb is None:
        print("numba unavailable, timing the numpy references only\n")
    else:
        # trigger jit compilation off the clock
        bench_warm = np.array([base_block(1, 2, 5)], dtype=np.int32)
        maps = wreath_maps(5)
        knb.closure(bench_warm, maps, 0, 10_000)
        blk, _ = knp.closure(bench_warm, maps, 0, 10_000)
        knb.pair_count_matrix(blk, 25)
        knb.block_pair_class_counts(blk, 5)
        knb.grid_profile_ok(blk, 5, 1, 2)

    bench_case(1, 2, 5, False)
    bench_case(1, 2, 11, True)
    if args.medium:
        bench_case(1, 3, 9, False)


if __name__ == "__main__":
    main()
