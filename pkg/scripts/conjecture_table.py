"""Print, for each order and edge count, the predicted and exhaustive maximum index.

    python scripts/conjecture_table.py 5 8
"""
from __future__ import annotations

import argparse
import math

from ecix.enumeration import ClassFilter
from ecix.extremal import conjecture_expected, conjecture_params, search_extremal
from ecix.canon import canonical_key
from ecix.graph import eci
from ecix.graph6 import encode_graph6


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n_min", type=int)
    ap.add_argument("n_max", type=int)
    a = ap.parse_args(argv)
    print("n  m   D  k  predicted  observed  #optima  match")
    for n in range(a.n_min, a.n_max + 1):
        for m in range(n - 1, math.comb(n - 1, 2) + 1):
            d, k = conjecture_params(n, m)
            expected = conjecture_expected(n, m)
            res = search_extremal(ClassFilter(n, edges=m), "max")
            same = {canonical_key(g) for g in expected} == {canonical_key(g) for g in res.optima}
            pred = eci(expected[0])
            ok = same and pred == res.value
            print(f"{n:<2d} {m:<3d} {d:<2d} {k:<2d} {pred:<10d} {res.value:<9d} {len(res.optima):<8d} {'yes' if ok else 'NO'}")
            if not ok:
                for g in res.optima:
                    print(f"      optimum {encode_graph6(g)}")


if __name__ == "__main__":
    main()
