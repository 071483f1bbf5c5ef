#!/usr/bin/env python3
"""Print the worked data the library reproduces: the alpha tables for
n = 6, 7, 8, the last_{l,k} triangle, the generalized Riordan path sets
at l = 4, and the four-vertex immanant pair that breaks the chain."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qimm.characters import alpha_table, last_table  # noqa: E402
from qimm.immanants import check_two_row_chain, immanant_tree  # noqa: E402
from qimm.paths import enumerate_paths  # noqa: E402
from qimm.trees import path_tree, star_tree  # noqa: E402


def show_table(rows, row_label):
    width = max(len(str(v)) for row in rows for v in row) + 2
    for idx, row in enumerate(rows):
        cells = "".join(str(v).rjust(width) for v in row)
        print(f"  {row_label}={idx}:{cells}")


def main():
    for n in (6, 7, 8):
        print(f"alpha_{{{n},k,i}} (rows i, columns k):")
        show_table(alpha_table(n).rows, "i")
        print()

    print("last_{l,k} triangle (diagonal = Riordan numbers):")
    show_table(last_table(9).rows, "l")
    print()

    print("Generalized Riordan paths of length 4 by end height:")
    for h in range(4, -1, -1):
        paths = sorted(str(p) for p in enumerate_paths("GRP", 4, h))
        print(f"  GRP(4,{h}): {len(paths):2d}  {' '.join(paths)}")
    print()

    p4, s4 = path_tree(4), star_tree(4)
    print("normalized two-row immanants on four vertices:")
    for name, tree in (("path", p4), ("star", s4)):
        for k, shape in ((1, (3, 1)), (2, (2, 2))):
            poly = immanant_tree(tree, shape, normalized=True)
            print(f"  {name}: shape {shape}: {poly}")
    print()
    print("chain verdicts (the path fails at k=2 for large |q|):")
    for name, tree in (("path", p4), ("star", s4)):
        for v in check_two_row_chain(tree):
            state = "holds" if v.holds else "FAILS"
            print(f"  {name} k={v.params['k']}: {state}  "
                  f"difference = {v.witness}")


if __name__ == "__main__":
    main()
