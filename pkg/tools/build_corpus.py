"""Regenerate the bundled presentation files under src/monodromy/data."""

import pathlib

from monodromy import presentation
from monodromy.corpus import (cyclic_group_algebra, cyclic_r, cyclotomic_cyclic_group_algebra, function_algebra,
                              s3_group_algebra, s3_table, sweedler_h4, sweedler_r)
from monodromy.double import drinfeld_double

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "monodromy" / "data"


def main():
    OUT.mkdir(exist_ok=True)
    files = {}
    Z2 = cyclic_group_algebra(2)
    Z2.name = "Q[Z2]"
    files["z2_group"] = (Z2, None)
    Z3 = cyclic_group_algebra(3)
    Z3.name = "Q[Z3]"
    files["z3_group"] = (Z3, None)
    files["s3_group"] = (s3_group_algebra(), None)
    table, labels = s3_table()
    F = function_algebra(table, labels, name="Q[S3]")
    F.name = "Q^S3"
    files["s3_functions"] = (F, None)
    C3 = cyclotomic_cyclic_group_algebra(3)
    C3.name = "Q(z3)[Z3]"
    files["z3_cyclotomic"] = (C3, {"k1": cyclic_r(C3, 1), "k2": cyclic_r(C3, 2)})
    H4 = sweedler_h4()
    files["sweedler_h4"] = (H4, {f"R{lam}": sweedler_r(H4, lam) for lam in (0, 1, 2)})
    D = drinfeld_double(cyclic_group_algebra(2))
    D.name = "D(Q[Z2])"
    files["double_z2"] = (D, {"R_D": D.R_D})
    for name, (A, rs) in files.items():
        presentation.dump(A, OUT / f"{name}.json", rs)
        print("wrote", name)


if __name__ == "__main__":
    main()
