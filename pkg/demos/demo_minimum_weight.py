"""The minimum-weight classification, hands on.

A hyperplane of the Pluecker space cuts the Grassmannian in the largest
possible number of points exactly when its wedge element is decomposable,
so the codewords of minimum weight q^(ell(m-ell)) are precisely the
decomposable classes, and there are [m ell]_q of them (as many as there
are points of the Grassmannian itself).
"""

from grasscodes import CodeSpec, GF, gaussian_binomial
from grasscodes.codes import class_weights, min_distance, point_table
from grasscodes.exterior import (DualFunctional, check_functional,
                                 functional_to_wedge, parse_functional)


def main() -> None:
    field = GF(2)
    spec = CodeSpec(field, 2, 4)
    table = point_table(spec)
    d = min_distance(spec)
    print(f"{spec.describe()}: minimum distance {d}")

    n_min = n_dec = 0
    for vec, w in class_weights(spec, table):
        func = DualFunctional.from_vector(vec, 2, 4, field)
        dec = check_functional(func)
        n_min += w == d
        n_dec += dec
        assert (w == d) == dec
    print(f"minimum-weight classes: {n_min}")
    print(f"decomposable classes:   {n_dec}")
    print(f"[4 2]_2:                {gaussian_binomial(4, 2, 2)}")
    print()

    for text in ["X:3,4", "X:1,2 + X:3,4"]:
        func = parse_functional(text, 2, 4, field)
        z = functional_to_wedge(func)
        print(f"{func}  ->  wedge {z}  ->  "
              f"{'decomposable' if check_functional(func) else 'nondecomposable'}")


if __name__ == "__main__":
    main()
