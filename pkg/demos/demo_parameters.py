"""Walk through the closed-form parameters of a few Grassmann codes.

The length of C(ell, m) is the Gaussian binomial [m ell]_q, the dimension
is the plain binomial C(m, ell), the minimum distance is q^(ell(m-ell)),
and for 2 <= ell <= m-2 the second smallest weight is d + q^(ell(m-ell)-2).
"""

from grasscodes import CodeSpec, GF, gaussian_binomial
from grasscodes.codes import min_distance, second_min_weight
from grasscodes.qcombin import e_bound, e_prime_bound


def main() -> None:
    for q, ell, m in [(2, 2, 4), (3, 2, 4), (2, 2, 5), (2, 3, 6), (4, 2, 4)]:
        field = GF(2, 2) if q == 4 else GF(q)
        spec = CodeSpec(field, ell, m)
        print(f"{spec.describe()}")
        print(f"  n  = [m ell]_q           = {spec.n}")
        print(f"  k  = C(m, ell)           = {spec.k}")
        print(f"  d  = q^(ell(m-ell))      = {min_distance(spec)}")
        if 2 <= ell <= m - 2:
            print(f"  d2 = d + q^(ell(m-ell)-2) = {second_min_weight(spec)}")
        print(f"  largest hyperplane section e  = {e_bound(ell, m, q)}")
        if ell * (m - ell) >= 2:
            print(f"  second largest section   e' = {e_prime_bound(ell, m, q)}")
        assert spec.n == gaussian_binomial(m, ell, q)
        print()


if __name__ == "__main__":
    main()
