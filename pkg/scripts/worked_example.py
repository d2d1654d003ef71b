"""Full spectrum and jumping coefficients of (x^2-y^2)(x^2-z^2)(y^2-z^2)z by every route."""

from arrspec.examples import mustata_7
from arrspec.jumping import jc_cor1, jc_unit_interval
from arrspec.lattice import betti_complement, build
from arrspec.linalg import fmt_rational
from arrspec.polyoracle import independence_rank
from arrspec.spectrum import check_sum_rule, spectrum_hrr, spectrum_n3, spectrum_unit_general


def main():
    arr = mustata_7()
    lat = build(arr)
    formula, oracle, hrr = spectrum_n3(lat), spectrum_unit_general(arr, lat), spectrum_hrr(arr)
    print(f"betti {betti_complement(lat).betti}, chi(U) = {betti_complement(lat).chi}")
    print(f"{'alpha':>6} {'formula':>8} {'oracle':>7} {'hrr':>5}")
    for a in formula.alphas():
        o = oracle.entries.get(a, "")
        print(f"{fmt_rational(a):>6} {formula[a]:>8} {o!s:>7} {hrr[a]:>5}")
    print("sum rule ok:", check_sum_rule(formula, lat).ok)
    print("rank of the triple-point conditions on quadrics:", independence_rank(arr, 5, lat))
    for rep in (jc_unit_interval(arr, lat), jc_cor1(lat)):
        print(f"{rep.method}: {{{', '.join(fmt_rational(a) for a in rep.coefficients)}}}")


if __name__ == "__main__":
    main()
