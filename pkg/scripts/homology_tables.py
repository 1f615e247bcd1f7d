"""HH, HC and twisted HC of the algebra catalog, with both HC routes side by side."""
import argparse
import time

from duplicial import hochschild as hh
from duplicial.linalg import GF, QQ
from duplicial.simplicial import cyclic_failure_degree, hc_of_duplicial, hh_betti


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--top", type=int, default=5)
    ap.add_argument("--prime", type=int, default=0, help="work over GF(p) instead of Q")
    args = ap.parse_args()
    field = GF(args.prime) if args.prime else QQ
    print(f"field {field}, top degree {args.top}")
    print(f"{'algebra':<12} {'HH':<20} {'HC (pi_! K)':<20} {'HC (P F)':<20} sec")
    for A in hh.algebra_catalog(field):
        t0 = time.perf_counter()
        x = hh.hochschild_cyclic_module(A, top=args.top)
        a, b = hc_of_duplicial(x, "via_pi_shriek_K"), hc_of_duplicial(x, "via_P_F")
        print(f"{A.name:<12} {str(hh_betti(x)):<20} {str(a):<20} {str(b):<20} {time.perf_counter() - t0:.2f}")
    print()
    print(f"{'algebra':<12} {'sigma':<22} {'fails t^(n+1)=1 at':<20} HC_sigma")
    for A, s in hh.sigma_catalog(field):
        x = hh.twisted_module(A, s, args.top)
        fail = cyclic_failure_degree(x)
        print(f"{A.name:<12} {s.name:<22} {str(fail):<20} {hc_of_duplicial(x)}")


if __name__ == "__main__":
    main()
