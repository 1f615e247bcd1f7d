"""Monad/comonad laws, the mixed laws, the L+ bimonad and entwined-algebra counts."""
import time

from duplicial import setlaws as sl


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"{label:<34} {out}  ({time.perf_counter() - t0:.2f} s)")


def main():
    for name in sl.STRUCTURES:
        timed(f"structure {name}", lambda: "ok" if sl.check_laws(name, size=2).ok else "FAILED")
    for name in sl.LAW_NAMES + ("U/M",):
        timed(f"mixed law {name}", lambda: "ok" if sl.mixed_law_report(sl.mixed_law(name), 2).ok else "FAILED")
    _, rep = sl.lplus_bimonad(2, 4)
    print("L+ bimonad:", "ok" if rep.ok else "FAILED", "|", "; ".join(rep.notes))
    for name in ("L+/L+", "P/C", "L/C"):
        timed(f"entwined {name}, carriers <= 3", lambda: len(sl.entwined_enumerate(name, 3)))
    char = sum(len(sl.sup_lattice_colourings(list(range(n)))) for n in range(4))
    print(f"sup-lattices with join-preserving colourings, <= 3 points: {char}")
    char = sum(len(sl.monoid_colourings(n)) for n in range(4))
    print(f"monoids with sup-homomorphic colourings, <= 3 elements: {char}")


if __name__ == "__main__":
    main()
