"""Duplicial and cyclic structures on nerves of the category catalog."""
import time

from duplicial import nerve as nv


def main():
    print(f"{'category':<18} {'|Mor|':>5}  {'verdict':<26} {'witness':<10} {'coreflectors':>12}")
    t0 = time.perf_counter()
    for C in nv.category_catalog():
        v = nv.cyclic_iff_groupoid(C, 4)
        if not v.duplicial:
            verdict = "no duplicial structure"
        elif v.cyclic_failure is None:
            verdict = "cyclic"
        else:
            verdict = f"duplicial, not cyclic ({v.cyclic_failure})"
        w = "-" if v.witness is None else "{" + ",".join(v.witness.subcategory) + "}"
        n = len(nv.all_coreflectors(C))
        print(f"{C.name:<18} {len(C.morphisms):>5}  {verdict:<26} {w:<10} {n:>12}")
    print(f"total {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
