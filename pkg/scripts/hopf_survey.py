"""Galois detection, antipodes, SAYD verdicts and the degrees where LR differs from 1."""
from duplicial import hopf
from duplicial.simplicial import hc_of_duplicial


def coefficient_choices(B):
    yield "trivial", hopf.trivial_coefficients(B)
    N = hopf.trivial_coefficients(B)[1]
    if B.dim >= 2:
        chi = [1 if h == 0 else -1 for h in range(B.dim)] if B.dim == 2 else [1] * B.dim
        yield "character, coaction g", (hopf.character_coefficients(B, chi, 1), N)
        yield "regular, coaction g", (hopf.regular_right_coefficients(B, 1), N)


def main():
    for B in hopf.bialgebra_catalog():
        hs = hopf.is_hopf_and_antipode(B)
        print(f"{B.name} over {B.field}: ", end="")
        if not hs:
            print(f"not Hopf ({hs.reason}, rank {hs.rank} of {B.dim ** 2})")
            continue
        print("Hopf, antipode", hs.antipode.to_json())
        for label, (M, N) in coefficient_choices(B):
            sayd = hopf.sayd_check(hs, M, N)
            y, eng = hopf.hopf_cyclic_module(hs, M, N, top=4)
            bad = hopf.lr_report(eng, 3)
            hc = hc_of_duplicial(y)
            print(f"  {label:<24} SAYD {str(sayd):<5}  LR != 1 at {bad}  HC {hc}")


if __name__ == "__main__":
    main()
