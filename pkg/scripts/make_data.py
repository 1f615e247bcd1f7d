"""Write the catalog inputs used in the README and CLI tests to data/."""
import json
import sys
from pathlib import Path

from duplicial import hochschild as hh, hopf, nerve as nv

out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data")
out.mkdir(exist_ok=True)


def dump(name, obj):
    (out / name).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


for fname, A in [("Q.json", hh.ground_field()), ("dual.json", hh.dual_numbers()),
                 ("T2.json", hh.upper_triangular()), ("C3.json", hh.group_algebra(3)),
                 ("M2.json", hh.matrix_algebra())]:
    dump(fname, A.to_json())

for A, s in hh.sigma_catalog()[1:4]:
    tag = {"x -> -x": "dual_neg", "g -> g^2": "C3_inv", "e0 -> e1 -> e2 -> e0": "K3_rot"}[s.name]
    if tag == "K3_rot":
        dump("K3.json", A.to_json())
    dump(f"sigma_{tag}.json", {"matrix": [[A.field.fmt(v) for v in row] for row in s.matrix.to_dense()],
                               "name": s.name})

for fname, B in zip(["hopf_k.json", "hopf_C2.json", "hopf_C3.json", "idem.json", "hopf_C2_F2.json"],
                    hopf.bialgebra_catalog()):
    dump(fname, B.to_json())

for C in nv.category_catalog():
    slug = C.name.replace(" ", "_").replace("/", "").replace("{", "").replace("}", "").replace(",", "_")
    dump(f"cat_{slug}.json", C.to_json())
print(f"wrote {len(list(out.glob('*.json')))} files to {out}")
