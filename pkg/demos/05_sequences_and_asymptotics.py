"""Integer sequences, b-files and mean values for large n."""
import tempfile
from pathlib import Path

from pairedpaths.reports import GOLDEN, asymptotics, check_golden, export_bfile, sequence

rec = sequence("slice-x2x3^2x4-F2345", 12)
print(rec.name, rec.oeis, "offset", rec.offset, rec.terms)

with tempfile.TemporaryDirectory() as d:
    path = export_bfile("exactly1-P1", Path(d) / "b002057.txt", N=10)
    print(path.read_text())

# printed values that enumeration contradicts are kept next to the correction
for name, g in GOLDEN.items():
    if g.overrides:
        chk = check_golden(name)
        for n, v in g.overrides.items():
            print(f"{name}: printed {g.printed[n - g.offset]} at n={n}, computed {v}, ok={chk.passed}")
print()

rep = asymptotics("P2,P5", n_max=40)
print("mean bounces against", rep.target.printed)
for r in rep.rows[7::8]:
    print(f"{r.n:>3} {float(r.exact):10.4f} {r.asymptote:10.4f} {r.rel_gap:.4f}")
print("relative gap shrinks from n = 8:", rep.gap_shrinks())
