"""Audit the quoted closed-form reduced matrices against exact numerics.

The library carries verbatim transcriptions of the published closed forms
for all four bipartitions under both channels (equation ids r1ad..r4ad and
a1ad..a4ad, plus the pre-damping eq8).  Comparing them entry by entry
against the dilation-path numerics finds exactly two defective entries and
one inconsistent textual claim, each with a clean analytic residual:

  r1ad (1,1): residual p sin^2(r)/2        (quoted alpha uses 2*eps_small
                                            where gamma + eps_small belongs)
  a3ad (4,4): residual beta*p*q/4          (quoted beta*p^2; populations are
                                            preserved by dephasing, so beta*p)
  r2ad claim: the R-E_R concurrence is quoted as identically zero, yet the
              quoted matrix itself gives sqrt(pq)(beta+gamma)/2 > 0.
"""
import json
import math

from unruhx import GreekCoeffs, audit, preset_params

params = preset_params("bell")
r, p = 0.5, 0.25
report = audit(params, r, p, include_eq8=True)

print(f"audit at Bell, r = {r}, p = {p} (eq8 included)\n")
entries = report.entry_records()
mism = report.entry_mismatches()
print(f"entries compared: {len(entries)}, mismatching: {len(mism)}")
for rec in mism:
    print(
        f"  {rec.equation_id} entry {rec.entry}: quoted {rec.paper_value:.9f}, "
        f"numeric {rec.numeric_value:.9f}, residual {rec.residual:.3e}"
    )

g = GreekCoeffs.from_params(params, r, p)
print("\npredicted residuals from the analytic audit:")
print(f"  r1ad (1,1): p sin^2(r)/2 = {p * math.sin(r)**2 / 2:.9f}")
print(f"  a3ad (4,4): beta p q / 4 = {g.beta * p * (1 - p) / 4:.9f}")
print(f"  eq8  (4,4): c3 cos^2(r)/2 = {params.c3 * math.cos(r)**2 / 2:.9f}")

print("\ntextual claims:")
for rec in report.claims():
    if rec.note.startswith(("trace", "minimum")):
        continue
    verdict = "inconsistent" if rec.status == "mismatch" else "consistent"
    print(f"  [{rec.equation_id}] {verdict}: quoted {rec.paper_value:g}, computed {rec.numeric_value:.9f}")

doc = json.loads(report.to_json())
print(f"\nJSON report: {len(doc)} records; the same document is produced by")
print("  unruhx verify --preset bell --r 0.5 --p 0.25 --include-eq8 --json")
