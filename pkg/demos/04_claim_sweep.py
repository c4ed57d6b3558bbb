"""
Sweeping every claim over families and random graphs
====================================================
"""

# %%
from indrecon import check_all, wheel
from indrecon.verify import sweep_families

for res in check_all(wheel(7), 3):
    print(f"{res.claim_id:4s} {res.status:8s} {res.details}")

# %%
summary = sweep_families(max_n=8, seed=1, random_count=20)
for cid, counts in summary["claims"].items():
    print(cid, counts)
for f in summary["failures"]:
    print("FAIL", f["claim_id"], f["instance"], f["details"])
