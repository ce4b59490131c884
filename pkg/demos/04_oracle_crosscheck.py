"""
Brute-force cross-check
=======================

Scan every permutation of 1..n and compare what is actually realized with
what the slack rule predicts.
"""

import sys
import tempfile
from pathlib import Path

from pinnacles import dump_csv, enumerate_admissible_orderings, oracle_orderings, scan, verify_against_core

result = scan(7)
realized = sorted(oracle_orderings(result, (3, 5, 7)))
print("S_7 realizes for {3,5,7}:", [f"{a} x{result.by_set[a.base][a]}" for a in realized])
print("predicted:", [str(a) for a in enumerate_admissible_orderings((3, 5, 7))])

top = int(sys.argv[1]) if len(sys.argv) > 1 else 9
for n in range(1, top + 1):
    print(verify_against_core(n).summary())

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "s7.csv"
    rows = dump_csv(result, path)
    print(f"\n{rows} rows; head of the CSV dump:")
    print("\n".join(path.read_text().splitlines()[:6]))
