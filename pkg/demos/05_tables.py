"""Multiplicities of Specht modules in H^*(F; C) for Sym3..Sym5.

Run: python demos/05_tables.py [N]
"""

import sys

from ncalgebra.cli import table_caption
from ncalgebra.reps import appendix_table, format_partition, specht

top = int(sys.argv[1]) if len(sys.argv) > 1 else 5

u = specht(3, (2, 1))
print("S_(2,1): dim", u.dim, "generators", u.generators)

for n in range(3, top + 1):
    t = appendix_table(n)
    print()
    print(table_caption(t.group, t.poincare))
    for row in t.rows:
        names = ", ".join(format_partition(tuple(p)) for p in row["partitions"])
        print(f"  {names:<22} {row['values']}")

# over M the total recovers prod (1 + m_i t)
m = appendix_table(4, space="M")
print("\nSym4 over M:", m.poincare)
