"""Run a small property campaign and print the matrix; '*' marks cells not expected to hold."""

import sys

from worldviews.properties import campaign, matrix_mismatches

seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 50
result = campaign(range(seeds))
for prop, row in result["cells"].items():
    cells = "  ".join(f"{s}:{c['violations']:>2}/{c['checked']:<3}{'' if c['expected'] else '*'}" for s, c in row.items())
    print(f"{prop:<24} {cells}")
print(f"skipped checks (size caps): {len(result['skipped'])}")
print(f"cells disagreeing with the expected matrix: {matrix_mismatches(result) or 'none'}")
for prop in ("constraint-monotonicity", "splitting", "foundedness"):
    for s, cell in result["cells"][prop].items():
        if cell["examples"]:
            print(f"  {prop}/{s}: {cell['examples'][0]}")
