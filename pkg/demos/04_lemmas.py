"""Machine-check the lemmas.

Each solver-backed lemma becomes "find a rectangle representation of this
gadget that breaks the conclusion"; the lemma holds when that search is
refuted.  Pass --all to include the largest query (about a minute).
"""

import sys

from boxkit import Budget, check_lemma

lemmas = ["pendant", "difference", "corner", "helly", "projection", "cross"]
if "--all" in sys.argv:
    lemmas.append("main")

for lemma in lemmas:
    v = check_lemma(lemma, Budget(seconds=600), samples=20_000)
    print(f"{lemma:>10}: {v.status:9s} {v.stats.get('seconds', 0):6.2f}s")
    for q in v.queries:
        if "constraints" in q:
            print(f"{'':12}{q['gadget_n']} vertices, {', '.join(q['constraints'])} -> {q['outcome']}")

# a narrow fan is not enough: with one fan vertex, a and b can cross
v = check_lemma("cross", Budget(seconds=60), k=1)
print("\ncross with k=1:", v.status)
print(v.counterexample.to_text(), end="")
