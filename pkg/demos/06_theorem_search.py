"""Search for a rectangle representation of the 2-tree G.

The construction check is instant.  The search itself may run for hours at
k=5; this script gives it a budget and writes statistics to a checkpoint
file as it goes.  Usage: python 06_theorem_search.py [k] [seconds]
"""

import sys

from boxkit import Budget, check_theorem_decomposition, check_theorem_full

k = int(sys.argv[1]) if len(sys.argv) > 1 else 2
seconds = float(sys.argv[2]) if len(sys.argv) > 2 else 60

rep = check_theorem_decomposition(k)
print(f"G({k}): n={rep['n']} m={rep['m']}, {rep['verified']}/{len(rep['embeddings'])} embeddings ok")

v = check_theorem_full(Budget(seconds=seconds), k=k, checkpoint="theorem_checkpoint.json")
meaning = {"verified": "no rectangle representation exists",
           "refuted": "found a rectangle representation",
           "undecided": "budget ran out"}[v.status]
st = v.stats
print(f"search: {v.status} ({meaning}) after {st['seconds']:.1f}s, "
      f"{st.get('rounds', 0)} refinement rounds, {st.get('axioms_added', 0)} axioms added")
