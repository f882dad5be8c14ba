"""Hand an instance to any DIMACS solver and read its answer back.

The internal solver stands in for the external one here; swap in
`minisat in.cnf out.txt` or similar and feed the model file to
`boxkit import-model`.
"""

from boxkit import export_cnf, import_model
from boxkit.graph import cycle_graph
from boxkit.solver import Solver

g = cycle_graph(5)
text, varmap = export_cnf(g, 2)
header = [line for line in text.splitlines() if line.startswith("p ")][0]
print(f"C5 in the plane: {header}, {len(varmap.atoms)} named atoms")

nvars = int(header.split()[2])
clauses = [[int(t) for t in line.split()[:-1]] for line in text.splitlines()
           if line and line[0] not in "cp"]
s = Solver()
s.ensure_vars(nvars)
s.add_clauses(clauses)
assert s.solve()
model = [v + 1 if b else -(v + 1) for v, b in enumerate(s.model())]

rep = import_model(varmap, model, g)
print("decoded and verified representation:")
print(rep.to_text(), end="")
