"""Minimal external solver speaking the adapter contract: reads a DIMACS
file given as argv[1], prints SAT/UNSAT and a model line."""

import sys

from pysat.formula import CNF
from pysat.solvers import Minisat22

cnf = CNF(from_file=sys.argv[1])
with Minisat22(bootstrap_with=cnf.clauses) as s:
    if s.solve():
        print("SAT")
        print(" ".join(str(l) for l in s.get_model()) + " 0")
    else:
        print("UNSAT")
