#!/usr/bin/env python3
"""DIMACS front end over python-sat for machines without a native solver.

Usage: pysat-dimacs.py [--solver NAME] FILE.cnf
Prints `s SATISFIABLE` + `v` lines or `s UNSATISFIABLE`; exits 10 / 20.
"""
import sys

from pysat.solvers import Solver


def read_clauses(path):
    clauses, current = [], []
    with open(path) as fh:
        for line in fh:
            if not line.strip() or line[0] in "cp%":
                continue
            for tok in line.split():
                v = int(tok)
                if v == 0:
                    clauses.append(current)
                    current = []
                else:
                    current.append(v)
    return clauses


def main(argv):
    name = "cadical153"
    args = list(argv)
    if len(args) >= 2 and args[0] == "--solver":
        name, args = args[1], args[2:]
    if len(args) != 1:
        print("usage: pysat-dimacs.py [--solver NAME] FILE.cnf", file=sys.stderr)
        return 1
    with Solver(name=name, bootstrap_with=read_clauses(args[0])) as s:
        if s.solve():
            print("s SATISFIABLE")
            print("v " + " ".join(str(v) for v in s.get_model() or []) + " 0")
            return 10
        print("s UNSATISFIABLE")
        return 20


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
