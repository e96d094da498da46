#!/usr/bin/env python3
"""Run the randomized inequality verification sweep at full scale."""

import sys

from entbounds.cli import main

if __name__ == "__main__":
    sys.exit(main([
        "verify",
        "--qubits", "4",
        "--trials", "1000",
        "--exponents", "0.5,1,1.5,2",
        "--seed", "42",
        "--tol", "1e-9",
    ] + sys.argv[1:]))
