#!/usr/bin/env python3
"""Exhaustive small-poset sweep: generate every poset up to isomorphism,
keep the (3+1)-free ones, and cross-check their chromatic expansions
against direct coloring counts.  Exits nonzero on any mismatch.

Usage: corpus_sweep.py [--max-elements N] [--seed S] [--format text|json]
"""

import sys

from rimhook.cli import main

if __name__ == "__main__":
    sys.exit(main(["corpus", *sys.argv[1:]]))
