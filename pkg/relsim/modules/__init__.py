# relsim/modules/__init__.py
"""Domain modules: scalar field, spacetime, groups, lattice, relations, synchrony, theorems."""
