"""anbn-residues: residues of a^n + bn modulo m and the conjectures around them."""

__version__ = "0.1.0"
