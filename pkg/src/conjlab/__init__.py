"""conjlab: exact enumeration, verification and search for small combinatorial conjectures."""

__version__ = "0.1.0"
