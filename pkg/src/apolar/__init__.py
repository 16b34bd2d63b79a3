"""Exact computations with graded Artinian Gorenstein algebras.

Subpackages cover exact linear algebra, graded polynomial rings with their
divided-power duals, Macaulay growth combinatorics, inverse systems and
catalecticants, nets of quadrics, Gorenstein-sequence decision procedures,
and explicit graded free resolutions.
"""

__version__ = "0.1.0"
