"""Exact computer algebra for anticyclic operad characters.

Building blocks: integer partitions and symmetric group characters
(combinat), truncated symmetric functions in the power-sum basis with
plethysm, suspension and the Legendre transform (symfunc), the two
non-symmetric binary operads with their cyclic-group actions (nsoperad),
brute-force induced modules over the symmetric groups (symoperad), the
closed-form character series (characters), and a verification CLI (cli).
"""

from .exact import QQ
from .symfunc import SymFunc

__version__ = "0.1.0"

__all__ = ["QQ", "SymFunc", "__version__"]
