"""Branching of irreducible modular representations from GL_n(q) to SL_n(q).

Modules:

* ``numth``: prime powers, l-parts, the lifting-the-exponent check
* ``gfq``: multiplicative model of the tower of finite fields over F_q
* ``partitions``: partitions, dominance, hooks and the JM predicate
* ``symbols``: admissible symbols, branching numbers, the star and theta maps
* ``classcount``: parametric conjugacy classes of GL_n(q) and R_n(q)
* ``oracle``: explicit matrix groups used as ground truth
* ``verify``: verification suites comparing the two
"""

from .errors import CapacityError

__version__ = "0.1.0"

__all__ = ["CapacityError", "__version__"]
